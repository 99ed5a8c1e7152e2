// Copyright 2026 The explmine Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "explmine/error.h"
#include "explmine/wiki.h"
#include "test_util.h"

namespace explmine {
namespace {

struct Fixture {
  SentencePair pair;
  Candidate cand;
  WikiIndex src{"en"};
  WikiIndex tgt{"de"};
  ParallelTitles ptitles{"en", "de"};

  Fixture() {
    pair.src_tokens = SplitTokens("John Bunyan said .");
    pair.tgt_tokens = SplitTokens("John Bunyan , der Autor , hat gesagt .");
    pair.alignment = {{0, 0}, {1, 1}, {2, 6}, {2, 7}, {3, 8}};
    cand.k = 1;
    cand.m = 1;
    cand.span_len = 4;
    cand.stage = Stage::kNer;
    cand.ne_span = TokenRange{0, 2};
  }

  WikiDecision Decide() {
    WikiDecision d{};
    WikiFilter(cand, src, tgt, ptitles, pair, &d);
    return d;
  }
};

TEST_CASE("decision table") {
  CHECK(DecideWiki(std::nullopt, std::nullopt) == WikiDecision::kNoSrcTitle);
  CHECK(DecideWiki(std::nullopt, 5) == WikiDecision::kNoSrcTitle);
  CHECK(DecideWiki(5, std::nullopt) == WikiDecision::kSrcOnly);
  CHECK(DecideWiki(6, 5) == WikiDecision::kSrcLarger);
  CHECK(DecideWiki(5, 5) == WikiDecision::kTgtCovers);
  CHECK(DecideWiki(4, 5) == WikiDecision::kTgtCovers);
  CHECK(KeepsCandidate(WikiDecision::kSrcOnly));
  CHECK(KeepsCandidate(WikiDecision::kSrcLarger));
  CHECK_FALSE(KeepsCandidate(WikiDecision::kTgtCovers));
  CHECK_FALSE(KeepsCandidate(WikiDecision::kNoSrcTitle));
}

TEST_CASE("wiki filter") {
  Fixture f;
  CHECK(f.Decide() == WikiDecision::kNoSrcTitle);

  f.src.AddArticle("John Bunyan", 5000);
  CHECK(f.Decide() == WikiDecision::kSrcOnly);
  auto kept = WikiFilter(f.cand, f.src, f.tgt, f.ptitles, f.pair, nullptr);
  REQUIRE(kept);
  CHECK(kept->stage == Stage::kWiki);
  CHECK(kept->wiki_decision == WikiDecision::kSrcOnly);

  // Projection through the alignment finds "John Bunyan" on the target side.
  f.tgt.AddArticle("John Bunyan", 1200);
  CHECK(f.Decide() == WikiDecision::kSrcLarger);
  f.tgt.AddArticle("John Bunyan", 5000);
  CHECK(f.Decide() == WikiDecision::kTgtCovers);
  CHECK_FALSE(WikiFilter(f.cand, f.src, f.tgt, f.ptitles, f.pair, nullptr));

  // A parallel title takes precedence over projection.
  f.ptitles.Add("John Bunyan", "Bunyan");
  CHECK(f.Decide() == WikiDecision::kSrcOnly);
  f.tgt.AddArticle("Bunyan", 10);
  CHECK(f.Decide() == WikiDecision::kSrcLarger);

  Candidate span = f.cand;
  span.stage = Stage::kSpan;
  CHECK_THROWS_AS(WikiFilter(span, f.src, f.tgt, f.ptitles, f.pair, nullptr), Error);
}

TEST_CASE("target counterpart") {
  Fixture f;
  CHECK(TargetCounterpart(f.cand, f.pair, f.ptitles, "en", "de") == "john bunyan");
  f.pair.alignment = {{2, 6}};
  CHECK_FALSE(TargetCounterpart(f.cand, f.pair, f.ptitles, "en", "de"));
  f.ptitles.Add("John Bunyan", "John Bunyan (Autor)");
  CHECK(TargetCounterpart(f.cand, f.pair, f.ptitles, "en", "de") ==
        StemTitle("John Bunyan (Autor)", "de"));
}

TEST_CASE("titles are stemmed and lowercased") {
  CHECK(StemTitle("John Bunyan", "en") == "john bunyan");
  CHECK(StemTitle("Running Dogs", "en") == "run dog");
  CHECK(StemTitle("", "en").empty());
  WikiIndex index("en");
  index.AddArticle("Dogs", 10);
  index.AddArticle("dog", 30);
  index.AddArticle("DOG", 20);
  index.AddArticle("", 99);
  CHECK(index.size() == 1);
  REQUIRE(index.Find("dog") != nullptr);
  CHECK(index.Find("dog")->size == 30);
  CHECK(index.Find("dog")->raw_title == "Dogs");
}

TEST_CASE("extractor formats") {
  std::istringstream blocks(
      "<doc id=\"1\" url=\"u\" title=\"A &amp; B\">\nA & B\n\nfirst line\nsecond\n</doc>\n"
      "<doc id=\"2\" title=\"Empty\">\nEmpty\n</doc>\n");
  WikiIndex a = BuildWikiIndex(blocks, "en");
  CHECK(a.size() == 2);
  REQUIRE(a.Find(StemTitle("A & B", "en")) != nullptr);
  CHECK(a.Find(StemTitle("A & B", "en"))->size == std::string("first line\nsecond").size());
  CHECK(a.Find("empti")->size == 0);

  std::istringstream jsonl(R"({"id":"1","title":"Zeta","text":"abc"})" "\n");
  WikiIndex b = BuildWikiIndex(jsonl, "en");
  CHECK(b.Find("zeta")->size == 3);

  std::istringstream unterminated("<doc title=\"X\">\nbody\n");
  CHECK_THROWS_AS(BuildWikiIndex(unterminated, "en"), Error);
  std::istringstream bad_json("{\"title\":1}\n");
  CHECK_THROWS_AS(BuildWikiIndex(bad_json, "en"), Error);
}

TEST_CASE("title index round trip") {
  WikiIndex index = BuildWikiIndex(
      std::vector<Article>{{"John Bunyan", "abcdef"}, {"Super Bowl", "xy"}, {"Bowl", ""}}, "en");
  std::stringstream ss;
  WriteWikiIndex(index, ss);
  CHECK(ss.str() == "bowl\tBowl\t0\njohn bunyan\tJohn Bunyan\t6\nsuper bowl\tSuper Bowl\t2\n");
  CHECK(ReadWikiIndex(ss, "en", "mem") == index);
  CHECK(index.max_title_words() == 2);

  std::istringstream bad("x\tX\n");
  CHECK_THROWS_AS(ReadWikiIndex(bad, "en", "mem"), Error);
  std::istringstream bad_size("x\tX\t-1\n");
  CHECK_THROWS_AS(ReadWikiIndex(bad_size, "en", "mem"), Error);
}

TEST_CASE("parallel titles") {
  std::istringstream in("John Bunyan\tJohn Bunyan\nJohn Bunyan\tOther\n\nTea\tTee\n");
  Diagnostics diag;
  ParallelTitles t = ReadParallelTitles(in, "en", "de", "mem", &diag);
  CHECK(t.size() == 2);
  CHECK(*t.Find("john bunyan") == "john bunyan");
  CHECK(diag.count() == 1);

  WikiIndex src("en");
  src.AddArticle("Tea", 1);
  Diagnostics missing;
  t.CheckAgainst(src, &missing);
  CHECK(missing.count() == 1);

  std::istringstream bad("no tab here\n");
  CHECK_THROWS_AS(ReadParallelTitles(bad, "en", "de", "mem", nullptr), Error);
}

}  // namespace
}  // namespace explmine
