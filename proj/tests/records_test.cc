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
#include "explmine/records.h"
#include "test_util.h"

namespace explmine {
namespace {

Candidate Sample() {
  Candidate c;
  c.pair_id = 0;
  c.k = 1;
  c.m = 1;
  c.span_len = 7;
  c.features = {true, true, true};
  c.stage = Stage::kWiki;
  c.ne_span = TokenRange{0, 2};
  c.wiki_decision = WikiDecision::kSrcOnly;
  c.src_tokens = SplitTokens("John Bunyan said ,");
  c.tgt_tokens = SplitTokens("John Bunyan , der Autor der bekannten Pilgerreise , hat");
  return c;
}

TEST_CASE("candidate record layout") {
  const std::string line = FormatCandidateRecord(Sample());
  CHECK(line.rfind(R"({"candidate_id":"0:1:1:7","pair_id":0,"stage":"WIKI","k":1,"m":1,)"
                   R"("span_start":2,"span_len":7,)", 0) == 0);
  CHECK(line.find(R"("ne_span":[0,2],"wiki_decision":"SRC_ONLY")") != std::string::npos);
  CHECK(ParseCandidateRecord(line, 1) == Sample());

  Candidate span = Sample();
  span.stage = Stage::kSpan;
  span.ne_span.reset();
  span.wiki_decision.reset();
  const std::string span_line = FormatCandidateRecord(span);
  CHECK(span_line.find(R"("ne_span":null,"wiki_decision":null)") != std::string::npos);
  CHECK(ParseCandidateRecord(span_line, 1) == span);
}

TEST_CASE("re-export is byte identical") {
  std::vector<Candidate> cands = {Sample()};
  Candidate other = Sample();
  other.pair_id = 3;
  other.stage = Stage::kNer;
  other.wiki_decision.reset();
  cands.push_back(other);
  testing::TempDir dir;
  WriteCandidates(cands, dir / "a.jsonl");
  const auto loaded = ReadCandidates(dir / "a.jsonl");
  CHECK(loaded == cands);
  WriteCandidates(loaded, dir / "b.jsonl");
  CHECK(testing::ReadText(dir / "a.jsonl") == testing::ReadText(dir / "b.jsonl"));
}

TEST_CASE("inconsistent candidate records are rejected") {
  const std::string good = FormatCandidateRecord(Sample());
  auto replaced = [&](const std::string& from, const std::string& to) {
    std::string s = good;
    s.replace(s.find(from), from.size(), to);
    return s;
  };
  CHECK_THROWS_AS(ParseCandidateRecord(replaced("\"span_start\":2", "\"span_start\":3"), 1), Error);
  CHECK_THROWS_AS(ParseCandidateRecord(replaced("0:1:1:7", "0:1:1:6"), 1), Error);
  CHECK_THROWS_AS(ParseCandidateRecord(replaced("\"span_len\":7", "\"span_len\":9"), 1), Error);
  CHECK_THROWS_AS(ParseCandidateRecord(replaced("[0,2]", "[0,9]"), 1), Error);
  CHECK_THROWS_AS(ParseCandidateRecord(replaced("\"WIKI\"", "\"FINAL\""), 1), Error);
  CHECK_THROWS_AS(ParseCandidateRecord("{}", 1), Error);
  try {
    ParseCandidateRecord("nope", 12);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).rfind("malformed candidate record at line 12", 0) == 0);
  }
}

}  // namespace
}  // namespace explmine
