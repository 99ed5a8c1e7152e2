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

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "explmine/corpus.h"
#include "explmine/error.h"
#include "test_util.h"

namespace explmine {
namespace {

using testing::TempDir;
using testing::WriteText;

std::string ErrorOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

TEST_CASE("load parallel corpus") {
  TempDir dir;
  WriteText(dir / "s", "a b\n");
  WriteText(dir / "t", "x y z\n");
  auto pairs = LoadParallelCorpus(dir / "s", dir / "t");
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].id == 0);
  CHECK(pairs[0].src_tokens == std::vector<std::string>{"a", "b"});
  CHECK(pairs[0].tgt_tokens == std::vector<std::string>{"x", "y", "z"});
  CHECK(pairs[0].alignment.empty());
}

TEST_CASE("empty files give an empty stream") {
  TempDir dir;
  WriteText(dir / "s", "");
  WriteText(dir / "t", "");
  CHECK(LoadParallelCorpus(dir / "s", dir / "t").empty());
}

TEST_CASE("line count mismatch names both counts") {
  TempDir dir;
  WriteText(dir / "s", "a\nb\n");
  WriteText(dir / "t", "x\ny\nz\n");
  CHECK(ErrorOf([&] { LoadParallelCorpus(dir / "s", dir / "t"); }) ==
        "line count mismatch 2 vs 3");
  WriteText(dir / "s", "a\nb\nc\nd\n");
  CHECK(ErrorOf([&] { LoadParallelCorpus(dir / "s", dir / "t"); }) ==
        "line count mismatch 4 vs 3");
}

TEST_CASE("missing corpus file names the path") {
  TempDir dir;
  WriteText(dir / "t", "x\n");
  const std::string msg = ErrorOf([&] { LoadParallelCorpus(dir / "nope", dir / "t"); });
  CHECK(msg.find(dir / "nope") != std::string::npos);
}

TEST_CASE("empty lines are skipped and counted, ids stay line numbers") {
  TempDir dir;
  WriteText(dir / "s", "a\n\nc\nd\r\n");
  WriteText(dir / "t", "x\ny\n\nw\n");
  std::size_t skipped = 0;
  auto pairs = LoadParallelCorpus(dir / "s", dir / "t", &skipped);
  CHECK(skipped == 2);
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].id == 0);
  CHECK(pairs[1].id == 3);
  CHECK(pairs[1].src_tokens == std::vector<std::string>{"d"});
}

TEST_CASE("tokens split on spaces and tabs") {
  CHECK(SplitTokens("  a\tb  c ") == std::vector<std::string>{"a", "b", "c"});
  CHECK(SplitTokens("").empty());
  CHECK(JoinTokens({"a", "b"}) == "a b");
}

TEST_CASE("alignment lines") {
  Alignment a = ParseAlignmentLine("0-0 1-2", 1);
  CHECK(a == Alignment{{0, 0}, {1, 2}});
  CHECK(ParseAlignmentLine("", 1).empty());
  CHECK(ParseAlignmentLine("2-1 0-0 2-1", 1) == Alignment{{0, 0}, {2, 1}});
  CHECK(FormatAlignment(a) == "0-0 1-2");
  CHECK(ErrorOf([] { ParseAlignmentLine("0-0 1x2", 7); }) ==
        "malformed alignment link '1x2' at line 7");
  CHECK_THROWS_AS(ParseAlignmentLine("-1", 1), Error);
  CHECK_THROWS_AS(ParseAlignmentLine("1-", 1), Error);
  CHECK_THROWS_AS(ParseAlignmentLine("1--2", 1), Error);
}

TEST_CASE("load alignments") {
  TempDir dir;
  WriteText(dir / "s", "a b\nc d\n");
  WriteText(dir / "t", "x y z\nw\n");
  WriteText(dir / "a", "0-0 1-2\n\n");
  auto pairs = LoadParallelCorpus(dir / "s", dir / "t");
  LoadAlignments(dir / "a", pairs);
  CHECK(pairs[0].alignment == Alignment{{0, 0}, {1, 2}});
  CHECK(pairs[1].alignment.empty());
  CHECK(pairs[0].HasLink(1, 2));
  CHECK_FALSE(pairs[0].HasLink(2, 1));
  CHECK(pairs[0].SrcAligned(1));
  CHECK(pairs[0].TgtAligned(2));
  CHECK_FALSE(pairs[0].TgtAligned(1));
  CHECK(pairs[0].TargetsOf(1) == std::vector<std::uint32_t>{2});
}

TEST_CASE("out of range link names the pair") {
  TempDir dir;
  WriteText(dir / "s", "a b\n");
  WriteText(dir / "t", "x y z\n");
  WriteText(dir / "a", "5-0\n");
  auto pairs = LoadParallelCorpus(dir / "s", dir / "t");
  const std::string msg = ErrorOf([&] { LoadAlignments(dir / "a", pairs); });
  CHECK(msg.rfind("index out of range in pair 0", 0) == 0);
}

TEST_CASE("alignment file too short") {
  TempDir dir;
  WriteText(dir / "s", "a\nb\n");
  WriteText(dir / "t", "x\ny\n");
  WriteText(dir / "a", "0-0\n");
  auto pairs = LoadParallelCorpus(dir / "s", dir / "t");
  CHECK_THROWS_AS(LoadAlignments(dir / "a", pairs), Error);
}

TEST_CASE("punctuation") {
  CHECK(IsPunctuation(","));
  CHECK(IsPunctuation("("));
  CHECK_FALSE(IsPunctuation("Autor"));
  CHECK(IsPunctuation("\xEF\xBC\x88"));  // U+FF08 fullwidth left parenthesis
  CHECK(IsPunctuation("..."));
  CHECK(IsPunctuation("\xE2\x80\x9E"));  // U+201E low double quote
  CHECK(IsPunctuation("\xE3\x80\x82"));  // U+3002 ideographic full stop
  CHECK_FALSE(IsPunctuation(""));
  CHECK_FALSE(IsPunctuation(",a"));
  CHECK_FALSE(IsPunctuation("+"));  // Sm, not P*
  CHECK_FALSE(IsPunctuation("$"));  // Sc
  CHECK_FALSE(IsPunctuation("\xff"));
  for (int i = 0; i < 3; ++i) CHECK(IsPunctuation(",") == IsPunctuation(","));
}

// Random corpora survive write -> load unchanged, and every loaded link is in
// range.
TEST_CASE("corpus and alignment round trip") {
  std::mt19937 rng(7);
  const std::vector<std::string> vocab = {"a", "b", ",", "Autor", "\xE6\x89\xBF", "(", "x-y"};
  for (int round = 0; round < 20; ++round) {
    std::vector<SentencePair> pairs;
    const int n = std::uniform_int_distribution<int>(0, 30)(rng);
    for (int i = 0; i < n; ++i) {
      SentencePair p;
      p.id = i;
      const int ls = std::uniform_int_distribution<int>(1, 12)(rng);
      const int lt = std::uniform_int_distribution<int>(1, 12)(rng);
      for (int j = 0; j < ls; ++j) p.src_tokens.push_back(vocab[rng() % vocab.size()]);
      for (int j = 0; j < lt; ++j) p.tgt_tokens.push_back(vocab[rng() % vocab.size()]);
      const int links = std::uniform_int_distribution<int>(0, ls * lt)(rng);
      for (int j = 0; j < links; ++j) {
        p.alignment.push_back({static_cast<std::uint32_t>(rng() % ls),
                               static_cast<std::uint32_t>(rng() % lt)});
      }
      NormalizeAlignment(p.alignment);
      pairs.push_back(std::move(p));
    }
    TempDir dir;
    WriteParallelCorpus(pairs, dir / "s", dir / "t");
    WriteAlignments(pairs, dir / "a");
    auto loaded = LoadParallelCorpus(dir / "s", dir / "t");
    LoadAlignments(dir / "a", loaded);
    CHECK(loaded == pairs);
    for (const SentencePair& p : loaded) CHECK_NOTHROW(CheckAlignmentRange(p));
  }
}

TEST_CASE("writers fill id gaps with empty lines") {
  SentencePair p;
  p.id = 2;
  p.src_tokens = {"a"};
  p.tgt_tokens = {"b"};
  p.alignment = {{0, 0}};
  TempDir dir;
  WriteParallelCorpus({p}, dir / "s", dir / "t");
  WriteAlignments({p}, dir / "a");
  CHECK(testing::ReadText(dir / "s") == "\n\na\n");
  CHECK(testing::ReadText(dir / "a") == "\n\n0-0\n");
  std::size_t skipped = 0;
  auto loaded = LoadParallelCorpus(dir / "s", dir / "t", &skipped);
  LoadAlignments(dir / "a", loaded);
  CHECK(skipped == 2);
  REQUIRE(loaded.size() == 1);
  CHECK(loaded[0] == p);
}

}  // namespace
}  // namespace explmine
