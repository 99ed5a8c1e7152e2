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

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "explmine/error.h"
#include "explmine/vocab.h"
#include "test_util.h"

namespace explmine {
namespace {

TEST_CASE("count words") {
  VocabCounts c = CountWords(std::vector<std::string>{"a b a"}, "en");
  CHECK(c.Count("a") == 2);
  CHECK(c.Count("b") == 1);
  CHECK(c.total_tokens() == 3);
  CHECK(c.size() == 2);

  VocabCounts empty = CountWords(std::vector<std::string>{}, "en");
  CHECK(empty.size() == 0);
  CHECK(empty.total_tokens() == 0);

  VocabCounts cased = CountWords(std::vector<std::string>{"X x"}, "en");
  CHECK(cased.Count("X") == 1);
  CHECK(cased.Count("x") == 1);
}

TEST_CASE("extractor doc markers are not counted") {
  std::istringstream in("<doc id=\"1\" title=\"A\">\nA b\n</doc>\n");
  VocabCounts c = CountWords(in, "en");
  CHECK(c.total_tokens() == 2);
  CHECK(c.Count("<doc") == 0);
}

TEST_CASE("rarity is strict") {
  VocabCounts c("en");
  c.Add("w", 14999);
  c.Add("v", 15000);
  CHECK(IsRare("w", c, 15000));
  CHECK_FALSE(IsRare("v", c, 15000));
  CHECK(IsRare("unseen", c, 1));
}

TEST_CASE("pair rarity gate") {
  SentencePair p;
  p.src_tokens = {"John", "Bunyan", "said", ","};
  p.tgt_tokens = {"John", "Bunyan", ",", "hat", "gesagt", ","};
  p.alignment = {{0, 0}, {1, 1}, {2, 4}, {3, 5}};
  VocabCounts src("en");
  src.Add("John", 900000);
  src.Add("Bunyan", 37);
  src.Add("said", 800000);
  VocabCounts tgt("de");
  tgt.Add("John", 90000);
  tgt.Add("Bunyan", 12);
  tgt.Add("gesagt", 90000);
  const auto anchors = PairRarityGate(p, src, tgt, {});
  CHECK(anchors == std::vector<Anchor>{{1, 1}});

  // "," is unseen hence rare on both sides, but punctuation never anchors.
  tgt.Add("Bunyan", 20000);
  CHECK(PairRarityGate(p, src, tgt, {}).empty());
}

TEST_CASE("count table round trip and validation") {
  VocabCounts c = CountWords(std::vector<std::string>{"b a a \xC3\xA4"}, "de");
  std::stringstream ss;
  WriteCounts(c, ss);
  CHECK(ss.str() == "#lang=de\ttotal=4\na\t2\nb\t1\n\xC3\xA4\t1\n");
  CHECK(ReadCounts(ss, "mem") == c);

  std::istringstream bad_total("#lang=de\ttotal=5\na\t2\n");
  CHECK_THROWS_AS(ReadCounts(bad_total, "mem"), Error);
  std::istringstream zero("#lang=de\ttotal=0\na\t0\n");
  CHECK_THROWS_AS(ReadCounts(zero, "mem"), Error);
  std::istringstream no_header("a\t2\n");
  CHECK_THROWS_AS(ReadCounts(no_header, "mem"), Error);
  CHECK_THROWS_AS(ReadCounts("/nonexistent/counts.tsv"), Error);
}

TEST_CASE("merge") {
  VocabCounts a = CountWords(std::vector<std::string>{"x y"}, "en");
  VocabCounts b = CountWords(std::vector<std::string>{"y z"}, "en");
  a.Merge(b);
  CHECK(a.Count("y") == 2);
  CHECK(a.total_tokens() == 4);
  VocabCounts de("de");
  CHECK_THROWS_AS(a.Merge(de), Error);
}

// Lowering either threshold never adds anchors; the anchor set at a lower
// threshold is a subset of the one at a higher threshold.
TEST_CASE("threshold monotonicity") {
  std::mt19937 rng(11);
  const std::vector<std::string> vocab = {"a", "b", "c", "d", "e", ",", "f", "g"};
  for (int round = 0; round < 500; ++round) {
    VocabCounts src("en");
    VocabCounts tgt("de");
    for (const auto& w : vocab) {
      src.Add(w, rng() % 30000);
      tgt.Add(w, rng() % 30000);
    }
    SentencePair p;
    const int ls = 1 + rng() % 10;
    const int lt = 1 + rng() % 10;
    for (int i = 0; i < ls; ++i) p.src_tokens.push_back(vocab[rng() % vocab.size()]);
    for (int i = 0; i < lt; ++i) p.tgt_tokens.push_back(vocab[rng() % vocab.size()]);
    for (int i = 0; i < ls; ++i) {
      p.alignment.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(rng() % lt)});
    }
    NormalizeAlignment(p.alignment);
    const std::uint64_t hi_s = rng() % 30000, hi_t = rng() % 30000;
    const std::uint64_t lo_s = hi_s == 0 ? 0 : rng() % hi_s;
    const std::uint64_t lo_t = hi_t == 0 ? 0 : rng() % hi_t;
    const auto wide = PairRarityGate(p, src, tgt, {hi_s, hi_t});
    const auto narrow = PairRarityGate(p, src, tgt, {lo_s, lo_t});
    CHECK(std::includes(wide.begin(), wide.end(), narrow.begin(), narrow.end()));
  }
}

}  // namespace
}  // namespace explmine
