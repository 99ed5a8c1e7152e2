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

#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "explmine/error.h"
#include "explmine/evaluate.h"
#include "explmine/metrics.h"

namespace explmine {
namespace {

struct Row {
  std::uint64_t remaining, tp, total;
  double want;
};

// Remaining candidates and true positives after each stage, with the F1
// (fraction) those counts imply against the gold positives.
const Row kF1Rows[] = {
    {8977, 173, 173, 0.0378},  {3102, 134, 173, 0.0818},  {791, 93, 173, 0.1929},
    {323, 44, 173, 0.1774},    {6982, 122, 122, 0.0343},  {3350, 95, 122, 0.0547},
    {1332, 76, 122, 0.1045},   {395, 18, 122, 0.0696},    {13541, 402, 402, 0.0577},
    {7360, 302, 402, 0.0778},  {2557, 194, 402, 0.1311},  {1083, 87, 402, 0.1172},
};

const Row kRetentionRows[] = {
    {323, 44, 0, 0.1362},  {2832, 294, 0, 0.1038}, {395, 18, 0, 0.0456},
    {4051, 334, 0, 0.0824}, {1083, 87, 0, 0.0803}, {3149, 233, 0, 0.0740},
};

TEST_CASE("subset f1 from published stage counts") {
  for (const Row& r : kF1Rows) {
    CAPTURE(r.remaining);
    CHECK(std::abs(SubsetF1(r.tp, r.remaining, r.total) - r.want) <= 0.0001);
  }
}

TEST_CASE("retention reproduces the reported percentages") {
  for (const Row& r : kRetentionRows) {
    CAPTURE(r.remaining);
    const double got = RetentionPercentage(r.tp, r.remaining);
    CHECK(std::abs(got - r.want) <= 0.0001);
  }
}

TEST_CASE("metric edge cases") {
  CHECK(SubsetF1(0, 10, 5) == 0.0);
  CHECK(SubsetF1(5, 5, 5) == 1.0);
  CHECK_THROWS_AS(SubsetF1(1, 0, 5), Error);
  CHECK_THROWS_AS(SubsetF1(1, 5, 0), Error);
  CHECK_THROWS_AS(SubsetF1(6, 5, 10), Error);
  CHECK_THROWS_AS(SubsetF1(6, 10, 5), Error);
  CHECK_THROWS_AS(RetentionPercentage(0, 0), Error);
  CHECK_THROWS_AS(RetentionPercentage(3, 2), Error);
  CHECK(RetentionPercentage(0, 4) == 0.0);
}

Candidate Labeled(PairId pair, const std::string& src, TokenRange ne) {
  Candidate c;
  c.pair_id = pair;
  c.k = ne.start;
  c.m = ne.start;
  c.span_len = 3;
  c.stage = Stage::kWiki;
  c.ne_span = ne;
  c.src_tokens = SplitTokens(src);
  return c;
}

ReviewLabel Label(const Candidate& c, Verdict v, const std::string& ts = "2026-01-01T00:00:00Z") {
  return {c.id(), v, "a", ts, *ParseRfc3339(ts)};
}

TEST_CASE("occurrence counter counts pairs once") {
  NeOccurrenceCounter counter({"john bunyan", "tea"}, "en");
  SentencePair p;
  p.src_tokens = SplitTokens("John Bunyan met John Bunyan");
  counter.Add(p);
  p.src_tokens = SplitTokens("Bunyan John teas");
  counter.Add(p);
  CHECK(counter.counts().at("john bunyan") == 1);
  CHECK(counter.counts().at("tea") == 1);
}

TEST_CASE("explanation probability per entity") {
  std::vector<Candidate> cands;
  LabelLog labels;
  // "a": explained once in one occurrence.
  cands.push_back(Labeled(0, "Alpha x", {0, 1}));
  labels.Add(Label(cands.back(), Verdict::kExplanation));
  // "beta": explained in 2 of 5 pairs; two candidates in pair 1 count once.
  cands.push_back(Labeled(1, "Beta x", {0, 1}));
  labels.Add(Label(cands.back(), Verdict::kExplanation));
  Candidate second = Labeled(1, "Beta x", {0, 1});
  second.m = 1;
  cands.push_back(second);
  labels.Add(Label(second, Verdict::kExplanation));
  cands.push_back(Labeled(2, "Beta y", {0, 1}));
  labels.Add(Label(cands.back(), Verdict::kExplanation));
  cands.push_back(Labeled(3, "Beta y", {0, 1}));
  labels.Add(Label(cands.back(), Verdict::kNotExplanation));
  // "gamma" never occurs in the corpus.
  cands.push_back(Labeled(4, "Gamma", {0, 1}));
  labels.Add(Label(cands.back(), Verdict::kExplanation));
  // Unlabeled candidates are ignored.
  cands.push_back(Labeled(5, "Delta", {0, 1}));

  CHECK(LabeledEntityPhrases(labels, cands, "en") ==
        std::vector<std::string>{"alpha", "beta", "gamma"});
  const std::unordered_map<std::string, std::uint64_t> occ = {
      {"alpha", 1}, {"beta", 5}, {"gamma", 0}, {"delta", 3}};
  Diagnostics diag;
  NeStatsReport r = NeExplanationStats(labels, cands, occ, "en", &diag);
  REQUIRE(r.stats.size() == 2);
  CHECK(r.stats[0].ne == "alpha");
  CHECK(r.stats[0].probability == 1.0);
  CHECK(r.stats[1].ne == "beta");
  CHECK(r.stats[1].explained == 2);
  CHECK(r.stats[1].probability == doctest::Approx(0.4));
  CHECK(r.always_explained == std::map<std::uint64_t, std::uint64_t>{{1, 1}});
  CHECK(diag.count() == 1);
}

TEST_CASE("explained count is clamped to occurrences") {
  std::vector<Candidate> cands = {Labeled(0, "Tea", {0, 1}), Labeled(1, "Tea", {0, 1})};
  LabelLog labels;
  for (const auto& c : cands) labels.Add(Label(c, Verdict::kExplanation));
  Diagnostics diag;
  NeStatsReport r = NeExplanationStats(labels, cands, {{"tea", 1}}, "en", &diag);
  REQUIRE(r.stats.size() == 1);
  CHECK(r.stats[0].explained == 1);
  CHECK(diag.count() == 1);
}

TEST_CASE("stage evaluation counts sentence pairs") {
  std::vector<Candidate> span, ner, wiki;
  for (PairId p = 0; p < 10; ++p) span.push_back(Labeled(p, "A b", {0, 1}));
  // Two candidates in pair 0 count as one remaining pair.
  Candidate extra = Labeled(0, "A b", {0, 1});
  extra.m = 1;
  span.push_back(extra);
  for (PairId p = 0; p < 4; ++p) ner.push_back(Labeled(p, "A b", {0, 1}));
  wiki.push_back(Labeled(0, "A b", {0, 1}));
  wiki.push_back(Labeled(5, "A b", {0, 1}));
  LabelLog labels;
  labels.Add(Label(span[0], Verdict::kExplanation));
  labels.Add(Label(extra, Verdict::kExplanation));
  labels.Add(Label(span[1], Verdict::kExplanation));
  labels.Add(Label(span[5], Verdict::kNotExplanation));

  const Evaluation e = Evaluate(span, ner, wiki, labels, std::nullopt);
  CHECK(e.total_positives == 2);
  CHECK(e.labeled == 4);
  REQUIRE(e.stages.size() == 3);
  CHECK(e.stages[0].remaining == 10);
  CHECK(e.stages[0].tp == 2);
  CHECK(*e.stages[0].f1 == doctest::Approx(SubsetF1(2, 10, 2)));
  CHECK(e.stages[1].tp == 2);
  CHECK(e.stages[2].remaining == 2);
  CHECK(e.stages[2].tp == 1);
  CHECK(*e.stages[2].retention == doctest::Approx(0.5));
  CHECK(*e.stages[2].f1 == doctest::Approx(0.5));

  const Evaluation empty = Evaluate({}, {}, {}, LabelLog(), std::nullopt);
  CHECK_FALSE(empty.stages[2].f1);
  CHECK_FALSE(empty.stages[2].retention);
  CHECK(FormatEvaluationJson(empty).find("\"subset_f1\": null") != std::string::npos);
}

}  // namespace
}  // namespace explmine
