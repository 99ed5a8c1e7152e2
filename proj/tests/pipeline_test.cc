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
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "explmine/error.h"
#include "explmine/pipeline.h"
#include "explmine/records.h"
#include "explmine/synthetic.h"
#include "gold_check.h"
#include "test_util.h"

namespace explmine {
namespace {

using testing::TempDir;

std::set<CandidateKey> Keys(const std::vector<Candidate>& cands) {
  std::set<CandidateKey> out;
  for (const Candidate& c : cands) out.insert(c.key());
  return out;
}

bool Subset(const std::set<CandidateKey>& a, const std::set<CandidateKey>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

CascadeOptions Options(const SyntheticOptions& so, bool trace) {
  CascadeOptions o;
  o.rarity = {so.threshold, so.threshold};
  o.min_span = so.min_span;
  o.trace = trace;
  return o;
}

TEST_CASE("synthetic corpus: planted cases survive, distractors fail where intended") {
  SyntheticOptions so;
  so.pairs = 2000;
  so.planted = 30;
  so.per_distractor_class = 10;
  so.empty_pairs = 5;
  const SyntheticCorpus corpus = GenerateSynthetic(so);
  CHECK(corpus.gold.size() == 30 + 10 * (kCaseClassCount - 1));
  for (bool gazetteer : {false, true}) {
    CAPTURE(gazetteer);
    const Resources res = corpus.ToResources(gazetteer);
    Diagnostics diag;
    const CascadeRun run = RunCascade(corpus.pairs, res, Options(so, true), &diag);
    const testing::GoldScore score = testing::ScoreAgainstGold(run, corpus.gold);
    for (std::size_t i = 0; i < std::min<std::size_t>(score.problems.size(), 10); ++i) {
      MESSAGE(score.problems[i]);
    }
    CHECK(score.recall() == 1.0);
    CHECK(score.distractors_matched == score.distractors);
    CHECK(score.unexpected_wiki == 0);
    CHECK(Subset(Keys(run.wiki), Keys(run.ner)));
    CHECK(Subset(Keys(run.ner), Keys(run.span)));
  }
}

TEST_CASE("synthetic generation is deterministic in the seed") {
  SyntheticOptions so;
  so.pairs = 400;
  so.planted = 10;
  so.per_distractor_class = 3;
  const SyntheticCorpus a = GenerateSynthetic(so);
  const SyntheticCorpus b = GenerateSynthetic(so);
  CHECK(a.pairs == b.pairs);
  CHECK(a.gold == b.gold);
  CHECK(a.src_counts == b.src_counts);
  so.seed = 2;
  CHECK(GenerateSynthetic(so).pairs != a.pairs);
  so.pairs = 10;
  CHECK_THROWS_AS(GenerateSynthetic(so), Error);
}

TEST_CASE("lowering thresholds or raising min_span never adds candidates") {
  SyntheticOptions so;
  so.pairs = 1000;
  so.planted = 20;
  so.per_distractor_class = 5;
  const SyntheticCorpus corpus = GenerateSynthetic(so);
  const Resources res = corpus.ToResources(true);
  CascadeOptions base = Options(so, false);
  const CascadeRun wide = RunCascade(corpus.pairs, res, base, nullptr);
  CascadeOptions low = base;
  low.rarity = {so.threshold / 2, so.threshold / 3};
  CHECK(Subset(Keys(RunCascade(corpus.pairs, res, low, nullptr).span), Keys(wide.span)));
  CascadeOptions longer = base;
  longer.min_span = 8;
  const CascadeRun narrow = RunCascade(corpus.pairs, res, longer, nullptr);
  CHECK(Subset(Keys(narrow.span), Keys(wide.span)));
  CHECK(narrow.span.size() < wide.span.size());
}

TEST_CASE("empty corpus gives an all-zero report") {
  TempDir dir;
  for (const char* f : {"s", "t", "a", "ner.jsonl", "wiki.en", "wiki.de"}) {
    testing::WriteText(dir / f, "");
  }
  testing::WriteText(dir / "c.en", "#lang=en\ttotal=0\n");
  testing::WriteText(dir / "c.de", "#lang=de\ttotal=0\n");
  PipelineConfig cfg;
  cfg.src_corpus = dir / "s";
  cfg.tgt_corpus = dir / "t";
  cfg.alignments = dir / "a";
  cfg.src_counts = dir / "c.en";
  cfg.tgt_counts = dir / "c.de";
  cfg.ner_file = dir / "ner.jsonl";
  cfg.src_wiki = dir / "wiki.en";
  cfg.tgt_wiki = dir / "wiki.de";
  cfg.output_dir = dir / "out";
  Diagnostics diag;
  const PipelineReport r = RunPipeline(cfg, {}, &diag);
  CHECK(r.pairs_read == 0);
  for (const StageCounts& s : r.totals.stages) {
    CHECK(s.pairs_in == 0);
    CHECK(s.candidates_out == 0);
  }
  CHECK(testing::ReadText(dir / "out/candidates.wiki.jsonl").empty());
  CHECK(testing::ReadText(dir / "out/report.json").find("\"pairs_read\": 0") !=
        std::string::npos);
}

TEST_CASE("missing inputs are fatal and name the path") {
  TempDir dir;
  PipelineConfig cfg;
  cfg.src_corpus = cfg.tgt_corpus = cfg.alignments = dir / "none";
  cfg.src_counts = cfg.tgt_counts = dir / "none";
  cfg.src_wiki = cfg.tgt_wiki = dir / "none";
  cfg.ner_source = "gazetteer";
  cfg.output_dir = dir / "out";
  try {
    RunPipeline(cfg, {}, nullptr);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find(dir / "none") != std::string::npos);
  }
}

TEST_CASE("pipeline outputs are reproducible") {
  SyntheticOptions so;
  so.pairs = 600;
  so.planted = 10;
  so.per_distractor_class = 4;
  so.empty_pairs = 3;
  const SyntheticCorpus corpus = GenerateSynthetic(so);
  TempDir dir;
  WriteSynthetic(corpus, so, dir.str());
  PipelineConfig cfg = LoadConfig(dir / "config.txt");
  std::string first[4];
  const char* files[] = {"report.json", "candidates.span.jsonl", "candidates.ner.jsonl",
                         "candidates.wiki.jsonl"};
  for (int run = 0; run < 2; ++run) {
    cfg.output_dir = dir / ("out" + std::to_string(run));
    const PipelineReport r = RunPipeline(cfg, {true}, nullptr);
    CHECK(r.skipped_empty == 3);
    CHECK(r.totals.stages[3].candidates_out == 10);
    for (int i = 0; i < 4; ++i) {
      const std::string text = testing::ReadText(cfg.output_dir + "/" + files[i]);
      if (run == 0) {
        first[i] = text;
      } else {
        CHECK(text == first[i]);
      }
    }
  }
  // Stage files chain: every WIKI record also appears at NER and SPAN.
  const auto span = ReadCandidates(dir / "out0/candidates.span.jsonl");
  const auto ner = ReadCandidates(dir / "out0/candidates.ner.jsonl");
  const auto wiki = ReadCandidates(dir / "out0/candidates.wiki.jsonl");
  CHECK(wiki.size() == 10);
  CHECK(Subset(Keys(wiki), Keys(ner)));
  CHECK(Subset(Keys(ner), Keys(span)));
}

}  // namespace
}  // namespace explmine
