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

// The four-stage cascade: rarity gate, span detector, NER gate, wiki gate.
//
// Cascade works on in-memory pairs one at a time. RunPipeline loads the
// resources named by a PipelineConfig, streams the corpus through a Cascade
// and writes into output_dir:
//
//   candidates.span.jsonl  candidates.ner.jsonl  candidates.wiki.jsonl
//   report.json  report.txt  timing.json  [rejections.jsonl]
//
// report.json and the candidate files depend only on inputs and config;
// wall-clock timings live in timing.json.

#ifndef EXPLMINE_PIPELINE_H_
#define EXPLMINE_PIPELINE_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "explmine/candidate.h"
#include "explmine/config.h"
#include "explmine/corpus.h"
#include "explmine/error.h"
#include "explmine/ner.h"
#include "explmine/span_detector.h"
#include "explmine/vocab.h"
#include "explmine/wiki.h"

namespace explmine {

struct Resources {
  VocabCounts src_counts;
  VocabCounts tgt_counts;
  bool use_gazetteer = false;
  NerStore ner;          // when !use_gazetteer
  WikiIndex gazetteer;   // when use_gazetteer
  WikiIndex src_wiki;
  WikiIndex tgt_wiki;
  ParallelTitles ptitles;
};

struct CascadeOptions {
  std::string src_lang = "en";
  std::string tgt_lang = "de";
  RarityConfig rarity;
  std::uint32_t min_span = 3;
  bool trace = false;  // record per-anchor rejections
};

enum class StageId { kRarity, kSpan, kNer, kWiki };
inline constexpr std::size_t kStageCount = 4;
std::string_view StageIdName(StageId stage);  // "rarity", "span", "ner", "wiki"

struct StageCounts {
  std::uint64_t pairs_in = 0;
  std::uint64_t pairs_out = 0;
  std::uint64_t candidates_out = 0;
};

// Why an aligned source token did not reach the WIKI stage.
struct Rejection {
  PairId pair_id = 0;
  std::uint32_t k = 0;
  std::uint32_t m = 0;
  StageId stage = StageId::kRarity;
  // "not_rare"; a span reject name; "no_entity"; "NO_SRC_TITLE" or "TGT_COVERS".
  std::string reason;

  bool operator==(const Rejection&) const = default;
};

struct CascadeTotals {
  std::array<StageCounts, kStageCount> stages{};
  std::uint64_t rarity_not_rare = 0;  // non-punctuation links that are not anchors
  SpanStats span;
  std::uint64_t ner_no_entity = 0;
  std::array<std::uint64_t, 4> wiki_decisions{};  // indexed by WikiDecision
};

struct PairResult {
  std::vector<Candidate> span;
  std::vector<Candidate> ner;
  std::vector<Candidate> wiki;
};

class Cascade {
 public:
  // `resources` must outlive the cascade.
  Cascade(const Resources& resources, CascadeOptions options, Diagnostics* diag);

  // Throws Error if a later stage holds a candidate missing from an earlier one.
  PairResult Process(const SentencePair& pair);

  const CascadeTotals& totals() const { return totals_; }
  // Rejections recorded since the last call (trace mode only).
  std::vector<Rejection> TakeRejections() { return std::exchange(rejections_, {}); }
  // Wall-clock seconds spent per stage.
  const std::array<double, kStageCount>& stage_seconds() const { return seconds_; }

 private:
  void Reject(const SentencePair& pair, std::uint32_t k, std::uint32_t m, StageId stage,
              std::string reason);

  const Resources& res_;
  CascadeOptions opt_;
  Diagnostics* diag_;
  CascadeTotals totals_;
  std::vector<Rejection> rejections_;
  std::array<double, kStageCount> seconds_{};
};

// Runs every pair and keeps all candidates.
struct CascadeRun {
  CascadeTotals totals;
  std::vector<Candidate> span;
  std::vector<Candidate> ner;
  std::vector<Candidate> wiki;
  std::vector<Rejection> rejections;
};
CascadeRun RunCascade(const std::vector<SentencePair>& pairs, const Resources& resources,
                      const CascadeOptions& options, Diagnostics* diag);

// Loads counts, NER or gazetteer titles, wiki indexes and parallel titles.
// Missing files raise Error naming the path.
Resources LoadResources(const PipelineConfig& cfg, Diagnostics* diag);

struct PipelineReport {
  std::map<std::string, std::string> config;
  std::uint64_t pairs_read = 0;  // non-empty pairs
  std::uint64_t skipped_empty = 0;
  CascadeTotals totals;
  std::uint64_t warnings = 0;
  std::array<double, kStageCount> seconds{};
  double total_seconds = 0.0;
};

std::string FormatReportJson(const PipelineReport& report);
std::string FormatReportText(const PipelineReport& report);
std::string FormatTimingJson(const PipelineReport& report);

struct RunOptions {
  bool trace = false;  // also write rejections.jsonl
};

// Throws Error prefixed with the failing stage ("rarity: ...", "wiki: ...").
PipelineReport RunPipeline(const PipelineConfig& cfg, const RunOptions& options,
                           Diagnostics* diag);

std::string FormatRejection(const Rejection& r);

}  // namespace explmine

#endif  // EXPLMINE_PIPELINE_H_
