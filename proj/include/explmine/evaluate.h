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

// Scores exported stage candidates against review labels. Counts are sentence
// pairs: a pair remains at a stage when it holds a candidate there, and is a
// true positive when one of those candidates is labelled EXPLANATION.

#ifndef EXPLMINE_EVALUATE_H_
#define EXPLMINE_EVALUATE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "explmine/candidate.h"
#include "explmine/labels.h"
#include "explmine/metrics.h"

namespace explmine {

struct StageScore {
  Stage stage = Stage::kSpan;
  std::uint64_t remaining = 0;
  std::uint64_t tp = 0;
  std::optional<double> f1;         // when remaining and total_positives are non-zero
  std::optional<double> retention;  // when remaining is non-zero
};

struct Evaluation {
  std::uint64_t total_positives = 0;
  std::uint64_t labeled = 0;
  std::vector<StageScore> stages;  // SPAN, NER, WIKI
  std::optional<NeStatsReport> ne_stats;
};

// total_positives defaults to the SPAN-stage tp.
Evaluation Evaluate(const std::vector<Candidate>& span, const std::vector<Candidate>& ner,
                    const std::vector<Candidate>& wiki, const LabelLog& labels,
                    std::optional<std::uint64_t> total_positives);

std::string FormatEvaluationJson(const Evaluation& e);
std::string FormatEvaluationText(const Evaluation& e);

}  // namespace explmine

#endif  // EXPLMINE_EVALUATE_H_
