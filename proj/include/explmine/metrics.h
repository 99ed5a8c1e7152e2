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

#ifndef EXPLMINE_METRICS_H_
#define EXPLMINE_METRICS_H_

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "explmine/candidate.h"
#include "explmine/corpus.h"
#include "explmine/error.h"
#include "explmine/labels.h"

namespace explmine {

// F1 of a filtered candidate set: precision tp/remaining, recall
// tp/total_positives where total_positives is the positive count of the
// widest run. Returns 0 when tp is 0. Throws Error on zero denominators or
// tp exceeding either count.
double SubsetF1(std::uint64_t tp, std::uint64_t remaining, std::uint64_t total_positives);

// tp / remaining. Throws Error when remaining is 0 or tp > remaining.
double RetentionPercentage(std::uint64_t tp, std::uint64_t remaining);

struct NeStat {
  std::string ne;  // stemmed phrase
  std::uint64_t occurrences = 0;  // corpus pairs whose source contains the phrase
  std::uint64_t explained = 0;  // distinct pairs with an EXPLANATION label for it
  double probability = 0.0;
};

struct NeStatsReport {
  std::vector<NeStat> stats;  // sorted by phrase
  // Number of always-explained entities by explanation count.
  std::map<std::uint64_t, std::uint64_t> always_explained;
};

// Counts, per stemmed entity phrase, the corpus pairs whose stemmed source
// tokens contain it contiguously. Feed every corpus pair through Add().
class NeOccurrenceCounter {
 public:
  NeOccurrenceCounter(const std::vector<std::string>& phrases, std::string lang);
  void Add(const SentencePair& pair);
  const std::unordered_map<std::string, std::uint64_t>& counts() const { return counts_; }

 private:
  std::string lang_;
  std::size_t max_words_ = 0;
  std::unordered_map<std::string, std::uint64_t> counts_;
};

// Stemmed source entity phrase of a candidate; empty without ne_span.
std::string EntityPhrase(const Candidate& cand, const std::string& src_lang);

// Phrases of the labeled candidates that carry an ne_span, deduplicated.
std::vector<std::string> LabeledEntityPhrases(const LabelLog& labels,
                                              const std::vector<Candidate>& candidates,
                                              const std::string& src_lang);

// Entities with zero occurrences are left out with a warning.
NeStatsReport NeExplanationStats(
    const LabelLog& labels, const std::vector<Candidate>& candidates,
    const std::unordered_map<std::string, std::uint64_t>& occurrences,
    const std::string& src_lang, Diagnostics* diag);

}  // namespace explmine

#endif  // EXPLMINE_METRICS_H_
