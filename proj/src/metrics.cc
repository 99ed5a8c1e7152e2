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

#include "explmine/metrics.h"

#include <algorithm>
#include <set>

#include "explmine/stemmer.h"

namespace explmine {

double SubsetF1(std::uint64_t tp, std::uint64_t remaining, std::uint64_t total_positives) {
  if (remaining == 0) throw Error("subset F1: no remaining candidates");
  if (total_positives == 0) throw Error("subset F1: total positives is zero");
  if (tp > remaining || tp > total_positives) {
    throw Error("subset F1: tp " + std::to_string(tp) + " exceeds remaining " +
                std::to_string(remaining) + " or total positives " +
                std::to_string(total_positives));
  }
  if (tp == 0) return 0.0;
  const double p = static_cast<double>(tp) / static_cast<double>(remaining);
  const double r = static_cast<double>(tp) / static_cast<double>(total_positives);
  return 2.0 * p * r / (p + r);
}

double RetentionPercentage(std::uint64_t tp, std::uint64_t remaining) {
  if (remaining == 0) throw Error("retention: no remaining candidates");
  if (tp > remaining) {
    throw Error("retention: tp " + std::to_string(tp) + " exceeds remaining " +
                std::to_string(remaining));
  }
  return static_cast<double>(tp) / static_cast<double>(remaining);
}

NeOccurrenceCounter::NeOccurrenceCounter(const std::vector<std::string>& phrases,
                                         std::string lang)
    : lang_(std::move(lang)) {
  for (const std::string& p : phrases) {
    if (p.empty()) continue;
    counts_.emplace(p, 0);
    const std::size_t words = 1 + std::count(p.begin(), p.end(), ' ');
    max_words_ = std::max(max_words_, words);
  }
}

void NeOccurrenceCounter::Add(const SentencePair& pair) {
  if (max_words_ == 0) return;
  std::vector<std::string> stems;
  stems.reserve(pair.src_tokens.size());
  for (const std::string& t : pair.src_tokens) stems.push_back(Stem(t, lang_));
  std::set<std::string> seen;
  for (std::size_t i = 0; i < stems.size(); ++i) {
    std::string phrase;
    for (std::size_t n = 1; n <= max_words_ && i + n <= stems.size(); ++n) {
      if (n > 1) phrase.push_back(' ');
      phrase += stems[i + n - 1];
      if (counts_.contains(phrase)) seen.insert(phrase);
    }
  }
  for (const std::string& p : seen) ++counts_[p];
}

std::string EntityPhrase(const Candidate& cand, const std::string& src_lang) {
  if (!cand.ne_span || cand.ne_span->end > cand.src_tokens.size()) return {};
  return StemPhrase({cand.src_tokens.data() + cand.ne_span->start, cand.ne_span->size()},
                    src_lang);
}

std::vector<std::string> LabeledEntityPhrases(const LabelLog& labels,
                                              const std::vector<Candidate>& candidates,
                                              const std::string& src_lang) {
  const auto verdicts = labels.Verdicts();
  std::set<std::string> phrases;
  for (const Candidate& c : candidates) {
    if (!verdicts.contains(c.id())) continue;
    std::string p = EntityPhrase(c, src_lang);
    if (!p.empty()) phrases.insert(std::move(p));
  }
  return {phrases.begin(), phrases.end()};
}

NeStatsReport NeExplanationStats(
    const LabelLog& labels, const std::vector<Candidate>& candidates,
    const std::unordered_map<std::string, std::uint64_t>& occurrences,
    const std::string& src_lang, Diagnostics* diag) {
  const auto verdicts = labels.Verdicts();
  std::map<std::string, std::set<PairId>> explained_pairs;
  for (const Candidate& c : candidates) {
    auto it = verdicts.find(c.id());
    if (it == verdicts.end()) continue;
    std::string p = EntityPhrase(c, src_lang);
    if (p.empty()) continue;
    auto& pairs = explained_pairs[p];
    if (it->second == Verdict::kExplanation) pairs.insert(c.pair_id);
  }

  NeStatsReport report;
  for (const auto& [phrase, pairs] : explained_pairs) {
    auto occ = occurrences.find(phrase);
    if (occ == occurrences.end() || occ->second == 0) {
      if (diag) diag->warn("entity '" + phrase + "' has no corpus occurrences; skipped");
      continue;
    }
    NeStat s;
    s.ne = phrase;
    s.occurrences = occ->second;
    s.explained = pairs.size();
    if (s.explained > s.occurrences) {
      if (diag) {
        diag->warn("entity '" + phrase + "' explained in " + std::to_string(s.explained) +
                   " pairs but found in only " + std::to_string(s.occurrences));
      }
      s.explained = s.occurrences;
    }
    s.probability = static_cast<double>(s.explained) / static_cast<double>(s.occurrences);
    if (s.explained > 0 && s.explained == s.occurrences) ++report.always_explained[s.explained];
    report.stats.push_back(std::move(s));
  }
  return report;
}

}  // namespace explmine
