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

// Scores a traced cascade run against the gold cases of a synthetic corpus.

#ifndef EXPLMINE_TESTS_GOLD_CHECK_H_
#define EXPLMINE_TESTS_GOLD_CHECK_H_

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "explmine/pipeline.h"
#include "explmine/synthetic.h"

namespace explmine::testing {

struct GoldScore {
  std::size_t planted = 0;
  std::size_t planted_found = 0;
  std::size_t distractors = 0;
  std::size_t distractors_matched = 0;
  std::size_t unexpected_wiki = 0;  // WIKI candidates that are not planted cases
  std::vector<std::string> problems;

  double recall() const {
    return planted == 0 ? 0.0 : static_cast<double>(planted_found) / planted;
  }
};

inline GoldScore ScoreAgainstGold(const CascadeRun& run, const std::vector<GoldCase>& gold) {
  GoldScore s;
  std::set<CandidateKey> wiki;
  for (const Candidate& c : run.wiki) wiki.insert(c.key());
  std::map<std::tuple<PairId, std::uint32_t, std::uint32_t>, const Rejection*> rejected;
  for (const Rejection& r : run.rejections) rejected[{r.pair_id, r.k, r.m}] = &r;

  std::set<CandidateKey> planted_keys;
  for (const GoldCase& g : gold) {
    const std::string where = std::string(CaseClassName(g.cls)) + " at pair " +
                              std::to_string(g.pair_id) + " k=" + std::to_string(g.k) +
                              " m=" + std::to_string(g.m);
    if (g.cls == CaseClass::kPlanted) {
      ++s.planted;
      const CandidateKey key{g.pair_id, g.k, g.m, g.span_len};
      planted_keys.insert(key);
      if (wiki.contains(key)) {
        ++s.planted_found;
      } else {
        s.problems.push_back("missed " + where);
      }
      continue;
    }
    ++s.distractors;
    auto it = rejected.find({g.pair_id, g.k, g.m});
    if (it == rejected.end()) {
      s.problems.push_back("not rejected: " + where);
    } else if (it->second->stage != ExpectedStage(g.cls) ||
               it->second->reason != ExpectedReason(g.cls)) {
      s.problems.push_back("wrong reason for " + where + ": " +
                           std::string(StageIdName(it->second->stage)) + "/" +
                           it->second->reason);
    } else {
      ++s.distractors_matched;
    }
  }
  for (const CandidateKey& k : wiki) {
    if (!planted_keys.contains(k)) ++s.unexpected_wiki;
  }
  return s;
}

}  // namespace explmine::testing

#endif  // EXPLMINE_TESTS_GOLD_CHECK_H_
