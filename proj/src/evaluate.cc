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

#include "explmine/evaluate.h"

#include <cstdio>
#include <set>

#include "json.hpp"

namespace explmine {

namespace {

using nlohmann::ordered_json;

ordered_json Optional(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json();
}

std::string Percent(const std::optional<double>& v) {
  if (!v) return "-";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f%%", *v * 100.0);
  return buf;
}

}  // namespace

Evaluation Evaluate(const std::vector<Candidate>& span, const std::vector<Candidate>& ner,
                    const std::vector<Candidate>& wiki, const LabelLog& labels,
                    std::optional<std::uint64_t> total_positives) {
  const auto verdicts = labels.Verdicts();
  Evaluation e;
  e.labeled = verdicts.size();
  const std::vector<Candidate>* sets[] = {&span, &ner, &wiki};
  const Stage names[] = {Stage::kSpan, Stage::kNer, Stage::kWiki};
  for (int i = 0; i < 3; ++i) {
    std::set<PairId> pairs;
    std::set<PairId> positive;
    for (const Candidate& c : *sets[i]) {
      pairs.insert(c.pair_id);
      auto v = verdicts.find(c.id());
      if (v != verdicts.end() && v->second == Verdict::kExplanation) positive.insert(c.pair_id);
    }
    e.stages.push_back({names[i], pairs.size(), positive.size(), std::nullopt, std::nullopt});
  }
  e.total_positives = total_positives.value_or(e.stages[0].tp);
  for (StageScore& s : e.stages) {
    if (s.remaining == 0) continue;
    s.retention = RetentionPercentage(s.tp, s.remaining);
    if (e.total_positives > 0 && s.tp <= e.total_positives) {
      s.f1 = SubsetF1(s.tp, s.remaining, e.total_positives);
    }
  }
  return e;
}

std::string FormatEvaluationJson(const Evaluation& e) {
  ordered_json doc;
  doc["total_positives"] = e.total_positives;
  doc["labeled"] = e.labeled;
  ordered_json stages = ordered_json::array();
  for (const StageScore& s : e.stages) {
    ordered_json row;
    row["stage"] = StageName(s.stage);
    row["remaining"] = s.remaining;
    row["tp"] = s.tp;
    row["subset_f1"] = Optional(s.f1);
    row["retention_percentage"] = Optional(s.retention);
    stages.push_back(std::move(row));
  }
  doc["stages"] = std::move(stages);
  if (e.ne_stats) {
    ordered_json ne = ordered_json::array();
    for (const NeStat& s : e.ne_stats->stats) {
      ne.push_back({{"ne", s.ne},
                    {"occurrences", s.occurrences},
                    {"explained", s.explained},
                    {"probability", s.probability}});
    }
    ordered_json always = ordered_json::object();
    for (const auto& [times, count] : e.ne_stats->always_explained) {
      always[std::to_string(times)] = count;
    }
    doc["ne_stats"] = {{"entities", std::move(ne)}, {"always_explained", std::move(always)}};
  }
  return doc.dump(2) + "\n";
}

std::string FormatEvaluationText(const Evaluation& e) {
  std::string out = "stage   remaining/tp   subset F1   retention\n";
  char line[128];
  for (const StageScore& s : e.stages) {
    const std::string counts = std::to_string(s.remaining) + "/" + std::to_string(s.tp);
    std::snprintf(line, sizeof line, "%-7s %-14s %-11s %s\n", std::string(StageName(s.stage)).c_str(),
                  counts.c_str(), Percent(s.f1).c_str(), Percent(s.retention).c_str());
    out += line;
  }
  out += "total positives: " + std::to_string(e.total_positives) + "\n";
  out += "labeled candidates: " + std::to_string(e.labeled) + "\n";
  if (e.ne_stats) {
    std::uint64_t always = 0;
    for (const auto& [times, count] : e.ne_stats->always_explained) always += count;
    out += "entities scored: " + std::to_string(e.ne_stats->stats.size()) +
           ", always explained: " + std::to_string(always) + "\n";
    for (const auto& [times, count] : e.ne_stats->always_explained) {
      out += "  explained " + std::to_string(times) + "x: " + std::to_string(count) + "\n";
    }
  }
  return out;
}

}  // namespace explmine
