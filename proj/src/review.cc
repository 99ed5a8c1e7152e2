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

#include "explmine/review.h"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <mutex>
#include <set>

#include "explmine/records.h"
#include "json.hpp"

namespace explmine {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr std::size_t kDefaultLimit = 50;
constexpr std::size_t kMaxLimit = 1000;

ApiResponse Json(int status, const ordered_json& body) {
  return {status, body.dump(), {}};
}

ApiResponse Problem(int status, std::string message, std::string field = {}) {
  ordered_json body;
  body["error"] = std::move(message);
  if (!field.empty()) body["field"] = std::move(field);
  return Json(status, body);
}

std::optional<std::size_t> ParseCount(std::string_view s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

ordered_json Range(std::uint32_t start, std::uint32_t end) {
  return ordered_json::array({start, end});
}

std::size_t StageSlot(Stage s) {
  switch (s) {
    case Stage::kSpan: return 0;
    case Stage::kNer: return 1;
    default: return 2;
  }
}

}  // namespace

ReviewService::ReviewService(std::vector<Candidate> span, std::vector<Candidate> ner,
                             std::vector<Candidate> wiki, std::string labels_path,
                             Diagnostics* diag)
    : labels_path_(std::move(labels_path)) {
  by_stage_[0] = std::move(span);
  by_stage_[1] = std::move(ner);
  by_stage_[2] = std::move(wiki);
  for (const auto& stage : by_stage_) {
    for (const Candidate& c : stage) by_id_[c.id()] = &c;
  }
  labels_ = LoadLabels(labels_path_);
  std::set<std::string> known;
  for (const auto& [id, c] : by_id_) known.insert(id);
  labels_.CheckKnown(known, diag);
}

std::string ReviewService::ItemJson(const Candidate& c,
                                    const std::map<std::string, Verdict>& verdicts) const {
  ordered_json item = ordered_json::parse(FormatCandidateRecord(c));
  ordered_json hl;
  hl["src_anchor"] = Range(c.k, c.k + 1);
  hl["src_entity"] = c.ne_span ? Range(c.ne_span->start, c.ne_span->end) : ordered_json();
  hl["tgt_anchor"] = Range(c.m, c.m + 1);
  hl["tgt_span"] = Range(c.span().start, c.span().end);
  item["highlights"] = std::move(hl);
  auto v = verdicts.find(c.id());
  item["verdict"] = v == verdicts.end() ? ordered_json() : ordered_json(VerdictName(v->second));
  return item.dump();
}

ApiResponse ReviewService::ListCandidates(std::optional<std::string_view> stage,
                                          std::optional<std::string_view> offset,
                                          std::optional<std::string_view> limit) const {
  Stage st = Stage::kWiki;
  if (stage && !stage->empty()) {
    auto parsed = ParseStage(*stage);
    if (!parsed || *parsed == Stage::kLabeled) {
      return Problem(400, "stage must be SPAN, NER or WIKI", "stage");
    }
    st = *parsed;
  }
  std::size_t off = 0;
  std::size_t lim = kDefaultLimit;
  if (offset) {
    auto v = ParseCount(*offset);
    if (!v) return Problem(400, "offset must be a non-negative integer", "offset");
    off = *v;
  }
  if (limit) {
    auto v = ParseCount(*limit);
    if (!v || *v == 0 || *v > kMaxLimit) {
      return Problem(400, "limit must be between 1 and " + std::to_string(kMaxLimit), "limit");
    }
    lim = *v;
  }
  const auto& all = by_stage_[StageSlot(st)];
  std::map<std::string, Verdict> verdicts;
  {
    std::shared_lock lock(mu_);
    verdicts = labels_.Verdicts();
  }
  // Items are spliced in as pre-serialized JSON to keep record key order.
  std::string items = "[";
  const std::size_t first = std::min(off, all.size());
  const std::size_t last = std::min(all.size(), first + lim);
  for (std::size_t i = first; i < last; ++i) {
    if (i > first) items.push_back(',');
    items += ItemJson(all[i], verdicts);
  }
  items.push_back(']');
  ApiResponse r;
  r.body = "{\"stage\":\"" + std::string(StageName(st)) + "\",\"total\":" +
           std::to_string(all.size()) + ",\"offset\":" + std::to_string(off) +
           ",\"limit\":" + std::to_string(lim) + ",\"items\":" + items + "}";
  r.headers.emplace_back("X-Total-Count", std::to_string(all.size()));
  return r;
}

ApiResponse ReviewService::GetCandidate(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  if (it == by_id_.end()) return Problem(404, "unknown candidate " + std::string(id));
  std::shared_lock lock(mu_);
  return {200, ItemJson(*it->second, labels_.Verdicts()), {}};
}

ApiResponse ReviewService::PostLabel(std::string_view body) {
  json doc;
  try {
    doc = json::parse(body);
  } catch (const json::exception&) {
    return Problem(400, "body is not valid JSON", "body");
  }
  if (!doc.is_object()) return Problem(400, "body must be an object", "body");
  for (const char* field : {"candidate_id", "verdict", "annotator"}) {
    auto it = doc.find(field);
    if (it == doc.end() || !it->is_string() || it->get_ref<const std::string&>().empty()) {
      return Problem(400, std::string("missing or empty string field '") + field + "'", field);
    }
  }
  ReviewLabel label;
  label.candidate_id = doc["candidate_id"].get<std::string>();
  auto verdict = ParseVerdict(doc["verdict"].get_ref<const std::string&>());
  if (!verdict) return Problem(400, "verdict must be EXPLANATION or NOT_EXPLANATION", "verdict");
  label.verdict = *verdict;
  label.annotator = doc["annotator"].get<std::string>();
  if (!by_id_.contains(label.candidate_id)) {
    return Problem(404, "unknown candidate " + label.candidate_id);
  }

  std::unique_lock lock(mu_);
  label.timestamp = FormatRfc3339(NowMicros());
  label.time_us = *ParseRfc3339(label.timestamp);
  try {
    AppendLabel(labels_path_, label);
  } catch (const Error& e) {
    return Problem(500, e.what());
  }
  labels_.Add(label);
  return {201, FormatLabelRecord(label), {}};
}

ApiResponse ReviewService::Stats() const {
  LabelTally tally;
  std::uint64_t served_explained = 0;
  {
    std::shared_lock lock(mu_);
    tally = labels_.Tally();
    for (const auto& [id, v] : labels_.Verdicts()) {
      auto it = by_id_.find(id);
      if (v == Verdict::kExplanation && it != by_id_.end() &&
          it->second->stage == Stage::kWiki) {
        ++served_explained;
      }
    }
  }
  ordered_json body;
  ordered_json stages = ordered_json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    ordered_json s;
    s["stage"] = StageName(static_cast<Stage>(i));
    s["candidates"] = by_stage_[i].size();
    stages.push_back(std::move(s));
  }
  body["stages"] = std::move(stages);
  ordered_json labels;
  labels["labeled"] = tally.labeled;
  labels["explanation"] = tally.explanation;
  labels["not_explanation"] = tally.not_explanation;
  body["labels"] = std::move(labels);
  body["served"] = served();
  body["served_explanation"] = served_explained;
  body["retention_percentage"] =
      served() == 0 ? 0.0 : static_cast<double>(served_explained) / static_cast<double>(served());
  return Json(200, body);
}

ReviewService LoadReviewService(const std::string& run_dir, const std::string& labels_path,
                                Diagnostics* diag) {
  const std::filesystem::path d(run_dir);
  return ReviewService(ReadCandidates((d / "candidates.span.jsonl").string()),
                       ReadCandidates((d / "candidates.ner.jsonl").string()),
                       ReadCandidates((d / "candidates.wiki.jsonl").string()), labels_path,
                       diag);
}

}  // namespace explmine
