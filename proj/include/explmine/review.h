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

// Review service over the exported candidates and the append-only label file.
// Handlers are plain functions of request data so they can be tested without
// sockets; review_http binds them under /api/v1.

#ifndef EXPLMINE_REVIEW_H_
#define EXPLMINE_REVIEW_H_

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "explmine/candidate.h"
#include "explmine/error.h"
#include "explmine/labels.h"

namespace explmine {

struct ApiResponse {
  int status = 200;
  std::string body;  // JSON
  std::vector<std::pair<std::string, std::string>> headers;
};

class ReviewService {
 public:
  // Candidates per stage as exported; labels are replayed from `labels_path`.
  ReviewService(std::vector<Candidate> span, std::vector<Candidate> ner,
                std::vector<Candidate> wiki, std::string labels_path, Diagnostics* diag);

  // stage defaults to WIKI, offset to 0, limit to 50 (at most 1000).
  ApiResponse ListCandidates(std::optional<std::string_view> stage,
                             std::optional<std::string_view> offset,
                             std::optional<std::string_view> limit) const;
  ApiResponse GetCandidate(std::string_view id) const;
  // Body {candidate_id, verdict, annotator}. The label is appended to the
  // label file before the response is produced.
  ApiResponse PostLabel(std::string_view body);
  ApiResponse Stats() const;

  // Stage counts over served candidates. Exposed for tests.
  std::size_t served() const { return by_stage_[2].size(); }

 private:
  std::string ItemJson(const Candidate& c, const std::map<std::string, Verdict>& verdicts) const;

  std::vector<Candidate> by_stage_[3];  // SPAN, NER, WIKI
  std::map<std::string, const Candidate*> by_id_;  // most advanced stage per id
  std::string labels_path_;
  mutable std::shared_mutex mu_;
  LabelLog labels_;
};

// Reads candidates.{span,ner,wiki}.jsonl from a run's output directory.
ReviewService LoadReviewService(const std::string& run_dir, const std::string& labels_path,
                                Diagnostics* diag);

// HTTP binding. Bind then Run (blocking); Stop may be called from another
// thread.
class ReviewServer {
 public:
  explicit ReviewServer(ReviewService& service);
  ~ReviewServer();
  ReviewServer(const ReviewServer&) = delete;
  ReviewServer& operator=(const ReviewServer&) = delete;

  // Returns the bound port; port 0 picks a free one. Throws Error on failure.
  int Bind(const std::string& host, int port);
  void Run();
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace explmine

#endif  // EXPLMINE_REVIEW_H_
