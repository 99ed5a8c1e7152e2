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

// Review labels. The label file is append-only JSON lines:
//
//   {"candidate_id":"0:1:1:7","verdict":"EXPLANATION","annotator":"ann1",
//    "timestamp":"2026-10-15T09:30:00.000Z"}
//
// Replaying it keeps, per (candidate, annotator), the label with the latest
// timestamp. A candidate's verdict is taken from its most recent label over
// all annotators.

#ifndef EXPLMINE_LABELS_H_
#define EXPLMINE_LABELS_H_

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "explmine/error.h"

namespace explmine {

enum class Verdict { kExplanation, kNotExplanation };

std::string_view VerdictName(Verdict verdict);  // "EXPLANATION", "NOT_EXPLANATION"
std::optional<Verdict> ParseVerdict(std::string_view name);

// Microseconds since the Unix epoch. Accepts RFC 3339 date-times with an
// optional fraction and a "Z" or +hh:mm offset.
std::optional<std::int64_t> ParseRfc3339(std::string_view text);
// UTC with millisecond precision, e.g. "2026-10-15T09:30:00.000Z".
std::string FormatRfc3339(std::int64_t micros);
std::int64_t NowMicros();

struct ReviewLabel {
  std::string candidate_id;
  Verdict verdict = Verdict::kExplanation;
  std::string annotator;
  std::string timestamp;
  std::int64_t time_us = 0;  // parsed timestamp

  bool operator==(const ReviewLabel&) const = default;
};

std::string FormatLabelRecord(const ReviewLabel& label);
// Throws Error naming the offending field.
ReviewLabel ParseLabelRecord(std::string_view line, std::int64_t line_number);

struct LabelTally {
  std::uint64_t labeled = 0;  // candidates with a verdict
  std::uint64_t explanation = 0;
  std::uint64_t not_explanation = 0;
};

class LabelLog {
 public:
  void Add(ReviewLabel label);
  const std::vector<ReviewLabel>& all() const { return labels_; }

  // Latest label per (candidate_id, annotator); later lines win ties.
  std::map<std::pair<std::string, std::string>, ReviewLabel> Effective() const;
  // Verdict per candidate from the latest effective label across annotators.
  std::map<std::string, Verdict> Verdicts() const;
  LabelTally Tally() const;

  // Warns once per label whose candidate is not in `known`.
  void CheckKnown(const std::set<std::string>& known, Diagnostics* diag) const;

 private:
  std::vector<ReviewLabel> labels_;
};

LabelLog ReadLabels(std::istream& in);
// A missing file is an empty log.
LabelLog LoadLabels(const std::string& path);
// Appends one record and flushes it to stable storage before returning.
void AppendLabel(const std::string& path, const ReviewLabel& label);

}  // namespace explmine

#endif  // EXPLMINE_LABELS_H_
