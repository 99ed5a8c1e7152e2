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

// Redundant-span detection. For an anchor (k, m), the source token k+1 is
// aligned to some target token j > m; the target tokens strictly between m and
// j form the span. With n = j - m - 1, an anchor yields a candidate iff
//
//   1. k + 1 is a valid source index,
//   2. k + 1 has an alignment link to some j > m (the smallest such j is used)
//      and n >= min_span,
//   3. no span token takes part in any alignment link,
//   4. some span token is punctuation,
//   5. some span token is not punctuation and its stem differs from the stem
//      of target token m.

#ifndef EXPLMINE_SPAN_DETECTOR_H_
#define EXPLMINE_SPAN_DETECTOR_H_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "explmine/candidate.h"
#include "explmine/corpus.h"
#include "explmine/vocab.h"

namespace explmine {

struct SpanConfig {
  std::uint32_t min_span = 3;
  // Selects the stemmer for condition 5; without one, surfaces are compared.
  std::string tgt_lang;
};

// First failed condition, in the order listed above.
enum class SpanReject {
  kNoNextSource,      // 1
  kNextUnaligned,     // 2: k+1 has no alignment link at all
  kNoFollowingLink,   // 2: no link of k+1 lands after m
  kSpanTooShort,      // 2: n < min_span
  kSpanAligned,       // 3
  kNoPunct,           // 4
  kNoOtherContent,    // 5
};
inline constexpr std::size_t kSpanRejectCount = 7;

std::string_view SpanRejectName(SpanReject reason);  // e.g. "span_too_short"

// Drop tallies per reason, indexed by SpanReject.
struct SpanStats {
  std::array<std::uint64_t, kSpanRejectCount> rejected{};
  std::uint64_t emitted = 0;

  void Merge(const SpanStats& other);
};

// Evaluates one anchor. The candidate carries copies of the pair's tokens.
std::variant<Candidate, SpanReject> EvaluateAnchor(const SentencePair& pair,
                                                   const Anchor& anchor,
                                                   const SpanConfig& cfg);

// At most one candidate per anchor, in anchor order.
std::vector<Candidate> DetectSpans(const SentencePair& pair,
                                   const std::vector<Anchor>& anchors,
                                   const SpanConfig& cfg, SpanStats* stats = nullptr);

}  // namespace explmine

#endif  // EXPLMINE_SPAN_DETECTOR_H_
