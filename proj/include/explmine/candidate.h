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

#ifndef EXPLMINE_CANDIDATE_H_
#define EXPLMINE_CANDIDATE_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "explmine/corpus.h"

namespace explmine {

enum class Stage { kSpan, kNer, kWiki, kLabeled };

enum class WikiDecision { kNoSrcTitle, kSrcOnly, kSrcLarger, kTgtCovers };

std::string_view StageName(Stage stage);  // "SPAN", "NER", "WIKI", "LABELED"
std::optional<Stage> ParseStage(std::string_view name);  // case-insensitive
std::string_view WikiDecisionName(WikiDecision decision);  // "SRC_ONLY", ...
std::optional<WikiDecision> ParseWikiDecision(std::string_view name);

// Half-open token range [start, end).
struct TokenRange {
  std::uint32_t start = 0;
  std::uint32_t end = 0;

  std::uint32_t size() const { return end - start; }
  bool Contains(std::uint32_t i) const { return start <= i && i < end; }
  auto operator<=>(const TokenRange&) const = default;
};

struct SpanFeatures {
  bool has_punct = false;
  bool has_other_content = false;
  bool span_unaligned = false;

  bool operator==(const SpanFeatures&) const = default;
};

// Identity used for subset checks across stages and runs.
struct CandidateKey {
  PairId pair_id = 0;
  std::uint32_t k = 0;
  std::uint32_t m = 0;
  std::uint32_t span_len = 0;

  auto operator<=>(const CandidateKey&) const = default;
};

// A source token k, its aligned target token m, and the unaligned target
// span m+1 .. m+span_len that may hold an explanation of it.
struct Candidate {
  PairId pair_id = 0;
  std::uint32_t k = 0;
  std::uint32_t m = 0;
  std::uint32_t span_len = 0;
  SpanFeatures features;
  Stage stage = Stage::kSpan;
  std::optional<TokenRange> ne_span;
  std::optional<WikiDecision> wiki_decision;
  std::vector<std::string> src_tokens;
  std::vector<std::string> tgt_tokens;

  std::uint32_t span_start() const { return m + 1; }
  std::uint32_t next_src() const { return k + 1; }
  std::uint32_t next_tgt() const { return m + span_len + 1; }
  TokenRange span() const { return {span_start(), span_start() + span_len}; }

  CandidateKey key() const { return {pair_id, k, m, span_len}; }
  // "<pair_id>:<k>:<m>:<span_len>"
  std::string id() const;

  bool operator==(const Candidate&) const = default;
};

std::optional<CandidateKey> ParseCandidateId(std::string_view id);

}  // namespace explmine

#endif  // EXPLMINE_CANDIDATE_H_
