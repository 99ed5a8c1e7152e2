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

#include "explmine/candidate.h"

#include <array>
#include <charconv>

namespace explmine {

namespace {

constexpr std::array<std::string_view, 4> kStageNames = {"SPAN", "NER", "WIKI",
                                                         "LABELED"};
constexpr std::array<std::string_view, 4> kDecisionNames = {
    "NO_SRC_TITLE", "SRC_ONLY", "SRC_LARGER", "TGT_COVERS"};

template <typename T>
bool ParseNumber(std::string_view s, T& value) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::string Upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  }
  return out;
}

}  // namespace

std::string_view StageName(Stage stage) {
  return kStageNames[static_cast<std::size_t>(stage)];
}

std::optional<Stage> ParseStage(std::string_view name) {
  const std::string upper = Upper(name);
  for (std::size_t i = 0; i < kStageNames.size(); ++i) {
    if (upper == kStageNames[i]) return static_cast<Stage>(i);
  }
  return std::nullopt;
}

std::string_view WikiDecisionName(WikiDecision decision) {
  return kDecisionNames[static_cast<std::size_t>(decision)];
}

std::optional<WikiDecision> ParseWikiDecision(std::string_view name) {
  for (std::size_t i = 0; i < kDecisionNames.size(); ++i) {
    if (name == kDecisionNames[i]) return static_cast<WikiDecision>(i);
  }
  return std::nullopt;
}

std::string Candidate::id() const {
  return std::to_string(pair_id) + ":" + std::to_string(k) + ":" + std::to_string(m) +
         ":" + std::to_string(span_len);
}

std::optional<CandidateKey> ParseCandidateId(std::string_view id) {
  std::array<std::string_view, 4> parts;
  std::size_t n = 0;
  while (n < 4) {
    const auto colon = id.find(':');
    if (n < 3 && colon == std::string_view::npos) return std::nullopt;
    parts[n++] = id.substr(0, colon);
    if (colon == std::string_view::npos) {
      id = {};
      break;
    }
    id.remove_prefix(colon + 1);
  }
  if (n != 4 || !id.empty()) return std::nullopt;
  CandidateKey key;
  if (!ParseNumber(parts[0], key.pair_id) || key.pair_id < 0 ||
      !ParseNumber(parts[1], key.k) || !ParseNumber(parts[2], key.m) ||
      !ParseNumber(parts[3], key.span_len)) {
    return std::nullopt;
  }
  return key;
}

}  // namespace explmine
