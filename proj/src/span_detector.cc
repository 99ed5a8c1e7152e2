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

#include "explmine/span_detector.h"

#include <algorithm>

#include "explmine/stemmer.h"

namespace explmine {

namespace {

constexpr std::array<std::string_view, kSpanRejectCount> kRejectNames = {
    "no_next_source", "next_unaligned", "no_following_link", "span_too_short",
    "span_aligned",   "no_punct",       "no_other_content"};

}  // namespace

std::string_view SpanRejectName(SpanReject reason) {
  return kRejectNames[static_cast<std::size_t>(reason)];
}

void SpanStats::Merge(const SpanStats& other) {
  for (std::size_t i = 0; i < rejected.size(); ++i) rejected[i] += other.rejected[i];
  emitted += other.emitted;
}

std::variant<Candidate, SpanReject> EvaluateAnchor(const SentencePair& pair,
                                                   const Anchor& anchor,
                                                   const SpanConfig& cfg) {
  const std::uint32_t k = anchor.k;
  const std::uint32_t m = anchor.m;
  if (static_cast<std::size_t>(k) + 1 >= pair.src_tokens.size()) {
    return SpanReject::kNoNextSource;
  }
  const std::vector<std::uint32_t> targets = pair.TargetsOf(k + 1);
  if (targets.empty()) return SpanReject::kNextUnaligned;
  auto next = std::upper_bound(targets.begin(), targets.end(), m);
  if (next == targets.end()) return SpanReject::kNoFollowingLink;
  const std::uint32_t span_len = *next - m - 1;
  if (span_len < cfg.min_span) return SpanReject::kSpanTooShort;

  const std::uint32_t begin = m + 1;
  const std::uint32_t end = begin + span_len;
  for (const AlignmentLink& link : pair.alignment) {
    if (link.tgt >= begin && link.tgt < end) return SpanReject::kSpanAligned;
  }

  const bool stemmed = HasStemmer(cfg.tgt_lang);
  auto normalize = [&](const std::string& token) {
    return stemmed ? Stem(token, cfg.tgt_lang) : token;
  };
  const std::string anchor_form = normalize(pair.tgt_tokens[m]);

  SpanFeatures features;
  features.span_unaligned = true;
  for (std::uint32_t j = begin; j < end; ++j) {
    const std::string& token = pair.tgt_tokens[j];
    if (IsPunctuation(token)) {
      features.has_punct = true;
    } else if (!features.has_other_content && normalize(token) != anchor_form) {
      features.has_other_content = true;
    }
  }
  if (!features.has_punct) return SpanReject::kNoPunct;
  if (!features.has_other_content) return SpanReject::kNoOtherContent;

  Candidate cand;
  cand.pair_id = pair.id;
  cand.k = k;
  cand.m = m;
  cand.span_len = span_len;
  cand.features = features;
  cand.stage = Stage::kSpan;
  cand.src_tokens = pair.src_tokens;
  cand.tgt_tokens = pair.tgt_tokens;
  return cand;
}

std::vector<Candidate> DetectSpans(const SentencePair& pair,
                                   const std::vector<Anchor>& anchors,
                                   const SpanConfig& cfg, SpanStats* stats) {
  std::vector<Candidate> out;
  for (const Anchor& anchor : anchors) {
    auto result = EvaluateAnchor(pair, anchor, cfg);
    if (auto* cand = std::get_if<Candidate>(&result)) {
      out.push_back(std::move(*cand));
      if (stats) ++stats->emitted;
    } else if (stats) {
      ++stats->rejected[static_cast<std::size_t>(std::get<SpanReject>(result))];
    }
  }
  return out;
}

}  // namespace explmine
