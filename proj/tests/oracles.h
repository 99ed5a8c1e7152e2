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

// Reference implementations used by property and acceptance tests. They
// follow the definitions literally (linear scans over every link, no shared
// helpers from the detector) so that agreement is meaningful.

#ifndef EXPLMINE_TESTS_ORACLES_H_
#define EXPLMINE_TESTS_ORACLES_H_

#include <cstdint>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "explmine/corpus.h"
#include "explmine/stemmer.h"
#include "explmine/vocab.h"

namespace explmine::testing {

struct OracleCandidate {
  std::uint32_t k, m, n;
  auto operator<=>(const OracleCandidate&) const = default;
};

inline std::vector<OracleCandidate> OracleSpans(const SentencePair& p, const VocabCounts& src,
                                                const VocabCounts& tgt, std::uint64_t src_thr,
                                                std::uint64_t tgt_thr, std::uint32_t min_span,
                                                const std::string& tgt_lang) {
  std::vector<OracleCandidate> out;
  const std::size_t ls = p.src_tokens.size();
  const std::size_t lt = p.tgt_tokens.size();
  for (std::size_t k = 0; k < ls; ++k) {
    for (std::size_t m = 0; m < lt; ++m) {
      bool linked = false;
      for (const auto& l : p.alignment) linked |= (l.src == k && l.tgt == m);
      if (!linked) continue;
      if (IsPunctuation(p.src_tokens[k])) continue;
      if (!(src.Count(p.src_tokens[k]) < src_thr)) continue;
      if (!(tgt.Count(p.tgt_tokens[m]) < tgt_thr)) continue;
      // (1)
      if (k + 1 >= ls) continue;
      // (2) smallest target after m linked to k+1
      std::size_t j = lt;
      for (const auto& l : p.alignment) {
        if (l.src == k + 1 && l.tgt > m && l.tgt < j) j = l.tgt;
      }
      if (j == lt) continue;
      const std::size_t n = j - m - 1;
      if (n < min_span) continue;
      // (3)
      bool aligned = false;
      for (const auto& l : p.alignment) aligned |= (l.tgt > m && l.tgt < j);
      if (aligned) continue;
      // (4) and (5)
      bool punct = false;
      bool other = false;
      // Surface forms for languages without a stemmer.
      auto form = [&](const std::string& t) {
        return HasStemmer(tgt_lang) ? Stem(t, tgt_lang) : t;
      };
      const std::string anchor_form = form(p.tgt_tokens[m]);
      for (std::size_t t = m + 1; t < j; ++t) {
        if (IsPunctuation(p.tgt_tokens[t])) {
          punct = true;
        } else if (form(p.tgt_tokens[t]) != anchor_form) {
          other = true;
        }
      }
      if (!punct || !other) continue;
      out.push_back({static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(m),
                     static_cast<std::uint32_t>(n)});
    }
  }
  return out;
}

// Random pair with lengths <= max_len over a small vocabulary mixing words,
// punctuation and inflected forms; dense enough that every condition fires.
inline SentencePair RandomPair(std::mt19937_64& rng, std::size_t max_len, PairId id) {
  static const std::vector<std::string> kVocab = {
      "Bunyan", "Autor", "der", ",", "(", ")", "Pilgerreise", "Pilgerreisen",
      "bekannten", "hat", ".", "\xEF\xBC\x88", "Haus", "Hauses", "x"};
  auto uni = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  SentencePair p;
  p.id = id;
  const std::size_t ls = uni(1, max_len);
  const std::size_t lt = uni(1, max_len);
  for (std::size_t i = 0; i < ls; ++i) p.src_tokens.push_back(kVocab[uni(0, kVocab.size() - 1)]);
  for (std::size_t i = 0; i < lt; ++i) p.tgt_tokens.push_back(kVocab[uni(0, kVocab.size() - 1)]);
  const std::size_t mode = uni(0, 3);
  if (mode == 0) {
    // Uniform links, density ~ 0 .. 1.5 per token.
    const std::size_t links = uni(0, 3) * std::max(ls, lt) / 2;
    for (std::size_t i = 0; i < links; ++i) {
      p.alignment.push_back({static_cast<std::uint32_t>(uni(0, ls - 1)),
                             static_cast<std::uint32_t>(uni(0, lt - 1))});
    }
  } else if (mode == 1) {
    // Roughly monotone links with occasional gaps.
    std::size_t t = 0;
    for (std::size_t i = 0; i < ls; ++i) {
      t += uni(0, 2) == 0 ? uni(3, 6) : uni(0, 1);
      if (t >= lt) break;
      if (uni(0, 4) > 0) {
        p.alignment.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(t)});
      }
    }
  } else if (ls >= 2 && lt >= 2) {
    // A k -> m, k+1 -> m+n+1 skeleton plus random noise links, so that the
    // later conditions are reached often.
    const std::size_t k = uni(0, ls - 2);
    const std::size_t m = uni(0, (lt - 2) / 2);
    const std::size_t j = std::min(lt - 1, m + 1 + uni(1, 6));
    p.alignment.push_back({static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(m)});
    p.alignment.push_back({static_cast<std::uint32_t>(k + 1), static_cast<std::uint32_t>(j)});
    const std::size_t noise = uni(0, 3);
    for (std::size_t i = 0; i < noise; ++i) {
      p.alignment.push_back({static_cast<std::uint32_t>(uni(0, ls - 1)),
                             static_cast<std::uint32_t>(uni(0, lt - 1))});
    }
  }
  NormalizeAlignment(p.alignment);
  return p;
}

}  // namespace explmine::testing

#endif  // EXPLMINE_TESTS_ORACLES_H_
