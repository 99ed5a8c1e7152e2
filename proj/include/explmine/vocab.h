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

// Word-frequency tables and the rarity filter. Counting is over surface
// forms, case-sensitive.

#ifndef EXPLMINE_VOCAB_H_
#define EXPLMINE_VOCAB_H_

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "explmine/corpus.h"

namespace explmine {

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const {
    return std::hash<std::string_view>{}(s);
  }
};

class VocabCounts {
 public:
  VocabCounts() = default;
  explicit VocabCounts(std::string lang) : lang_(std::move(lang)) {}

  const std::string& lang() const { return lang_; }
  std::uint64_t total_tokens() const { return total_; }
  std::size_t size() const { return counts_.size(); }

  // 0 for unseen tokens.
  std::uint64_t Count(std::string_view token) const;

  void Add(std::string_view token, std::uint64_t n = 1);
  void AddLine(std::string_view line);
  // Pointwise sum. Languages must match.
  void Merge(const VocabCounts& other);

  // (token, count) sorted by token bytes.
  std::vector<std::pair<std::string, std::uint64_t>> Sorted() const;

  bool operator==(const VocabCounts& other) const;

 private:
  std::string lang_;
  std::unordered_map<std::string, std::uint64_t, StringHash, std::equal_to<>> counts_;
  std::uint64_t total_ = 0;
};

struct RarityConfig {
  std::uint64_t src_threshold = 5000;
  std::uint64_t tgt_threshold = 5000;

  // Wider setting used for the initial widest-net run.
  static RarityConfig Initial() { return {15000, 15000}; }
};

// Counts whitespace tokens. Lines that are wikiextractor document markers
// ("<doc ...>" and "</doc>") are ignored.
VocabCounts CountWords(std::istream& text, const std::string& lang);
VocabCounts CountWords(const std::vector<std::string>& lines, const std::string& lang);

// Strictly below the threshold; unseen tokens count as 0.
bool IsRare(std::string_view token, const VocabCounts& counts, std::uint64_t threshold);

struct Anchor {
  std::uint32_t k = 0;  // source index
  std::uint32_t m = 0;  // target index

  auto operator<=>(const Anchor&) const = default;
};

// All aligned (k, m) where both tokens are rare on their side and the source
// token is not punctuation. Ordered by (k, m).
std::vector<Anchor> PairRarityGate(const SentencePair& pair, const VocabCounts& src_counts,
                                   const VocabCounts& tgt_counts, const RarityConfig& cfg);

// Count table: header "#lang=<code>\ttotal=<n>" then "token\tcount" rows
// sorted by token.
void WriteCounts(const VocabCounts& counts, std::ostream& out);
void WriteCounts(const VocabCounts& counts, const std::string& path);
VocabCounts ReadCounts(std::istream& in, const std::string& source_name);
VocabCounts ReadCounts(const std::string& path);

}  // namespace explmine

#endif  // EXPLMINE_VOCAB_H_
