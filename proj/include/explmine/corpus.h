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

// Sentence-pair model and readers for pre-tokenized parallel text and
// Pharaoh-style word alignments ("i-j" = source token i, target token j).

#ifndef EXPLMINE_CORPUS_H_
#define EXPLMINE_CORPUS_H_

#include <compare>
#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace explmine {

using PairId = std::int64_t;

struct AlignmentLink {
  std::uint32_t src = 0;
  std::uint32_t tgt = 0;

  auto operator<=>(const AlignmentLink&) const = default;
};

// Sorted by (src, tgt) without duplicates.
using Alignment = std::vector<AlignmentLink>;

struct SentencePair {
  PairId id = 0;
  std::vector<std::string> src_tokens;
  std::vector<std::string> tgt_tokens;
  Alignment alignment;

  bool operator==(const SentencePair&) const = default;

  bool HasLink(std::size_t src, std::size_t tgt) const;
  bool SrcAligned(std::size_t src) const;
  bool TgtAligned(std::size_t tgt) const;
  // Target indexes linked to source index `src`, ascending.
  std::vector<std::uint32_t> TargetsOf(std::size_t src) const;
};

// Splits on ASCII space and tab. A trailing CR is ignored.
std::vector<std::string> SplitTokens(std::string_view line);
std::string JoinTokens(const std::vector<std::string>& tokens);

// True iff the token is non-empty, valid UTF-8 and every code point is in a
// Unicode punctuation category (P*).
bool IsPunctuation(std::string_view token);

// Parses one alignment line. Throws Error naming `line_number` (1-based) on a
// malformed link. Duplicates collapse.
Alignment ParseAlignmentLine(std::string_view line, std::int64_t line_number);
std::string FormatAlignment(const Alignment& alignment);
void NormalizeAlignment(Alignment& alignment);

// Throws Error "index out of range in pair <id>" if any link falls outside
// the token lists.
void CheckAlignmentRange(const SentencePair& pair);

// Streams sentence pairs from two line-parallel files. Pair id is the
// 0-based line number. Lines where either side has no tokens are skipped and
// counted.
class ParallelCorpusReader {
 public:
  ParallelCorpusReader(const std::string& src_path, const std::string& tgt_path);

  std::optional<SentencePair> Next();

  std::size_t skipped_empty() const { return skipped_empty_; }
  std::int64_t lines_read() const { return line_; }

 private:
  std::size_t CountRemaining(std::ifstream& in);

  std::ifstream src_;
  std::ifstream tgt_;
  std::int64_t line_ = 0;
  std::size_t skipped_empty_ = 0;
};

// Reads one alignment line per corpus line, in corpus order. Attach() may skip
// lines belonging to pairs that were dropped as empty.
class AlignmentReader {
 public:
  explicit AlignmentReader(const std::string& path);

  void Attach(SentencePair& pair);

 private:
  std::ifstream in_;
  std::string path_;
  std::int64_t line_ = 0;
};

std::vector<SentencePair> LoadParallelCorpus(const std::string& src_path,
                                             const std::string& tgt_path,
                                             std::size_t* skipped_empty = nullptr);
void LoadAlignments(const std::string& path, std::vector<SentencePair>& pairs);

// Writers emit one line per id from 0 to the largest id, with empty lines for
// ids not present, so that re-loading reproduces the same ids.
void WriteParallelCorpus(const std::vector<SentencePair>& pairs,
                         const std::string& src_path, const std::string& tgt_path);
void WriteAlignments(const std::vector<SentencePair>& pairs, const std::string& path);

}  // namespace explmine

#endif  // EXPLMINE_CORPUS_H_
