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

#include "explmine/corpus.h"

#include <algorithm>
#include <charconv>

#include "explmine/error.h"
#include "explmine/io.h"
#include "explmine/unicode.h"

namespace explmine {

namespace {

bool ReadLine(std::ifstream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

bool ParseIndex(std::string_view s, std::uint32_t& value) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

bool SentencePair::HasLink(std::size_t src, std::size_t tgt) const {
  const AlignmentLink link{static_cast<std::uint32_t>(src),
                           static_cast<std::uint32_t>(tgt)};
  return std::binary_search(alignment.begin(), alignment.end(), link);
}

bool SentencePair::SrcAligned(std::size_t src) const {
  auto it = std::lower_bound(alignment.begin(), alignment.end(),
                             AlignmentLink{static_cast<std::uint32_t>(src), 0});
  return it != alignment.end() && it->src == src;
}

bool SentencePair::TgtAligned(std::size_t tgt) const {
  return std::any_of(alignment.begin(), alignment.end(),
                     [tgt](const AlignmentLink& l) { return l.tgt == tgt; });
}

std::vector<std::uint32_t> SentencePair::TargetsOf(std::size_t src) const {
  std::vector<std::uint32_t> out;
  auto it = std::lower_bound(alignment.begin(), alignment.end(),
                             AlignmentLink{static_cast<std::uint32_t>(src), 0});
  for (; it != alignment.end() && it->src == src; ++it) out.push_back(it->tgt);
  return out;
}

std::vector<std::string> SplitTokens(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.emplace_back(line.substr(start, i - start));
  }
  return tokens;
}

std::string JoinTokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

bool IsPunctuation(std::string_view token) {
  if (token.empty()) return false;
  for (char32_t c : DecodeUtf8(token)) {
    if (c == 0xFFFD || !IsPunctuationChar(c)) return false;
  }
  return true;
}

Alignment ParseAlignmentLine(std::string_view line, std::int64_t line_number) {
  Alignment links;
  for (const std::string& item : SplitTokens(line)) {
    const auto dash = item.find('-');
    AlignmentLink link;
    if (dash == std::string::npos ||
        !ParseIndex(std::string_view(item).substr(0, dash), link.src) ||
        !ParseIndex(std::string_view(item).substr(dash + 1), link.tgt)) {
      throw Error("malformed alignment link '" + item + "' at line " +
                  std::to_string(line_number));
    }
    links.push_back(link);
  }
  NormalizeAlignment(links);
  return links;
}

std::string FormatAlignment(const Alignment& alignment) {
  std::string out;
  for (std::size_t i = 0; i < alignment.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(alignment[i].src);
    out.push_back('-');
    out += std::to_string(alignment[i].tgt);
  }
  return out;
}

void NormalizeAlignment(Alignment& alignment) {
  std::sort(alignment.begin(), alignment.end());
  alignment.erase(std::unique(alignment.begin(), alignment.end()), alignment.end());
}

void CheckAlignmentRange(const SentencePair& pair) {
  for (const AlignmentLink& l : pair.alignment) {
    if (l.src >= pair.src_tokens.size() || l.tgt >= pair.tgt_tokens.size()) {
      throw Error("index out of range in pair " + std::to_string(pair.id) +
                  " (link " + std::to_string(l.src) + "-" + std::to_string(l.tgt) +
                  ")");
    }
  }
}

ParallelCorpusReader::ParallelCorpusReader(const std::string& src_path,
                                           const std::string& tgt_path)
    : src_(OpenInput(src_path)), tgt_(OpenInput(tgt_path)) {}

std::size_t ParallelCorpusReader::CountRemaining(std::ifstream& in) {
  std::size_t n = 0;
  std::string line;
  while (std::getline(in, line)) ++n;
  return n;
}

std::optional<SentencePair> ParallelCorpusReader::Next() {
  std::string src_line;
  std::string tgt_line;
  while (true) {
    const bool has_src = ReadLine(src_, src_line);
    const bool has_tgt = ReadLine(tgt_, tgt_line);
    if (!has_src && !has_tgt) return std::nullopt;
    if (has_src != has_tgt) {
      const auto base = static_cast<std::size_t>(line_);
      std::size_t src_count = base + (has_src ? 1 + CountRemaining(src_) : 0);
      std::size_t tgt_count = base + (has_tgt ? 1 + CountRemaining(tgt_) : 0);
      throw Error("line count mismatch " + std::to_string(src_count) + " vs " +
                  std::to_string(tgt_count));
    }
    SentencePair pair;
    pair.id = line_++;
    pair.src_tokens = SplitTokens(src_line);
    pair.tgt_tokens = SplitTokens(tgt_line);
    if (pair.src_tokens.empty() || pair.tgt_tokens.empty()) {
      ++skipped_empty_;
      continue;
    }
    return pair;
  }
}

AlignmentReader::AlignmentReader(const std::string& path)
    : in_(OpenInput(path)), path_(path) {}

void AlignmentReader::Attach(SentencePair& pair) {
  if (pair.id < line_) {
    throw Error("alignments must be attached in corpus order (pair " +
                std::to_string(pair.id) + ")");
  }
  std::string line;
  while (line_ <= pair.id) {
    if (!ReadLine(in_, line)) {
      throw Error("alignment file '" + path_ + "' ends at line " +
                  std::to_string(line_) + " but pair " + std::to_string(pair.id) +
                  " needs a line");
    }
    ++line_;
  }
  pair.alignment = ParseAlignmentLine(line, line_);
  CheckAlignmentRange(pair);
}

std::vector<SentencePair> LoadParallelCorpus(const std::string& src_path,
                                             const std::string& tgt_path,
                                             std::size_t* skipped_empty) {
  ParallelCorpusReader reader(src_path, tgt_path);
  std::vector<SentencePair> pairs;
  while (auto pair = reader.Next()) pairs.push_back(std::move(*pair));
  if (skipped_empty) *skipped_empty = reader.skipped_empty();
  return pairs;
}

void LoadAlignments(const std::string& path, std::vector<SentencePair>& pairs) {
  AlignmentReader reader(path);
  for (SentencePair& pair : pairs) reader.Attach(pair);
}

void WriteParallelCorpus(const std::vector<SentencePair>& pairs,
                         const std::string& src_path, const std::string& tgt_path) {
  std::ofstream src = OpenOutput(src_path);
  std::ofstream tgt = OpenOutput(tgt_path);
  PairId next = 0;
  for (const SentencePair& pair : pairs) {
    for (; next < pair.id; ++next) {
      src << '\n';
      tgt << '\n';
    }
    src << JoinTokens(pair.src_tokens) << '\n';
    tgt << JoinTokens(pair.tgt_tokens) << '\n';
    next = pair.id + 1;
  }
  CloseOutput(src, src_path);
  CloseOutput(tgt, tgt_path);
}

void WriteAlignments(const std::vector<SentencePair>& pairs, const std::string& path) {
  std::ofstream out = OpenOutput(path);
  PairId next = 0;
  for (const SentencePair& pair : pairs) {
    for (; next < pair.id; ++next) out << '\n';
    out << FormatAlignment(pair.alignment) << '\n';
    next = pair.id + 1;
  }
  CloseOutput(out, path);
}

}  // namespace explmine
