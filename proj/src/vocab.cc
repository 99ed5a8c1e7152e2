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

#include "explmine/vocab.h"

#include <algorithm>
#include <charconv>

#include "explmine/error.h"
#include "explmine/io.h"

namespace explmine {

namespace {

bool IsDocMarker(std::string_view line) {
  return line.starts_with("<doc ") || line.starts_with("<doc>") ||
         line.starts_with("</doc>");
}

bool ParseCount(std::string_view s, std::uint64_t& value) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

std::uint64_t VocabCounts::Count(std::string_view token) const {
  auto it = counts_.find(token);
  return it == counts_.end() ? 0 : it->second;
}

void VocabCounts::Add(std::string_view token, std::uint64_t n) {
  if (n == 0) return;
  auto it = counts_.find(token);
  if (it == counts_.end()) {
    counts_.emplace(std::string(token), n);
  } else {
    it->second += n;
  }
  total_ += n;
}

void VocabCounts::AddLine(std::string_view line) {
  for (const std::string& token : SplitTokens(line)) Add(token);
}

void VocabCounts::Merge(const VocabCounts& other) {
  if (!lang_.empty() && !other.lang_.empty() && lang_ != other.lang_) {
    throw Error("cannot merge counts for '" + lang_ + "' and '" + other.lang_ + "'");
  }
  if (lang_.empty()) lang_ = other.lang_;
  for (const auto& [token, n] : other.counts_) Add(token, n);
}

std::vector<std::pair<std::string, std::uint64_t>> VocabCounts::Sorted() const {
  std::vector<std::pair<std::string, std::uint64_t>> rows(counts_.begin(),
                                                          counts_.end());
  std::sort(rows.begin(), rows.end());
  return rows;
}

bool VocabCounts::operator==(const VocabCounts& other) const {
  return lang_ == other.lang_ && total_ == other.total_ && counts_ == other.counts_;
}

VocabCounts CountWords(std::istream& text, const std::string& lang) {
  VocabCounts counts(lang);
  std::string line;
  while (std::getline(text, line)) {
    if (IsDocMarker(line)) continue;
    counts.AddLine(line);
  }
  return counts;
}

VocabCounts CountWords(const std::vector<std::string>& lines, const std::string& lang) {
  VocabCounts counts(lang);
  for (const std::string& line : lines) {
    if (IsDocMarker(line)) continue;
    counts.AddLine(line);
  }
  return counts;
}

bool IsRare(std::string_view token, const VocabCounts& counts, std::uint64_t threshold) {
  return counts.Count(token) < threshold;
}

std::vector<Anchor> PairRarityGate(const SentencePair& pair, const VocabCounts& src_counts,
                                   const VocabCounts& tgt_counts, const RarityConfig& cfg) {
  std::vector<Anchor> anchors;
  for (const AlignmentLink& link : pair.alignment) {
    const std::string& src = pair.src_tokens[link.src];
    if (IsPunctuation(src)) continue;
    if (!IsRare(src, src_counts, cfg.src_threshold)) continue;
    if (!IsRare(pair.tgt_tokens[link.tgt], tgt_counts, cfg.tgt_threshold)) continue;
    anchors.push_back({link.src, link.tgt});
  }
  return anchors;
}

void WriteCounts(const VocabCounts& counts, std::ostream& out) {
  out << "#lang=" << counts.lang() << "\ttotal=" << counts.total_tokens() << '\n';
  for (const auto& [token, n] : counts.Sorted()) out << token << '\t' << n << '\n';
}

void WriteCounts(const VocabCounts& counts, const std::string& path) {
  std::ofstream out = OpenOutput(path);
  WriteCounts(counts, out);
  CloseOutput(out, path);
}

VocabCounts ReadCounts(std::istream& in, const std::string& source_name) {
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(source_name + ": empty count table (missing header)");
  }
  std::string_view header(line);
  const auto tab = header.find('\t');
  std::uint64_t declared_total = 0;
  if (!header.starts_with("#lang=") || tab == std::string_view::npos ||
      !header.substr(tab + 1).starts_with("total=") ||
      !ParseCount(header.substr(tab + 7), declared_total)) {
    throw Error(source_name + ": malformed header '" + line + "'");
  }
  VocabCounts counts(std::string(header.substr(6, tab - 6)));
  std::int64_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    std::string_view row(line);
    const auto sep = row.rfind('\t');
    std::uint64_t n = 0;
    if (sep == std::string_view::npos || sep == 0 ||
        !ParseCount(row.substr(sep + 1), n) || n == 0) {
      throw Error(source_name + ": malformed count row at line " +
                  std::to_string(line_number));
    }
    counts.Add(row.substr(0, sep), n);
  }
  if (counts.total_tokens() != declared_total) {
    throw Error(source_name + ": header total " + std::to_string(declared_total) +
                " does not match row sum " + std::to_string(counts.total_tokens()));
  }
  return counts;
}

VocabCounts ReadCounts(const std::string& path) {
  std::ifstream in = OpenInput(path);
  return ReadCounts(in, path);
}

}  // namespace explmine
