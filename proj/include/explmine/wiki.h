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

// Wikipedia title indexes and the final automatic gate. A candidate's source
// entity must be a source-language article title; it survives if the target
// language has no article for its counterpart, or has a smaller one.

#ifndef EXPLMINE_WIKI_H_
#define EXPLMINE_WIKI_H_

#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "explmine/candidate.h"
#include "explmine/corpus.h"
#include "explmine/error.h"
#include "explmine/vocab.h"

namespace explmine {

// Stemmed, lowercased title -> article size in bytes of extracted text.
class WikiIndex {
 public:
  struct Entry {
    std::uint64_t size = 0;
    std::string raw_title;  // first seen

    bool operator==(const Entry&) const = default;
  };

  WikiIndex() = default;
  explicit WikiIndex(std::string lang) : lang_(std::move(lang)) {}

  const std::string& lang() const { return lang_; }
  std::size_t size() const { return titles_.size(); }

  // Stems the whitespace-split title. Duplicate stems keep the larger size.
  void AddArticle(std::string_view raw_title, std::uint64_t size);
  void AddStemmed(std::string_view stemmed, std::string_view raw_title, std::uint64_t size);

  const Entry* Find(std::string_view stemmed) const;
  bool Contains(std::string_view stemmed) const { return Find(stemmed) != nullptr; }
  // Longest title in words, for bounding n-gram lookups.
  std::size_t max_title_words() const { return max_words_; }

  // (stemmed, entry) sorted by stemmed title.
  std::vector<std::pair<std::string, Entry>> Sorted() const;

  bool operator==(const WikiIndex& other) const {
    return lang_ == other.lang_ && titles_ == other.titles_;
  }

 private:
  std::string lang_;
  std::unordered_map<std::string, Entry, StringHash, std::equal_to<>> titles_;
  std::size_t max_words_ = 0;
};

std::string StemTitle(std::string_view raw_title, std::string_view lang);

// Reads wikiextractor output, either the <doc ... title="..."> block format
// or one JSON object per line with "title" and "text". For the block format
// the text is the body after the repeated title line, lines joined by '\n'.
void ForEachArticle(std::istream& in,
                    const std::function<void(std::string_view title,
                                             std::string_view text)>& fn);

struct Article {
  std::string title;
  std::string text;
};

WikiIndex BuildWikiIndex(const std::vector<Article>& articles, const std::string& lang);
WikiIndex BuildWikiIndex(std::istream& extracted, const std::string& lang);

// TSV rows "stemmed_title\traw_title\tsize_bytes", sorted by stemmed title.
void WriteWikiIndex(const WikiIndex& index, std::ostream& out);
void WriteWikiIndex(const WikiIndex& index, const std::string& path);
WikiIndex ReadWikiIndex(std::istream& in, const std::string& lang,
                        const std::string& source_name);
WikiIndex ReadWikiIndex(const std::string& path, const std::string& lang);

// Source stemmed title -> target stemmed title.
class ParallelTitles {
 public:
  ParallelTitles() = default;
  ParallelTitles(std::string src_lang, std::string tgt_lang)
      : src_lang_(std::move(src_lang)), tgt_lang_(std::move(tgt_lang)) {}

  // Stems both sides. The first mapping for a source title wins.
  bool Add(std::string_view raw_src, std::string_view raw_tgt);
  const std::string* Find(std::string_view src_stemmed) const;
  std::size_t size() const { return map_.size(); }

  // Warns for every source title missing from `src_index`.
  void CheckAgainst(const WikiIndex& src_index, Diagnostics* diag) const;

 private:
  std::string src_lang_;
  std::string tgt_lang_;
  std::unordered_map<std::string, std::string, StringHash, std::equal_to<>> map_;
};

// TSV rows "src_title\ttgt_title" with raw titles.
ParallelTitles ReadParallelTitles(std::istream& in, const std::string& src_lang,
                                  const std::string& tgt_lang,
                                  const std::string& source_name, Diagnostics* diag);
ParallelTitles ReadParallelTitles(const std::string& path, const std::string& src_lang,
                                  const std::string& tgt_lang, Diagnostics* diag);

// Stemmed target-language phrase corresponding to the candidate's source
// entity: the parallel-title mapping when present, else the stemmed target
// tokens aligned to any token of the entity, in target order.
std::optional<std::string> TargetCounterpart(const Candidate& cand,
                                             const SentencePair& pair,
                                             const ParallelTitles& ptitles,
                                             std::string_view src_lang,
                                             std::string_view tgt_lang);

// Sizes are std::nullopt when the phrase is not a title.
WikiDecision DecideWiki(std::optional<std::uint64_t> src_size,
                        std::optional<std::uint64_t> tgt_size);
inline bool KeepsCandidate(WikiDecision d) {
  return d == WikiDecision::kSrcOnly || d == WikiDecision::kSrcLarger;
}

// Requires stage NER with ne_span set. Returns the candidate advanced to
// WIKI when kept. `decision` receives the decision either way.
std::optional<Candidate> WikiFilter(Candidate cand, const WikiIndex& src_index,
                                    const WikiIndex& tgt_index,
                                    const ParallelTitles& ptitles,
                                    const SentencePair& pair,
                                    WikiDecision* decision = nullptr);

}  // namespace explmine

#endif  // EXPLMINE_WIKI_H_
