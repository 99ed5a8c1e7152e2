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

#include "explmine/wiki.h"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "explmine/io.h"
#include "explmine/stemmer.h"
#include "json.hpp"

namespace explmine {

namespace {

std::size_t WordCount(std::string_view s) {
  std::size_t n = 0;
  bool in_word = false;
  for (char c : s) {
    const bool space = c == ' ';
    if (!space && !in_word) ++n;
    in_word = !space;
  }
  return n;
}

std::string DecodeEntities(std::string_view s) {
  static constexpr std::pair<std::string_view, char> kEntities[] = {
      {"&amp;", '&'}, {"&quot;", '"'}, {"&lt;", '<'}, {"&gt;", '>'}, {"&#39;", '\''}};
  std::string out;
  for (std::size_t i = 0; i < s.size();) {
    bool replaced = false;
    if (s[i] == '&') {
      for (const auto& [name, c] : kEntities) {
        if (s.substr(i).starts_with(name)) {
          out.push_back(c);
          i += name.size();
          replaced = true;
          break;
        }
      }
    }
    if (!replaced) out.push_back(s[i++]);
  }
  return out;
}

std::string TitleAttribute(std::string_view tag) {
  const auto pos = tag.find(" title=\"");
  if (pos == std::string_view::npos) return {};
  const auto start = pos + 8;
  const auto end = tag.find('"', start);
  if (end == std::string_view::npos) return {};
  return DecodeEntities(tag.substr(start, end - start));
}

std::string_view TrimNewlines(std::string_view s) {
  while (!s.empty() && s.front() == '\n') s.remove_prefix(1);
  while (!s.empty() && s.back() == '\n') s.remove_suffix(1);
  return s;
}

bool ParseSize(std::string_view s, std::uint64_t& value) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

std::string StemTitle(std::string_view raw_title, std::string_view lang) {
  return StemPhrase(SplitTokens(raw_title), lang);
}

void WikiIndex::AddArticle(std::string_view raw_title, std::uint64_t size) {
  const std::string stemmed = StemTitle(raw_title, lang_);
  if (stemmed.empty()) return;
  AddStemmed(stemmed, raw_title, size);
}

void WikiIndex::AddStemmed(std::string_view stemmed, std::string_view raw_title,
                           std::uint64_t size) {
  auto it = titles_.find(stemmed);
  if (it == titles_.end()) {
    titles_.emplace(std::string(stemmed), Entry{size, std::string(raw_title)});
    max_words_ = std::max(max_words_, WordCount(stemmed));
  } else {
    it->second.size = std::max(it->second.size, size);
  }
}

const WikiIndex::Entry* WikiIndex::Find(std::string_view stemmed) const {
  auto it = titles_.find(stemmed);
  return it == titles_.end() ? nullptr : &it->second;
}

std::vector<std::pair<std::string, WikiIndex::Entry>> WikiIndex::Sorted() const {
  std::vector<std::pair<std::string, Entry>> rows(titles_.begin(), titles_.end());
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return rows;
}

void ForEachArticle(std::istream& in,
                    const std::function<void(std::string_view, std::string_view)>& fn) {
  std::string line;
  std::string title;
  std::string body;
  bool in_doc = false;
  bool title_line_pending = false;
  std::int64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!in_doc) {
      if (line.starts_with("{")) {
        nlohmann::json doc;
        try {
          doc = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
          throw Error("malformed article record at line " + std::to_string(line_number) +
                      ": " + e.what());
        }
        if (!doc.contains("title") || !doc["title"].is_string() ||
            !doc.contains("text") || !doc["text"].is_string()) {
          throw Error("article record without title/text at line " +
                      std::to_string(line_number));
        }
        fn(doc["title"].get_ref<const std::string&>(),
           doc["text"].get_ref<const std::string&>());
      } else if (line.starts_with("<doc")) {
        in_doc = true;
        title = TitleAttribute(line);
        body.clear();
        title_line_pending = true;
      }
      continue;
    }
    if (line.starts_with("</doc>")) {
      fn(title, TrimNewlines(body));
      in_doc = false;
      continue;
    }
    if (title_line_pending) {
      title_line_pending = false;
      if (line == title) continue;
    }
    if (!body.empty() || !line.empty()) {
      body += line;
      body.push_back('\n');
    }
  }
  if (in_doc) throw Error("unterminated <doc> block at end of input");
}

WikiIndex BuildWikiIndex(const std::vector<Article>& articles, const std::string& lang) {
  WikiIndex index(lang);
  for (const Article& a : articles) index.AddArticle(a.title, a.text.size());
  return index;
}

WikiIndex BuildWikiIndex(std::istream& extracted, const std::string& lang) {
  WikiIndex index(lang);
  ForEachArticle(extracted, [&](std::string_view title, std::string_view text) {
    index.AddArticle(title, text.size());
  });
  return index;
}

void WriteWikiIndex(const WikiIndex& index, std::ostream& out) {
  for (const auto& [stemmed, entry] : index.Sorted()) {
    out << stemmed << '\t' << entry.raw_title << '\t' << entry.size << '\n';
  }
}

void WriteWikiIndex(const WikiIndex& index, const std::string& path) {
  std::ofstream out = OpenOutput(path);
  WriteWikiIndex(index, out);
  CloseOutput(out, path);
}

WikiIndex ReadWikiIndex(std::istream& in, const std::string& lang,
                        const std::string& source_name) {
  WikiIndex index(lang);
  std::string line;
  std::int64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    std::string_view row(line);
    const auto t1 = row.find('\t');
    const auto t2 = t1 == std::string_view::npos ? t1 : row.find('\t', t1 + 1);
    std::uint64_t size = 0;
    if (t2 == std::string_view::npos || t1 == 0 ||
        !ParseSize(row.substr(t2 + 1), size)) {
      throw Error(source_name + ": malformed title index row at line " +
                  std::to_string(line_number));
    }
    index.AddStemmed(row.substr(0, t1), row.substr(t1 + 1, t2 - t1 - 1), size);
  }
  return index;
}

WikiIndex ReadWikiIndex(const std::string& path, const std::string& lang) {
  std::ifstream in = OpenInput(path);
  return ReadWikiIndex(in, lang, path);
}

bool ParallelTitles::Add(std::string_view raw_src, std::string_view raw_tgt) {
  std::string src = StemTitle(raw_src, src_lang_);
  std::string tgt = StemTitle(raw_tgt, tgt_lang_);
  if (src.empty() || tgt.empty()) return false;
  return map_.emplace(std::move(src), std::move(tgt)).second;
}

const std::string* ParallelTitles::Find(std::string_view src_stemmed) const {
  auto it = map_.find(src_stemmed);
  return it == map_.end() ? nullptr : &it->second;
}

void ParallelTitles::CheckAgainst(const WikiIndex& src_index, Diagnostics* diag) const {
  if (diag == nullptr) return;
  std::vector<std::string> missing;
  for (const auto& [src, tgt] : map_) {
    if (!src_index.Contains(src)) missing.push_back(src);
  }
  std::sort(missing.begin(), missing.end());
  for (const std::string& s : missing) {
    diag->warn("parallel title '" + s + "' is not in the source title index");
  }
}

ParallelTitles ReadParallelTitles(std::istream& in, const std::string& src_lang,
                                  const std::string& tgt_lang,
                                  const std::string& source_name, Diagnostics* diag) {
  ParallelTitles titles(src_lang, tgt_lang);
  std::string line;
  std::int64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw Error(source_name + ": malformed parallel title row at line " +
                  std::to_string(line_number));
    }
    std::string_view tgt = std::string_view(line).substr(tab + 1);
    if (tgt.find('\t') != std::string_view::npos) {
      throw Error(source_name + ": malformed parallel title row at line " +
                  std::to_string(line_number));
    }
    if (!titles.Add(std::string_view(line).substr(0, tab), tgt) && diag) {
      diag->warn(source_name + ": ignored parallel title at line " +
                 std::to_string(line_number) + " (empty or duplicate source title)");
    }
  }
  return titles;
}

ParallelTitles ReadParallelTitles(const std::string& path, const std::string& src_lang,
                                  const std::string& tgt_lang, Diagnostics* diag) {
  std::ifstream in = OpenInput(path);
  return ReadParallelTitles(in, src_lang, tgt_lang, path, diag);
}

std::optional<std::string> TargetCounterpart(const Candidate& cand,
                                             const SentencePair& pair,
                                             const ParallelTitles& ptitles,
                                             std::string_view src_lang,
                                             std::string_view tgt_lang) {
  if (!cand.ne_span) return std::nullopt;
  const TokenRange ne = *cand.ne_span;
  const std::span<const std::string> entity(pair.src_tokens.data() + ne.start, ne.size());
  const std::string src_phrase = StemPhrase(entity, src_lang);
  if (const std::string* mapped = ptitles.Find(src_phrase)) return *mapped;

  std::vector<std::uint32_t> targets;
  for (const AlignmentLink& link : pair.alignment) {
    if (ne.Contains(link.src)) targets.push_back(link.tgt);
  }
  if (targets.empty()) return std::nullopt;
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  std::vector<std::string> tokens;
  tokens.reserve(targets.size());
  for (std::uint32_t j : targets) tokens.push_back(pair.tgt_tokens[j]);
  return StemPhrase(tokens, tgt_lang);
}

WikiDecision DecideWiki(std::optional<std::uint64_t> src_size,
                        std::optional<std::uint64_t> tgt_size) {
  if (!src_size) return WikiDecision::kNoSrcTitle;
  if (!tgt_size) return WikiDecision::kSrcOnly;
  return *src_size > *tgt_size ? WikiDecision::kSrcLarger : WikiDecision::kTgtCovers;
}

std::optional<Candidate> WikiFilter(Candidate cand, const WikiIndex& src_index,
                                    const WikiIndex& tgt_index,
                                    const ParallelTitles& ptitles,
                                    const SentencePair& pair, WikiDecision* decision) {
  if (cand.stage != Stage::kNer || !cand.ne_span) {
    throw Error("wiki gate needs an NER-stage candidate, got " + cand.id());
  }
  const TokenRange ne = *cand.ne_span;
  if (ne.end > pair.src_tokens.size() || ne.start >= ne.end) {
    throw Error("entity span out of range for candidate " + cand.id());
  }
  const std::span<const std::string> entity(pair.src_tokens.data() + ne.start, ne.size());
  const std::string src_phrase = StemPhrase(entity, src_index.lang());

  std::optional<std::uint64_t> src_size;
  std::optional<std::uint64_t> tgt_size;
  if (const auto* e = src_index.Find(src_phrase)) src_size = e->size;
  if (src_size) {
    auto counterpart =
        TargetCounterpart(cand, pair, ptitles, src_index.lang(), tgt_index.lang());
    if (counterpart) {
      if (const auto* e = tgt_index.Find(*counterpart)) tgt_size = e->size;
    }
  }
  const WikiDecision d = DecideWiki(src_size, tgt_size);
  if (decision) *decision = d;
  cand.wiki_decision = d;
  if (!KeepsCandidate(d)) return std::nullopt;
  cand.stage = Stage::kWiki;
  return cand;
}

}  // namespace explmine
