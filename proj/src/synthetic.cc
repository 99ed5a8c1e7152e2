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

#include "explmine/synthetic.h"

#include <algorithm>
#include <array>
#include <filesystem>
#include <random>
#include <set>

#include "explmine/config.h"
#include "explmine/io.h"
#include "explmine/stemmer.h"
#include "json.hpp"

namespace explmine {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Parallel lists: kSrcWords[i] translates to kTgtWords[i].
constexpr std::array<std::string_view, 24> kSrcWords = {
    "the",    "a",     "of",    "and",   "in",     "today",  "people", "city",
    "book",   "many",  "new",   "old",   "known",  "also",   "very",   "his",
    "her",    "their", "this",  "that",  "with",   "from",   "after",  "before"};
constexpr std::array<std::string_view, 24> kTgtWords = {
    "die",   "ein",   "von",  "und",      "im",   "heute", "Leute", "Stadt",
    "Buch",  "viele", "neue", "alte",     "bekannt", "auch", "sehr", "sein",
    "ihr",   "ihre",  "dies", "jenes",    "mit",  "aus",   "nach",  "vor"};
constexpr std::array<std::string_view, 10> kSrcVerbs = {
    "said", "wrote", "visited", "explained", "added",
    "noted", "argued", "claimed", "replied", "warned"};
constexpr std::array<std::string_view, 10> kTgtVerbs = {
    "sagte", "schrieb", "besuchte", "erklärte", "ergänzte",
    "bemerkte", "argumentierte", "behauptete", "antwortete", "warnte"};
// Explanation words; none of them occurs in kTgtWords.
constexpr std::array<std::string_view, 16> kSpanWords = {
    "der",   "Autor",     "bekannten", "Pilgerreise", "Maler",    "berühmte",
    "Dichter", "Fluss",   "ehemalige", "Komponist",   "Hauptstadt", "Insel",
    "große", "Schriftsteller", "Gründer", "Sänger"};
constexpr std::array<std::string_view, 10> kFirstNames = {
    "John", "Maria", "Peter", "Anna", "Thomas", "Laura", "Paul", "Emma", "David", "Sofia"};
constexpr std::array<std::string_view, 4> kPunct = {".", ",", "(", ")"};

constexpr std::array<std::string_view, 17> kOnsets = {
    "b", "d", "g", "k", "l", "m", "n", "r", "s", "t", "v", "z", "br", "dr", "kr", "tr", "st"};
constexpr std::array<std::string_view, 5> kVowels = {"a", "e", "i", "o", "u"};
constexpr std::array<std::string_view, 6> kCodas = {"", "n", "r", "th", "x", "l"};

struct CaseInfo {
  CaseClass cls;
  std::string_view name;
  StageId stage;
  std::string_view reason;
};

constexpr std::array<CaseInfo, kCaseClassCount> kCases = {{
    {CaseClass::kPlanted, "planted", StageId::kWiki, ""},
    {CaseClass::kCommonAnchor, "common_anchor", StageId::kRarity, "not_rare"},
    {CaseClass::kNoNextSource, "no_next_source", StageId::kSpan, "no_next_source"},
    {CaseClass::kNextUnaligned, "next_unaligned", StageId::kSpan, "next_unaligned"},
    {CaseClass::kNoFollowingLink, "no_following_link", StageId::kSpan, "no_following_link"},
    {CaseClass::kSpanTooShort, "span_too_short", StageId::kSpan, "span_too_short"},
    {CaseClass::kSpanAligned, "span_aligned", StageId::kSpan, "span_aligned"},
    {CaseClass::kNoPunct, "no_punct", StageId::kSpan, "no_punct"},
    {CaseClass::kNoOtherContent, "no_other_content", StageId::kSpan, "no_other_content"},
    {CaseClass::kNotEntity, "not_entity", StageId::kNer, "no_entity"},
    {CaseClass::kNoSrcTitle, "no_src_title", StageId::kWiki, "NO_SRC_TITLE"},
    {CaseClass::kTgtCovers, "tgt_covers", StageId::kWiki, "TGT_COVERS"},
}};

const CaseInfo& Info(CaseClass c) { return kCases[static_cast<std::size_t>(c)]; }

class Generator {
 public:
  Generator(const SyntheticOptions& opt, SyntheticCorpus& out)
      : opt_(opt), out_(out), rng_(opt.seed) {
    common_floor_ = std::max<std::uint64_t>(20000, 2 * opt.threshold);
    for (auto w : kSpanWords) span_stems_.insert(Stem(w, out_.tgt_lang));
    for (auto w : kTgtWords) span_stems_.insert(Stem(w, out_.tgt_lang));
    for (auto w : kTgtVerbs) span_stems_.insert(Stem(w, out_.tgt_lang));
    for (auto w : kFirstNames) span_stems_.insert(Stem(w, out_.tgt_lang));
  }

  void CommonCounts() {
    auto add = [&](VocabCounts& counts, std::string_view w) {
      if (counts.Count(w) == 0) counts.Add(w, Uniform(common_floor_, 100 * common_floor_));
    };
    for (auto w : kSrcWords) add(out_.src_counts, w);
    for (auto w : kSrcVerbs) add(out_.src_counts, w);
    for (auto w : kTgtWords) add(out_.tgt_counts, w);
    for (auto w : kTgtVerbs) add(out_.tgt_counts, w);
    for (auto w : kSpanWords) add(out_.tgt_counts, w);
    for (auto w : kFirstNames) {
      add(out_.src_counts, w);
      add(out_.tgt_counts, w);
    }
    for (auto w : kPunct) {
      add(out_.src_counts, w);
      add(out_.tgt_counts, w);
    }
  }

  SentencePair Filler(PairId id) {
    SentencePair p;
    p.id = id;
    const std::size_t len = Uniform(4, 12);
    for (std::size_t i = 0; i < len; ++i) {
      const bool verb = Uniform(0, 4) == 0;
      const std::size_t w = verb ? Uniform(0, kSrcVerbs.size() - 1)
                                 : Uniform(0, kSrcWords.size() - 1);
      p.src_tokens.emplace_back(verb ? kSrcVerbs[w] : kSrcWords[w]);
      p.alignment.push_back({static_cast<std::uint32_t>(i),
                             static_cast<std::uint32_t>(p.tgt_tokens.size())});
      p.tgt_tokens.emplace_back(verb ? kTgtVerbs[w] : kTgtWords[w]);
      if (Uniform(0, 9) == 0) p.tgt_tokens.emplace_back(",");
    }
    p.alignment.push_back({static_cast<std::uint32_t>(p.src_tokens.size()),
                           static_cast<std::uint32_t>(p.tgt_tokens.size())});
    p.src_tokens.emplace_back(".");
    p.tgt_tokens.emplace_back(".");
    return p;
  }

  SentencePair Case(PairId id, CaseClass cls) {
    SentencePair p;
    p.id = id;
    auto link = [&](std::size_t s, std::size_t t) {
      p.alignment.push_back({static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(t)});
    };
    auto parallel_word = [&] {
      const std::size_t w = Uniform(0, kSrcWords.size() - 1);
      link(p.src_tokens.size(), p.tgt_tokens.size());
      p.src_tokens.emplace_back(kSrcWords[w]);
      p.tgt_tokens.emplace_back(kTgtWords[w]);
    };

    const std::size_t prefix = Uniform(1, 3);
    for (std::size_t i = 0; i < prefix; ++i) parallel_word();

    const std::string first(kFirstNames[Uniform(0, kFirstNames.size() - 1)]);
    const std::string name = NewName();
    const std::string title = first + " " + name;
    link(p.src_tokens.size(), p.tgt_tokens.size());
    p.src_tokens.push_back(first);
    p.tgt_tokens.push_back(first);
    const auto k = static_cast<std::uint32_t>(p.src_tokens.size());
    const auto m = static_cast<std::uint32_t>(p.tgt_tokens.size());
    link(k, m);
    p.src_tokens.push_back(name);
    p.tgt_tokens.push_back(name);

    // Span after m.
    std::uint32_t n = static_cast<std::uint32_t>(Uniform(opt_.min_span, opt_.min_span + 5));
    std::vector<std::string> span;
    switch (cls) {
      case CaseClass::kSpanTooShort:
        n = opt_.min_span - 1;
        span.push_back(",");
        for (std::uint32_t i = 1; i < n; ++i) span.push_back(SpanWord());
        break;
      case CaseClass::kNoPunct:
        for (std::uint32_t i = 0; i < n; ++i) span.push_back(SpanWord());
        break;
      case CaseClass::kNoOtherContent:
        if (Uniform(0, 1) == 0) {
          span.push_back("(");
          for (std::uint32_t i = 2; i < n; ++i) span.push_back(name);
          span.push_back(")");
        } else {
          span.assign(n, ",");
        }
        break;
      default:
        span.push_back(",");
        for (std::uint32_t i = 2; i < n; ++i) span.push_back(SpanWord());
        span.push_back(",");
        break;
    }
    p.tgt_tokens.insert(p.tgt_tokens.end(), span.begin(), span.end());
    if (cls == CaseClass::kSpanAligned) link(0, m + 2);  // a content word

    const std::size_t verb = Uniform(0, kSrcVerbs.size() - 1);
    const std::uint32_t j = m + n + 1;
    p.tgt_tokens.emplace_back(kTgtVerbs[verb]);
    if (cls != CaseClass::kNoNextSource) {
      p.src_tokens.emplace_back(kSrcVerbs[verb]);
      if (cls == CaseClass::kNoFollowingLink) {
        link(k + 1, 0);
      } else if (cls != CaseClass::kNextUnaligned) {
        link(k + 1, j);
      }
      const std::size_t suffix = Uniform(0, 3);
      for (std::size_t i = 0; i < suffix; ++i) parallel_word();
      link(p.src_tokens.size(), p.tgt_tokens.size());
      p.src_tokens.emplace_back(".");
      p.tgt_tokens.emplace_back(".");
    } else {
      p.tgt_tokens.emplace_back(".");
    }
    NormalizeAlignment(p.alignment);

    // Counts for the anchor token.
    const std::uint64_t rare_hi = opt_.threshold - 1;
    auto rare = [&](VocabCounts& counts) {
      const std::uint64_t c = Uniform(0, rare_hi);
      if (c > 0) counts.Add(name, c);
    };
    auto common = [&](VocabCounts& counts) {
      counts.Add(name, Uniform(opt_.threshold, 4 * opt_.threshold));
    };
    if (cls == CaseClass::kCommonAnchor) {
      switch (Uniform(0, 2)) {
        case 0: common(out_.src_counts); rare(out_.tgt_counts); break;
        case 1: rare(out_.src_counts); common(out_.tgt_counts); break;
        default: common(out_.src_counts); common(out_.tgt_counts); break;
      }
    } else {
      rare(out_.src_counts);
      rare(out_.tgt_counts);
    }

    // Entity, titles and articles.
    if (cls != CaseClass::kNotEntity) {
      NerAnnotation ann;
      ann.pair_id = id;
      ann.side = Side::kSrc;
      ann.entities.push_back({k - 1, k + 1, "PER", title});
      out_.ner.Add(std::move(ann));
      out_.gazetteer.AddArticle(title, 0);
    }
    const std::uint64_t src_size = Uniform(5000, 200000);
    if (cls != CaseClass::kNotEntity && cls != CaseClass::kNoSrcTitle) {
      out_.src_wiki.AddArticle(title, src_size);
      out_.gazetteer.AddArticle(title, src_size);
    }
    const bool via_ptitles = Uniform(0, 1) == 0;
    if (cls == CaseClass::kTgtCovers) {
      const std::uint64_t tgt_size = Uniform(0, 3) == 0 ? src_size : src_size + Uniform(1, 50000);
      if (via_ptitles) {
        AddParallelTitle(title, name);
        out_.tgt_wiki.AddArticle(name, tgt_size);
      } else {
        out_.tgt_wiki.AddArticle(title, tgt_size);
      }
    } else if (cls == CaseClass::kPlanted && via_ptitles) {
      // Mapped counterpart that has no article.
      AddParallelTitle(title, name + " " + NewName());
    }

    out_.gold.push_back({id, k, m, cls == CaseClass::kNoNextSource ||
                                       cls == CaseClass::kNextUnaligned ||
                                       cls == CaseClass::kNoFollowingLink
                                   ? 0u
                                   : n,
                         cls});
    return p;
  }

  std::uint64_t Uniform(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
  }
  std::mt19937_64& rng() { return rng_; }

 private:
  std::string SpanWord() { return std::string(kSpanWords[Uniform(0, kSpanWords.size() - 1)]); }

  std::string NewName() {
    for (;;) {
      std::string name;
      const std::size_t syllables = Uniform(2, 3);
      for (std::size_t i = 0; i < syllables; ++i) {
        name += kOnsets[Uniform(0, kOnsets.size() - 1)];
        name += kVowels[Uniform(0, kVowels.size() - 1)];
        name += kCodas[Uniform(0, kCodas.size() - 1)];
      }
      name[0] = static_cast<char>(name[0] - 'a' + 'A');
      const std::string src_stem = Stem(name, out_.src_lang);
      const std::string tgt_stem = Stem(name, out_.tgt_lang);
      if (span_stems_.contains(tgt_stem) || used_.contains(src_stem) ||
          used_.contains(tgt_stem) || used_.contains(name) ||
          out_.src_counts.Count(name) > 0 || out_.tgt_counts.Count(name) > 0) {
        continue;
      }
      used_.insert(src_stem);
      used_.insert(tgt_stem);
      used_.insert(name);
      return name;
    }
  }

  void AddParallelTitle(const std::string& src, const std::string& tgt) {
    out_.ptitles.Add(src, tgt);
    out_.raw_ptitles.emplace_back(src, tgt);
  }

  const SyntheticOptions& opt_;
  SyntheticCorpus& out_;
  std::mt19937_64 rng_;
  std::uint64_t common_floor_ = 0;
  std::set<std::string> span_stems_;
  std::set<std::string> used_;
};

}  // namespace

std::string_view CaseClassName(CaseClass c) { return Info(c).name; }

std::optional<CaseClass> ParseCaseClass(std::string_view name) {
  for (const CaseInfo& info : kCases) {
    if (info.name == name) return info.cls;
  }
  return std::nullopt;
}

StageId ExpectedStage(CaseClass c) { return Info(c).stage; }
std::string_view ExpectedReason(CaseClass c) { return Info(c).reason; }

Resources SyntheticCorpus::ToResources(bool use_gazetteer) const {
  Resources r;
  r.src_counts = src_counts;
  r.tgt_counts = tgt_counts;
  r.use_gazetteer = use_gazetteer;
  if (use_gazetteer) {
    r.gazetteer = gazetteer;
  } else {
    r.ner = ner;
  }
  r.src_wiki = src_wiki;
  r.tgt_wiki = tgt_wiki;
  r.ptitles = ptitles;
  return r;
}

SyntheticCorpus GenerateSynthetic(const SyntheticOptions& options) {
  if (options.min_span < 3) throw Error("synthetic corpus needs min_span >= 3");
  if (options.threshold < 2) throw Error("synthetic corpus needs threshold >= 2");
  const std::size_t cases =
      options.planted + options.per_distractor_class * (kCaseClassCount - 1);
  if (cases > options.pairs) {
    throw Error("synthetic corpus: " + std::to_string(cases) + " cases do not fit in " +
                std::to_string(options.pairs) + " pairs");
  }

  SyntheticCorpus out;
  Generator gen(options, out);
  gen.CommonCounts();

  // Slot kinds: a CaseClass index, kCaseClassCount for filler, +1 for empty.
  std::vector<std::size_t> slots;
  slots.insert(slots.end(), options.planted, 0);
  for (std::size_t c = 1; c < kCaseClassCount; ++c) {
    slots.insert(slots.end(), options.per_distractor_class, c);
  }
  slots.insert(slots.end(), options.pairs - cases, kCaseClassCount);
  slots.insert(slots.end(), options.empty_pairs, kCaseClassCount + 1);
  std::shuffle(slots.begin(), slots.end(), gen.rng());

  out.pairs.reserve(slots.size());
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const auto id = static_cast<PairId>(i);
    if (slots[i] == kCaseClassCount + 1) {
      SentencePair empty;
      empty.id = id;
      out.pairs.push_back(std::move(empty));
    } else if (slots[i] == kCaseClassCount) {
      out.pairs.push_back(gen.Filler(id));
    } else {
      out.pairs.push_back(gen.Case(id, static_cast<CaseClass>(slots[i])));
    }
  }
  return out;
}

std::string FormatGoldRecord(const GoldCase& g) {
  ordered_json doc;
  doc["pair_id"] = g.pair_id;
  doc["k"] = g.k;
  doc["m"] = g.m;
  doc["span_len"] = g.span_len;
  doc["class"] = CaseClassName(g.cls);
  doc["expected_stage"] = StageIdName(ExpectedStage(g.cls));
  doc["expected_reason"] = ExpectedReason(g.cls);
  return doc.dump();
}

std::vector<GoldCase> ReadGold(const std::string& path) {
  std::ifstream in = OpenInput(path);
  std::vector<GoldCase> out;
  std::string line;
  std::int64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    try {
      const json doc = json::parse(line);
      GoldCase g;
      g.pair_id = doc.at("pair_id").get<PairId>();
      g.k = doc.at("k").get<std::uint32_t>();
      g.m = doc.at("m").get<std::uint32_t>();
      g.span_len = doc.at("span_len").get<std::uint32_t>();
      auto cls = ParseCaseClass(doc.at("class").get<std::string>());
      if (!cls) throw Error("unknown class");
      g.cls = *cls;
      out.push_back(g);
    } catch (const std::exception& e) {
      throw Error(path + ":" + std::to_string(line_number) + ": bad gold record: " + e.what());
    }
  }
  return out;
}

void WriteSynthetic(const SyntheticCorpus& corpus, const SyntheticOptions& options,
                    const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error("cannot create " + dir + ": " + ec.message());
  const fs::path d(dir);
  const std::string src_ext = "." + corpus.src_lang;
  const std::string tgt_ext = "." + corpus.tgt_lang;

  WriteParallelCorpus(corpus.pairs, (d / ("corpus" + src_ext)).string(),
                      (d / ("corpus" + tgt_ext)).string());
  WriteAlignments(corpus.pairs, (d / "align.txt").string());
  WriteCounts(corpus.src_counts, (d / ("counts" + src_ext + ".tsv")).string());
  WriteCounts(corpus.tgt_counts, (d / ("counts" + tgt_ext + ".tsv")).string());
  WriteWikiIndex(corpus.src_wiki, (d / ("wiki" + src_ext + ".tsv")).string());
  WriteWikiIndex(corpus.tgt_wiki, (d / ("wiki" + tgt_ext + ".tsv")).string());
  WriteWikiIndex(corpus.gazetteer, (d / ("gazetteer" + src_ext + ".tsv")).string());
  WriteNer(corpus.ner, (d / "ner.jsonl").string());

  {
    const std::string path = (d / "ptitles.tsv").string();
    std::ofstream out = OpenOutput(path);
    for (const auto& [s, t] : corpus.raw_ptitles) out << s << '\t' << t << '\n';
    CloseOutput(out, path);
  }
  {
    const std::string path = (d / "gold.jsonl").string();
    std::ofstream out = OpenOutput(path);
    for (const GoldCase& g : corpus.gold) out << FormatGoldRecord(g) << '\n';
    CloseOutput(out, path);
  }

  PipelineConfig cfg;
  cfg.src_lang = corpus.src_lang;
  cfg.tgt_lang = corpus.tgt_lang;
  cfg.src_corpus = "corpus" + src_ext;
  cfg.tgt_corpus = "corpus" + tgt_ext;
  cfg.alignments = "align.txt";
  cfg.src_counts = "counts" + src_ext + ".tsv";
  cfg.tgt_counts = "counts" + tgt_ext + ".tsv";
  cfg.src_threshold = options.threshold;
  cfg.tgt_threshold = options.threshold;
  cfg.min_span = options.min_span;
  cfg.ner_source = "gazetteer";
  cfg.ner_file = "ner.jsonl";
  cfg.gazetteer_titles = "gazetteer" + src_ext + ".tsv";
  cfg.src_wiki = "wiki" + src_ext + ".tsv";
  cfg.tgt_wiki = "wiki" + tgt_ext + ".tsv";
  cfg.parallel_titles = "ptitles.tsv";
  cfg.output_dir = "out";
  const std::string path = (d / "config.txt").string();
  std::ofstream out = OpenOutput(path);
  out << "# synthetic corpus, seed " << options.seed << "\n" << FormatConfig(cfg);
  CloseOutput(out, path);
}

}  // namespace explmine
