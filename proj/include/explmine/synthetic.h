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

// Synthetic bitext with known answers. Every case pair has the shape
//
//   src:  <prefix> First Name <verb> <suffix> .
//   tgt:  <prefix> First Name , w1 .. wn , <verb> <suffix> .
//
// where Name is a rare token aligned to itself and the span between Name and
// the verb's translation is unaligned. Planted cases pass every gate with a
// source-only wiki title. Each distractor class breaks exactly one condition.
// The remaining pairs hold only frequent words and produce no anchors.

#ifndef EXPLMINE_SYNTHETIC_H_
#define EXPLMINE_SYNTHETIC_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "explmine/corpus.h"
#include "explmine/ner.h"
#include "explmine/pipeline.h"
#include "explmine/vocab.h"
#include "explmine/wiki.h"

namespace explmine {

enum class CaseClass {
  kPlanted,
  kCommonAnchor,     // rarity: not_rare
  kNoNextSource,     // span: no_next_source
  kNextUnaligned,    // span: next_unaligned
  kNoFollowingLink,  // span: no_following_link
  kSpanTooShort,     // span: span_too_short
  kSpanAligned,      // span: span_aligned
  kNoPunct,          // span: no_punct
  kNoOtherContent,   // span: no_other_content
  kNotEntity,        // ner: no_entity
  kNoSrcTitle,       // wiki: NO_SRC_TITLE
  kTgtCovers,        // wiki: TGT_COVERS
};
inline constexpr std::size_t kCaseClassCount = 12;

std::string_view CaseClassName(CaseClass c);  // "planted", "common_anchor", ...
std::optional<CaseClass> ParseCaseClass(std::string_view name);
// Stage and rejection reason a distractor must produce; stage WIKI and an
// empty reason for planted cases.
StageId ExpectedStage(CaseClass c);
std::string_view ExpectedReason(CaseClass c);

struct SyntheticOptions {
  std::uint64_t seed = 1;
  std::size_t pairs = 10000;
  std::size_t planted = 50;
  std::size_t per_distractor_class = 20;
  std::size_t empty_pairs = 0;  // blank lines mixed into the corpus
  std::uint64_t threshold = 5000;
  std::uint32_t min_span = 3;
};

struct GoldCase {
  PairId pair_id = 0;
  std::uint32_t k = 0;
  std::uint32_t m = 0;
  std::uint32_t span_len = 0;  // intended n; 0 where undefined
  CaseClass cls = CaseClass::kPlanted;

  bool operator==(const GoldCase&) const = default;
};

struct SyntheticCorpus {
  std::string src_lang = "en";
  std::string tgt_lang = "de";
  std::vector<SentencePair> pairs;  // ascending ids, empty pairs included
  VocabCounts src_counts{"en"};
  VocabCounts tgt_counts{"de"};
  WikiIndex src_wiki{"en"};
  WikiIndex tgt_wiki{"de"};
  WikiIndex gazetteer{"en"};  // src_wiki titles plus titles without articles
  ParallelTitles ptitles{"en", "de"};
  std::vector<std::pair<std::string, std::string>> raw_ptitles;
  NerStore ner;  // source entities of every case except kNotEntity
  std::vector<GoldCase> gold;  // ordered by pair id

  Resources ToResources(bool use_gazetteer) const;
};

// Throws Error when the options cannot fit (too few pairs, min_span < 1).
SyntheticCorpus GenerateSynthetic(const SyntheticOptions& options);

std::string FormatGoldRecord(const GoldCase& g);
std::vector<GoldCase> ReadGold(const std::string& path);

// Writes corpus, alignments, counts, indexes, NER, gold and config.txt
// (gazetteer NER, output_dir "out") into `dir`.
void WriteSynthetic(const SyntheticCorpus& corpus, const SyntheticOptions& options,
                    const std::string& dir);

}  // namespace explmine

#endif  // EXPLMINE_SYNTHETIC_H_
