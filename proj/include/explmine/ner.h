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

// Named-entity gate. Entities come from an external tagger as standoff
// records, one JSON object per line:
//
//   {"pair_id":0,"side":"src","entities":[{"start":0,"end":2,"label":"PER","text":"John Bunyan"}]}
//
// start/end are token offsets, end exclusive. A title-gazetteer tagger is
// provided for runs without external annotations.

#ifndef EXPLMINE_NER_H_
#define EXPLMINE_NER_H_

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "explmine/candidate.h"
#include "explmine/corpus.h"
#include "explmine/error.h"
#include "explmine/wiki.h"

namespace explmine {

enum class Side { kSrc, kTgt };

struct Entity {
  std::uint32_t start = 0;
  std::uint32_t end = 0;
  std::string label;
  std::string text;

  TokenRange range() const { return {start, end}; }
  bool operator==(const Entity&) const = default;
};

struct NerAnnotation {
  PairId pair_id = 0;
  Side side = Side::kSrc;
  std::vector<Entity> entities;

  bool operator==(const NerAnnotation&) const = default;
};

// Annotations keyed by (pair_id, side), iterated in key order.
class NerStore {
 public:
  // Appends entities to an existing record for the same key.
  void Add(NerAnnotation annotation);
  const NerAnnotation* Find(PairId pair_id, Side side) const;

  std::size_t size() const { return records_.size(); }
  auto begin() const { return records_.begin(); }
  auto end() const { return records_.end(); }

  bool operator==(const NerStore&) const = default;

 private:
  std::map<std::pair<PairId, Side>, NerAnnotation> records_;
};

// Parses one record. Throws Error with the line number when the record is not
// well-formed. Entities with start >= end are dropped with a warning.
NerAnnotation ParseNerRecord(std::string_view line, std::int64_t line_number,
                             Diagnostics* diag);
std::string FormatNerRecord(const NerAnnotation& annotation);

NerStore ReadNer(std::istream& in, Diagnostics* diag);
NerStore LoadNer(const std::string& path, Diagnostics* diag);
void WriteNer(const NerStore& store, std::ostream& out);
void WriteNer(const NerStore& store, const std::string& path);

// Drops entities reaching past the sentence (warning) and warns when an
// entity's text differs from its joined tokens.
void ValidateEntities(NerAnnotation& annotation, const std::vector<std::string>& tokens,
                      Diagnostics* diag);

// Marks source n-grams (n <= max_words) whose stemmed form is a title in
// `titles`, scanning left to right and preferring the longest match at each
// position. Entities are labelled "WIKI" and never overlap.
NerAnnotation GazetteerNer(const SentencePair& pair, const WikiIndex& titles,
                           std::size_t max_words = 5);

// Keeps a SPAN-stage candidate when some source entity contains k; the longest
// such entity (leftmost on ties) becomes ne_span and the stage advances to NER.
std::optional<Candidate> NerFilter(Candidate cand, const NerAnnotation* src_annotation);

}  // namespace explmine

#endif  // EXPLMINE_NER_H_
