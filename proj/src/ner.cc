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

#include "explmine/ner.h"

#include <algorithm>

#include "explmine/io.h"
#include "explmine/stemmer.h"
#include "json.hpp"

namespace explmine {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void Malformed(std::int64_t line_number, const std::string& what) {
  throw Error("malformed NER record at line " + std::to_string(line_number) + ": " + what);
}

std::int64_t IntField(const json& obj, const char* name, std::int64_t line_number) {
  auto it = obj.find(name);
  if (it == obj.end() || !it->is_number_integer()) {
    Malformed(line_number, std::string("missing integer field '") + name + "'");
  }
  return it->get<std::int64_t>();
}

const std::string& StringField(const json& obj, const char* name,
                               std::int64_t line_number) {
  auto it = obj.find(name);
  if (it == obj.end() || !it->is_string()) {
    Malformed(line_number, std::string("missing string field '") + name + "'");
  }
  return it->get_ref<const std::string&>();
}

std::string_view SideName(Side side) { return side == Side::kSrc ? "src" : "tgt"; }

}  // namespace

void NerStore::Add(NerAnnotation annotation) {
  const auto key = std::make_pair(annotation.pair_id, annotation.side);
  auto it = records_.find(key);
  if (it == records_.end()) {
    records_.emplace(key, std::move(annotation));
  } else {
    auto& entities = it->second.entities;
    entities.insert(entities.end(), annotation.entities.begin(), annotation.entities.end());
  }
}

const NerAnnotation* NerStore::Find(PairId pair_id, Side side) const {
  auto it = records_.find({pair_id, side});
  return it == records_.end() ? nullptr : &it->second;
}

NerAnnotation ParseNerRecord(std::string_view line, std::int64_t line_number,
                             Diagnostics* diag) {
  json doc;
  try {
    doc = json::parse(line);
  } catch (const json::exception& e) {
    Malformed(line_number, e.what());
  }
  if (!doc.is_object()) Malformed(line_number, "not an object");

  NerAnnotation ann;
  ann.pair_id = IntField(doc, "pair_id", line_number);
  if (ann.pair_id < 0) Malformed(line_number, "negative pair_id");
  const std::string& side = StringField(doc, "side", line_number);
  if (side == "src") {
    ann.side = Side::kSrc;
  } else if (side == "tgt") {
    ann.side = Side::kTgt;
  } else {
    Malformed(line_number, "side must be \"src\" or \"tgt\"");
  }
  auto entities = doc.find("entities");
  if (entities == doc.end() || !entities->is_array()) {
    Malformed(line_number, "missing array field 'entities'");
  }
  for (const json& e : *entities) {
    if (!e.is_object()) Malformed(line_number, "entity is not an object");
    const std::int64_t start = IntField(e, "start", line_number);
    const std::int64_t end = IntField(e, "end", line_number);
    Entity entity;
    entity.label = StringField(e, "label", line_number);
    entity.text = StringField(e, "text", line_number);
    if (start < 0 || start >= end || end > UINT32_MAX) {
      if (diag) {
        diag->warn("NER line " + std::to_string(line_number) + ": dropped entity [" +
                   std::to_string(start) + ", " + std::to_string(end) +
                   ") with invalid range");
      }
      continue;
    }
    entity.start = static_cast<std::uint32_t>(start);
    entity.end = static_cast<std::uint32_t>(end);
    ann.entities.push_back(std::move(entity));
  }
  return ann;
}

std::string FormatNerRecord(const NerAnnotation& annotation) {
  ordered_json doc;
  doc["pair_id"] = annotation.pair_id;
  doc["side"] = SideName(annotation.side);
  ordered_json entities = ordered_json::array();
  for (const Entity& e : annotation.entities) {
    ordered_json item;
    item["start"] = e.start;
    item["end"] = e.end;
    item["label"] = e.label;
    item["text"] = e.text;
    entities.push_back(std::move(item));
  }
  doc["entities"] = std::move(entities);
  return doc.dump();
}

NerStore ReadNer(std::istream& in, Diagnostics* diag) {
  NerStore store;
  std::string line;
  std::int64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line == "\r") continue;
    NerAnnotation ann = ParseNerRecord(line, line_number, diag);
    if (diag && store.Find(ann.pair_id, ann.side)) {
      diag->warn("NER line " + std::to_string(line_number) + ": second record for pair " +
                 std::to_string(ann.pair_id) + " merged");
    }
    store.Add(std::move(ann));
  }
  return store;
}

NerStore LoadNer(const std::string& path, Diagnostics* diag) {
  std::ifstream in = OpenInput(path);
  return ReadNer(in, diag);
}

void WriteNer(const NerStore& store, std::ostream& out) {
  for (const auto& [key, ann] : store) out << FormatNerRecord(ann) << '\n';
}

void WriteNer(const NerStore& store, const std::string& path) {
  std::ofstream out = OpenOutput(path);
  WriteNer(store, out);
  CloseOutput(out, path);
}

void ValidateEntities(NerAnnotation& annotation, const std::vector<std::string>& tokens,
                      Diagnostics* diag) {
  auto& entities = annotation.entities;
  std::vector<Entity> kept;
  kept.reserve(entities.size());
  for (Entity& e : entities) {
    if (e.end > tokens.size()) {
      if (diag) {
        diag->warn("pair " + std::to_string(annotation.pair_id) + ": dropped entity [" +
                   std::to_string(e.start) + ", " + std::to_string(e.end) +
                   ") beyond sentence length " + std::to_string(tokens.size()));
      }
      continue;
    }
    if (diag) {
      std::vector<std::string> span(tokens.begin() + e.start, tokens.begin() + e.end);
      if (JoinTokens(span) != e.text) {
        diag->warn("pair " + std::to_string(annotation.pair_id) + ": entity text '" +
                   e.text + "' does not match tokens '" + JoinTokens(span) + "'");
      }
    }
    kept.push_back(std::move(e));
  }
  entities = std::move(kept);
}

NerAnnotation GazetteerNer(const SentencePair& pair, const WikiIndex& titles,
                           std::size_t max_words) {
  NerAnnotation ann;
  ann.pair_id = pair.id;
  ann.side = Side::kSrc;
  const auto& tokens = pair.src_tokens;
  const std::size_t longest = std::min(max_words, titles.max_title_words());
  if (longest == 0) return ann;

  std::vector<std::string> stems;
  stems.reserve(tokens.size());
  for (const std::string& t : tokens) stems.push_back(Stem(t, titles.lang()));

  std::size_t i = 0;
  while (i < tokens.size()) {
    std::size_t matched = 0;
    const std::size_t limit = std::min(longest, tokens.size() - i);
    for (std::size_t n = limit; n >= 1 && matched == 0; --n) {
      std::string phrase = stems[i];
      for (std::size_t j = 1; j < n; ++j) {
        phrase.push_back(' ');
        phrase += stems[i + j];
      }
      if (titles.Contains(phrase)) matched = n;
    }
    if (matched == 0) {
      ++i;
      continue;
    }
    Entity e;
    e.start = static_cast<std::uint32_t>(i);
    e.end = static_cast<std::uint32_t>(i + matched);
    e.label = "WIKI";
    e.text = JoinTokens({tokens.begin() + i, tokens.begin() + i + matched});
    ann.entities.push_back(std::move(e));
    i += matched;
  }
  return ann;
}

std::optional<Candidate> NerFilter(Candidate cand, const NerAnnotation* src_annotation) {
  if (cand.stage != Stage::kSpan) {
    throw Error("NER gate needs a SPAN-stage candidate, got " + cand.id());
  }
  if (src_annotation == nullptr) return std::nullopt;
  const Entity* best = nullptr;
  for (const Entity& e : src_annotation->entities) {
    if (!e.range().Contains(cand.k)) continue;
    if (best == nullptr || e.end - e.start > best->end - best->start ||
        (e.end - e.start == best->end - best->start && e.start < best->start)) {
      best = &e;
    }
  }
  if (best == nullptr) return std::nullopt;
  cand.ne_span = best->range();
  cand.stage = Stage::kNer;
  return cand;
}

}  // namespace explmine
