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

#include "explmine/records.h"

#include "explmine/error.h"
#include "explmine/io.h"
#include "json.hpp"

namespace explmine {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void Malformed(std::int64_t line_number, const std::string& what) {
  throw Error("malformed candidate record at line " + std::to_string(line_number) + ": " +
              what);
}

std::uint32_t Index(const json& doc, const char* name, std::int64_t line_number) {
  auto it = doc.find(name);
  if (it == doc.end() || !it->is_number_unsigned() || it->get<std::uint64_t>() > UINT32_MAX) {
    Malformed(line_number, std::string("field '") + name + "' must be a token index");
  }
  return it->get<std::uint32_t>();
}

bool Flag(const json& features, const char* name, std::int64_t line_number) {
  auto it = features.find(name);
  if (it == features.end() || !it->is_boolean()) {
    Malformed(line_number, std::string("feature '") + name + "' must be a boolean");
  }
  return it->get<bool>();
}

std::vector<std::string> Tokens(const json& doc, const char* name,
                                std::int64_t line_number) {
  auto it = doc.find(name);
  if (it == doc.end() || !it->is_array()) {
    Malformed(line_number, std::string("field '") + name + "' must be an array");
  }
  std::vector<std::string> tokens;
  for (const json& t : *it) {
    if (!t.is_string()) Malformed(line_number, std::string(name) + " holds a non-string");
    tokens.push_back(t.get<std::string>());
  }
  return tokens;
}

}  // namespace

std::string FormatCandidateRecord(const Candidate& cand) {
  ordered_json doc;
  doc["candidate_id"] = cand.id();
  doc["pair_id"] = cand.pair_id;
  doc["stage"] = StageName(cand.stage);
  doc["k"] = cand.k;
  doc["m"] = cand.m;
  doc["span_start"] = cand.span_start();
  doc["span_len"] = cand.span_len;
  doc["features"] = {{"has_punct", cand.features.has_punct},
                     {"has_other_content", cand.features.has_other_content},
                     {"span_unaligned", cand.features.span_unaligned}};
  if (cand.ne_span) {
    doc["ne_span"] = {cand.ne_span->start, cand.ne_span->end};
  } else {
    doc["ne_span"] = nullptr;
  }
  if (cand.wiki_decision) {
    doc["wiki_decision"] = WikiDecisionName(*cand.wiki_decision);
  } else {
    doc["wiki_decision"] = nullptr;
  }
  doc["src_tokens"] = cand.src_tokens;
  doc["tgt_tokens"] = cand.tgt_tokens;
  return doc.dump();
}

Candidate ParseCandidateRecord(std::string_view line, std::int64_t line_number) {
  json doc;
  try {
    doc = json::parse(line);
  } catch (const json::exception& e) {
    Malformed(line_number, e.what());
  }
  if (!doc.is_object()) Malformed(line_number, "not an object");

  Candidate cand;
  auto pair_id = doc.find("pair_id");
  if (pair_id == doc.end() || !pair_id->is_number_unsigned()) {
    Malformed(line_number, "field 'pair_id' must be a non-negative integer");
  }
  cand.pair_id = pair_id->get<PairId>();
  cand.k = Index(doc, "k", line_number);
  cand.m = Index(doc, "m", line_number);
  cand.span_len = Index(doc, "span_len", line_number);
  if (Index(doc, "span_start", line_number) != cand.span_start()) {
    Malformed(line_number, "span_start must equal m + 1");
  }

  auto stage = doc.find("stage");
  if (stage == doc.end() || !stage->is_string()) Malformed(line_number, "missing stage");
  auto parsed_stage = ParseStage(stage->get<std::string>());
  if (!parsed_stage) Malformed(line_number, "unknown stage " + stage->dump());
  cand.stage = *parsed_stage;

  auto features = doc.find("features");
  if (features == doc.end() || !features->is_object()) {
    Malformed(line_number, "missing features object");
  }
  cand.features.has_punct = Flag(*features, "has_punct", line_number);
  cand.features.has_other_content = Flag(*features, "has_other_content", line_number);
  cand.features.span_unaligned = Flag(*features, "span_unaligned", line_number);

  auto ne = doc.find("ne_span");
  if (ne != doc.end() && !ne->is_null()) {
    if (!ne->is_array() || ne->size() != 2 || !(*ne)[0].is_number_unsigned() ||
        !(*ne)[1].is_number_unsigned()) {
      Malformed(line_number, "ne_span must be [start, end] or null");
    }
    cand.ne_span = TokenRange{(*ne)[0].get<std::uint32_t>(), (*ne)[1].get<std::uint32_t>()};
  }
  auto decision = doc.find("wiki_decision");
  if (decision != doc.end() && !decision->is_null()) {
    if (!decision->is_string()) Malformed(line_number, "wiki_decision must be a string");
    auto parsed = ParseWikiDecision(decision->get<std::string>());
    if (!parsed) Malformed(line_number, "unknown wiki_decision " + decision->dump());
    cand.wiki_decision = *parsed;
  }
  cand.src_tokens = Tokens(doc, "src_tokens", line_number);
  cand.tgt_tokens = Tokens(doc, "tgt_tokens", line_number);

  auto id = doc.find("candidate_id");
  if (id == doc.end() || !id->is_string() || id->get<std::string>() != cand.id()) {
    Malformed(line_number, "candidate_id must be \"" + cand.id() + "\"");
  }
  if (cand.next_src() >= cand.src_tokens.size() ||
      cand.next_tgt() >= cand.tgt_tokens.size()) {
    Malformed(line_number, "indexes outside the token lists");
  }
  if (cand.ne_span &&
      (cand.ne_span->start >= cand.ne_span->end || cand.ne_span->end > cand.src_tokens.size())) {
    Malformed(line_number, "ne_span outside the source tokens");
  }
  return cand;
}

void WriteCandidates(const std::vector<Candidate>& candidates, std::ostream& out) {
  for (const Candidate& c : candidates) out << FormatCandidateRecord(c) << '\n';
}

void WriteCandidates(const std::vector<Candidate>& candidates, const std::string& path) {
  std::ofstream out = OpenOutput(path);
  WriteCandidates(candidates, out);
  CloseOutput(out, path);
}

std::vector<Candidate> ReadCandidates(std::istream& in) {
  std::vector<Candidate> out;
  std::string line;
  std::int64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    out.push_back(ParseCandidateRecord(line, line_number));
  }
  return out;
}

std::vector<Candidate> ReadCandidates(const std::string& path) {
  std::ifstream in = OpenInput(path);
  return ReadCandidates(in);
}

}  // namespace explmine
