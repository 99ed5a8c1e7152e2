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

// Candidate export format: one JSON object per line,
//
//   {"candidate_id":"0:1:1:7","pair_id":0,"stage":"WIKI","k":1,"m":1,
//    "span_start":2,"span_len":7,
//    "features":{"has_punct":true,"has_other_content":true,"span_unaligned":true},
//    "ne_span":[0,2],"wiki_decision":"SRC_ONLY",
//    "src_tokens":[...],"tgt_tokens":[...]}
//
// ne_span and wiki_decision are null until the corresponding gate ran.

#ifndef EXPLMINE_RECORDS_H_
#define EXPLMINE_RECORDS_H_

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "explmine/candidate.h"

namespace explmine {

std::string FormatCandidateRecord(const Candidate& cand);
// Throws Error naming `line_number` on malformed or inconsistent records.
Candidate ParseCandidateRecord(std::string_view line, std::int64_t line_number);

void WriteCandidates(const std::vector<Candidate>& candidates, std::ostream& out);
void WriteCandidates(const std::vector<Candidate>& candidates, const std::string& path);
std::vector<Candidate> ReadCandidates(std::istream& in);
std::vector<Candidate> ReadCandidates(const std::string& path);

}  // namespace explmine

#endif  // EXPLMINE_RECORDS_H_
