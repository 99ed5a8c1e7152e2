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

// Run configuration: flat "key = value" lines, '#' starts a comment.
//
//   src_lang = en
//   tgt_lang = de
//   src_corpus = corpus.en
//   ...
//
// Relative paths are resolved against the directory of the config file.

#ifndef EXPLMINE_CONFIG_H_
#define EXPLMINE_CONFIG_H_

#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace explmine {

struct PipelineConfig {
  std::string src_lang = "en";
  std::string tgt_lang = "de";
  std::string src_corpus;
  std::string tgt_corpus;
  std::string alignments;
  std::string src_counts;
  std::string tgt_counts;
  std::uint64_t src_threshold = 5000;
  std::uint64_t tgt_threshold = 5000;
  std::uint32_t min_span = 3;
  std::string ner_source = "file";  // "file" or "gazetteer"
  std::string ner_file;
  // Title index used by the gazetteer tagger; the source wiki index if empty.
  std::string gazetteer_titles;
  std::string src_wiki;
  std::string tgt_wiki;
  std::string parallel_titles;  // optional
  std::string output_dir = "out";

  // Every key except output_dir, sorted by key. Goes into the report.
  std::map<std::string, std::string> Snapshot() const;
};

// All recognised keys, sorted.
const std::vector<std::string>& ConfigKeys();

// Throws Error for unknown keys and unparsable values.
void SetConfigValue(PipelineConfig& cfg, std::string_view key, std::string_view value);

// `base_dir` is prepended to relative paths; pass "" to keep them as given.
PipelineConfig ParseConfig(std::istream& in, const std::string& source_name,
                           const std::string& base_dir);
PipelineConfig LoadConfig(const std::string& path);

// Throws Error naming the first missing required key.
void ValidateConfig(const PipelineConfig& cfg);

std::string FormatConfig(const PipelineConfig& cfg);

}  // namespace explmine

#endif  // EXPLMINE_CONFIG_H_
