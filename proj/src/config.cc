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

#include "explmine/config.h"

#include <charconv>
#include <filesystem>

#include "explmine/error.h"
#include "explmine/io.h"

namespace explmine {

namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T ParseNumber(std::string_view key, std::string_view value) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw Error("config key '" + std::string(key) + "': '" + std::string(value) +
                "' is not a non-negative integer");
  }
  return out;
}

bool IsPathKey(std::string_view key) {
  return key == "src_corpus" || key == "tgt_corpus" || key == "alignments" ||
         key == "src_counts" || key == "tgt_counts" || key == "ner_file" ||
         key == "gazetteer_titles" || key == "src_wiki" || key == "tgt_wiki" ||
         key == "parallel_titles" || key == "output_dir";
}

}  // namespace

const std::vector<std::string>& ConfigKeys() {
  static const std::vector<std::string> kKeys = {
      "alignments", "gazetteer_titles", "min_span",      "ner_file",   "ner_source",
      "output_dir", "parallel_titles",  "src_corpus",    "src_counts", "src_lang",
      "src_threshold", "src_wiki",      "tgt_corpus",    "tgt_counts", "tgt_lang",
      "tgt_threshold", "tgt_wiki"};
  return kKeys;
}

std::map<std::string, std::string> PipelineConfig::Snapshot() const {
  return {{"alignments", alignments},
          {"gazetteer_titles", gazetteer_titles},
          {"min_span", std::to_string(min_span)},
          {"ner_file", ner_file},
          {"ner_source", ner_source},
          {"parallel_titles", parallel_titles},
          {"src_corpus", src_corpus},
          {"src_counts", src_counts},
          {"src_lang", src_lang},
          {"src_threshold", std::to_string(src_threshold)},
          {"src_wiki", src_wiki},
          {"tgt_corpus", tgt_corpus},
          {"tgt_counts", tgt_counts},
          {"tgt_lang", tgt_lang},
          {"tgt_threshold", std::to_string(tgt_threshold)},
          {"tgt_wiki", tgt_wiki}};
}

void SetConfigValue(PipelineConfig& cfg, std::string_view key, std::string_view value) {
  const std::string v(value);
  if (key == "src_lang") {
    cfg.src_lang = v;
  } else if (key == "tgt_lang") {
    cfg.tgt_lang = v;
  } else if (key == "src_corpus") {
    cfg.src_corpus = v;
  } else if (key == "tgt_corpus") {
    cfg.tgt_corpus = v;
  } else if (key == "alignments") {
    cfg.alignments = v;
  } else if (key == "src_counts") {
    cfg.src_counts = v;
  } else if (key == "tgt_counts") {
    cfg.tgt_counts = v;
  } else if (key == "src_threshold") {
    cfg.src_threshold = ParseNumber<std::uint64_t>(key, value);
  } else if (key == "tgt_threshold") {
    cfg.tgt_threshold = ParseNumber<std::uint64_t>(key, value);
  } else if (key == "min_span") {
    cfg.min_span = ParseNumber<std::uint32_t>(key, value);
  } else if (key == "ner_source") {
    if (v != "file" && v != "gazetteer") {
      throw Error("config key 'ner_source' must be 'file' or 'gazetteer', got '" + v + "'");
    }
    cfg.ner_source = v;
  } else if (key == "ner_file") {
    cfg.ner_file = v;
  } else if (key == "gazetteer_titles") {
    cfg.gazetteer_titles = v;
  } else if (key == "src_wiki") {
    cfg.src_wiki = v;
  } else if (key == "tgt_wiki") {
    cfg.tgt_wiki = v;
  } else if (key == "parallel_titles") {
    cfg.parallel_titles = v;
  } else if (key == "output_dir") {
    cfg.output_dir = v;
  } else {
    throw Error("unknown config key '" + std::string(key) + "'");
  }
}

PipelineConfig ParseConfig(std::istream& in, const std::string& source_name,
                           const std::string& base_dir) {
  PipelineConfig cfg;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::string_view body = line;
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    body = Trim(body);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) {
      throw Error(source_name + ":" + std::to_string(line_number) + ": expected key = value");
    }
    const std::string_view key = Trim(body.substr(0, eq));
    std::string value(Trim(body.substr(eq + 1)));
    if (!base_dir.empty() && IsPathKey(key) && !value.empty() &&
        std::filesystem::path(value).is_relative()) {
      value = (std::filesystem::path(base_dir) / value).lexically_normal().string();
    }
    try {
      SetConfigValue(cfg, key, value);
    } catch (const Error& e) {
      throw Error(source_name + ":" + std::to_string(line_number) + ": " + e.what());
    }
  }
  return cfg;
}

PipelineConfig LoadConfig(const std::string& path) {
  std::ifstream in = OpenInput(path);
  std::string base = std::filesystem::path(path).parent_path().string();
  if (base.empty()) base = ".";
  return ParseConfig(in, path, base);
}

void ValidateConfig(const PipelineConfig& cfg) {
  const std::pair<const char*, const std::string*> required[] = {
      {"src_corpus", &cfg.src_corpus}, {"tgt_corpus", &cfg.tgt_corpus},
      {"alignments", &cfg.alignments}, {"src_counts", &cfg.src_counts},
      {"tgt_counts", &cfg.tgt_counts}, {"src_wiki", &cfg.src_wiki},
      {"tgt_wiki", &cfg.tgt_wiki},     {"output_dir", &cfg.output_dir}};
  for (const auto& [key, value] : required) {
    if (value->empty()) throw Error(std::string("config key '") + key + "' is required");
  }
  if (cfg.ner_source == "file" && cfg.ner_file.empty()) {
    throw Error("config key 'ner_file' is required when ner_source = file");
  }
  if (cfg.min_span == 0) throw Error("config key 'min_span' must be at least 1");
}

std::string FormatConfig(const PipelineConfig& cfg) {
  std::string out;
  for (const auto& [key, value] : cfg.Snapshot()) out += key + " = " + value + "\n";
  out += "output_dir = " + cfg.output_dir + "\n";
  return out;
}

}  // namespace explmine
