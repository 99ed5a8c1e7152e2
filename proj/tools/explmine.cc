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

#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "explmine/config.h"
#include "explmine/error.h"
#include "explmine/evaluate.h"
#include "explmine/io.h"
#include "explmine/labels.h"
#include "explmine/metrics.h"
#include "explmine/pipeline.h"
#include "explmine/records.h"
#include "explmine/review.h"
#include "explmine/synthetic.h"
#include "explmine/vocab.h"
#include "explmine/wiki.h"
#include "json.hpp"

namespace fs = std::filesystem;
using namespace explmine;

namespace {

void PrintWarnings(const Diagnostics& diag) {
  for (const std::string& m : diag.messages()) std::cerr << "warning: " << m << '\n';
  if (diag.count() > diag.messages().size()) {
    std::cerr << "warning: " << diag.count() - diag.messages().size()
              << " more warnings not shown\n";
  }
}

void WriteOut(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out = OpenOutput(path);
  out << text;
  CloseOutput(out, path);
}

std::string RunFile(const std::string& run_dir, const char* name) {
  return (fs::path(run_dir) / name).string();
}

std::vector<Candidate> StageFile(const std::string& run_dir, Stage stage) {
  switch (stage) {
    case Stage::kSpan: return ReadCandidates(RunFile(run_dir, "candidates.span.jsonl"));
    case Stage::kNer: return ReadCandidates(RunFile(run_dir, "candidates.ner.jsonl"));
    default: return ReadCandidates(RunFile(run_dir, "candidates.wiki.jsonl"));
  }
}

// Scans the source side of the run's corpus for the labelled entities.
NeStatsReport NeStatsForRun(const std::string& run_dir, const LabelLog& labels,
                            const std::vector<Candidate>& wiki, Diagnostics* diag) {
  const auto report = nlohmann::json::parse(ReadFile(RunFile(run_dir, "report.json")));
  const std::string src_lang = report.at("config").at("src_lang").get<std::string>();
  const std::string corpus = report.at("config").at("src_corpus").get<std::string>();
  NeOccurrenceCounter counter(LabeledEntityPhrases(labels, wiki, src_lang), src_lang);
  std::ifstream in = OpenInput(corpus);
  std::string line;
  SentencePair pair;
  while (std::getline(in, line)) {
    pair.src_tokens = SplitTokens(line);
    if (!pair.src_tokens.empty()) counter.Add(pair);
  }
  return NeExplanationStats(labels, wiki, counter.counts(), src_lang, diag);
}

ReviewServer* g_server = nullptr;

void OnSignal(int) {
  if (g_server) g_server->Stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mine sentence pairs whose translation explains a rare named entity."};
  app.require_subcommand(1);

  // count
  auto* count = app.add_subcommand("count", "Build a word count table from text files");
  std::string count_lang;
  std::vector<std::string> count_inputs;
  std::string count_output;
  count->add_option("--lang", count_lang, "Language code")->required();
  count->add_option("inputs", count_inputs, "Tokenized text or extractor output")
      ->required()
      ->check(CLI::ExistingFile);
  count->add_option("-o,--output", count_output, "Count table path")->required();

  // index-wiki
  auto* index = app.add_subcommand("index-wiki", "Build a title index from extractor output");
  std::string index_lang;
  std::vector<std::string> index_inputs;
  std::string index_output;
  index->add_option("--lang", index_lang, "Language code")->required();
  index->add_option("inputs", index_inputs, "Extractor output files")
      ->required()
      ->check(CLI::ExistingFile);
  index->add_option("-o,--output", index_output, "Title index path")->required();

  // run
  auto* run = app.add_subcommand("run", "Run the four-stage cascade");
  std::string run_config;
  std::vector<std::string> run_sets;
  std::string run_output_dir;
  bool run_trace = false;
  run->add_option("-c,--config", run_config, "Config file")->required();
  run->add_option("--set", run_sets, "Override a config key (key=value)");
  run->add_option("--output-dir", run_output_dir, "Override output_dir");
  run->add_flag("--trace", run_trace, "Write per-anchor rejections");

  // report
  auto* report = app.add_subcommand("report", "Score a run against review labels");
  std::string report_run;
  std::string report_labels;
  std::optional<std::uint64_t> report_total;
  bool report_ne = false;
  bool report_json = false;
  std::string report_output;
  report->add_option("--run-dir", report_run, "Run output directory")->required();
  report->add_option("--labels", report_labels, "Label file (default <run-dir>/labels.jsonl)");
  report->add_option("--total-positives", report_total,
                     "Positive pairs of the initial run (default: SPAN-stage tp)");
  report->add_flag("--ne-stats", report_ne, "Per-entity explanation probabilities");
  report->add_flag("--json", report_json, "Machine-readable output");
  report->add_option("-o,--output", report_output, "Output path (default stdout)");

  // export
  auto* exp = app.add_subcommand("export", "Write the candidates of one stage");
  std::string export_run;
  std::string export_stage = "WIKI";
  std::string export_output;
  exp->add_option("--run-dir", export_run, "Run output directory")->required();
  exp->add_option("--stage", export_stage, "SPAN, NER or WIKI");
  exp->add_option("-o,--output", export_output, "Output path (default stdout)");

  // serve
  auto* serve = app.add_subcommand("serve", "Serve the review API under /api/v1");
  std::string serve_run;
  std::string serve_labels;
  std::string serve_host = "127.0.0.1";
  int serve_port = 8080;
  serve->add_option("--run-dir", serve_run, "Run output directory")->required();
  serve->add_option("--labels", serve_labels, "Label file (default <run-dir>/labels.jsonl)");
  serve->add_option("--host", serve_host, "Listen address");
  serve->add_option("--port", serve_port, "Listen port (0 picks one)");

  // gen-synthetic
  auto* gen = app.add_subcommand("gen-synthetic", "Write a synthetic corpus with gold cases");
  SyntheticOptions so;
  std::string gen_dir;
  gen->add_option("-o,--output-dir", gen_dir, "Directory to create")->required();
  gen->add_option("--seed", so.seed, "Random seed");
  gen->add_option("--pairs", so.pairs, "Non-empty sentence pairs");
  gen->add_option("--planted", so.planted, "Planted explanation cases");
  gen->add_option("--per-class", so.per_distractor_class, "Cases per distractor class");
  gen->add_option("--empty", so.empty_pairs, "Blank lines mixed into the corpus");
  gen->add_option("--threshold", so.threshold, "Rarity threshold the corpus is built for");
  gen->add_option("--min-span", so.min_span, "Minimum span length (at least 3)");

  CLI11_PARSE(app, argc, argv);

  Diagnostics diag;
  try {
    if (*count) {
      VocabCounts total(count_lang);
      for (const std::string& path : count_inputs) {
        std::ifstream in = OpenInput(path);
        total.Merge(CountWords(in, count_lang));
      }
      WriteCounts(total, count_output);
      std::cerr << total.size() << " types, " << total.total_tokens() << " tokens\n";
    } else if (*index) {
      WikiIndex merged(index_lang);
      for (const std::string& path : index_inputs) {
        std::ifstream in = OpenInput(path);
        ForEachArticle(in, [&](std::string_view title, std::string_view text) {
          merged.AddArticle(title, text.size());
        });
      }
      WriteWikiIndex(merged, index_output);
      std::cerr << merged.size() << " titles\n";
    } else if (*run) {
      PipelineConfig cfg = LoadConfig(run_config);
      for (const std::string& kv : run_sets) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw Error("--set expects key=value, got '" + kv + "'");
        SetConfigValue(cfg, kv.substr(0, eq), kv.substr(eq + 1));
      }
      if (!run_output_dir.empty()) cfg.output_dir = run_output_dir;
      const PipelineReport r = RunPipeline(cfg, {run_trace}, &diag);
      PrintWarnings(diag);
      std::cout << FormatReportText(r);
    } else if (*report) {
      const std::string labels_path =
          report_labels.empty() ? RunFile(report_run, "labels.jsonl") : report_labels;
      const LabelLog labels = LoadLabels(labels_path);
      const auto span = StageFile(report_run, Stage::kSpan);
      const auto ner = StageFile(report_run, Stage::kNer);
      const auto wiki = StageFile(report_run, Stage::kWiki);
      std::set<std::string> known;
      for (const Candidate& c : span) known.insert(c.id());
      labels.CheckKnown(known, &diag);
      Evaluation e = Evaluate(span, ner, wiki, labels, report_total);
      if (report_ne) e.ne_stats = NeStatsForRun(report_run, labels, wiki, &diag);
      PrintWarnings(diag);
      WriteOut(report_output, report_json ? FormatEvaluationJson(e) : FormatEvaluationText(e));
    } else if (*exp) {
      const auto stage = ParseStage(export_stage);
      if (!stage || *stage == Stage::kLabeled) throw Error("unknown stage '" + export_stage + "'");
      const auto cands = StageFile(export_run, *stage);
      if (export_output.empty() || export_output == "-") {
        WriteCandidates(cands, std::cout);
      } else {
        WriteCandidates(cands, export_output);
      }
    } else if (*serve) {
      const std::string labels_path =
          serve_labels.empty() ? RunFile(serve_run, "labels.jsonl") : serve_labels;
      ReviewService service = LoadReviewService(serve_run, labels_path, &diag);
      PrintWarnings(diag);
      ReviewServer server(service);
      const int port = server.Bind(serve_host, serve_port);
      g_server = &server;
      std::signal(SIGINT, OnSignal);
      std::signal(SIGTERM, OnSignal);
      std::cerr << "serving " << service.served() << " candidates on http://" << serve_host
                << ":" << port << "/api/v1\n";
      server.Run();
      g_server = nullptr;
    } else if (*gen) {
      const SyntheticCorpus corpus = GenerateSynthetic(so);
      WriteSynthetic(corpus, so, gen_dir);
      std::cerr << corpus.pairs.size() << " lines, " << corpus.gold.size() << " gold cases\n";
    }
  } catch (const Error& e) {
    PrintWarnings(diag);
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
