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

#include "explmine/pipeline.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <set>

#include "explmine/io.h"
#include "explmine/records.h"
#include "json.hpp"

namespace explmine {

namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

std::size_t Idx(StageId s) { return static_cast<std::size_t>(s); }

double Since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename Fn>
auto InStage(StageId stage, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Error(std::string(StageIdName(stage)) + ": " + e.what());
  }
}

std::set<CandidateKey> Keys(const std::vector<Candidate>& cands) {
  std::set<CandidateKey> keys;
  for (const Candidate& c : cands) keys.insert(c.key());
  return keys;
}

void CheckSubset(const std::vector<Candidate>& later, const std::set<CandidateKey>& earlier,
                 std::string_view later_name, std::string_view earlier_name) {
  for (const Candidate& c : later) {
    if (!earlier.contains(c.key())) {
      throw Error("cascade monotonicity violated: " + c.id() + " is in " +
                  std::string(later_name) + " but not in " + std::string(earlier_name));
    }
  }
}

}  // namespace

std::string_view StageIdName(StageId stage) {
  switch (stage) {
    case StageId::kRarity: return "rarity";
    case StageId::kSpan: return "span";
    case StageId::kNer: return "ner";
    case StageId::kWiki: return "wiki";
  }
  return "?";
}

Cascade::Cascade(const Resources& resources, CascadeOptions options, Diagnostics* diag)
    : res_(resources), opt_(std::move(options)), diag_(diag) {}

void Cascade::Reject(const SentencePair& pair, std::uint32_t k, std::uint32_t m,
                     StageId stage, std::string reason) {
  if (!opt_.trace) return;
  rejections_.push_back({pair.id, k, m, stage, std::move(reason)});
}

PairResult Cascade::Process(const SentencePair& pair) {
  PairResult out;

  auto t = Clock::now();
  auto& rarity = totals_.stages[Idx(StageId::kRarity)];
  ++rarity.pairs_in;
  const std::vector<Anchor> anchors = InStage(StageId::kRarity, [&] {
    CheckAlignmentRange(pair);
    return PairRarityGate(pair, res_.src_counts, res_.tgt_counts, opt_.rarity);
  });
  for (const AlignmentLink& link : pair.alignment) {
    if (IsPunctuation(pair.src_tokens[link.src])) continue;
    if (std::binary_search(anchors.begin(), anchors.end(), Anchor{link.src, link.tgt})) continue;
    ++totals_.rarity_not_rare;
    Reject(pair, link.src, link.tgt, StageId::kRarity, "not_rare");
  }
  seconds_[Idx(StageId::kRarity)] += Since(t);
  if (anchors.empty()) return out;
  ++rarity.pairs_out;
  rarity.candidates_out += anchors.size();

  t = Clock::now();
  auto& span = totals_.stages[Idx(StageId::kSpan)];
  ++span.pairs_in;
  const SpanConfig span_cfg{opt_.min_span, opt_.tgt_lang};
  InStage(StageId::kSpan, [&] {
    for (const Anchor& a : anchors) {
      auto r = EvaluateAnchor(pair, a, span_cfg);
      if (auto* reason = std::get_if<SpanReject>(&r)) {
        ++totals_.span.rejected[static_cast<std::size_t>(*reason)];
        Reject(pair, a.k, a.m, StageId::kSpan, std::string(SpanRejectName(*reason)));
      } else {
        ++totals_.span.emitted;
        out.span.push_back(std::move(std::get<Candidate>(r)));
      }
    }
    return 0;
  });
  seconds_[Idx(StageId::kSpan)] += Since(t);
  if (out.span.empty()) return out;
  ++span.pairs_out;
  span.candidates_out += out.span.size();

  t = Clock::now();
  auto& ner = totals_.stages[Idx(StageId::kNer)];
  ++ner.pairs_in;
  InStage(StageId::kNer, [&] {
    std::optional<NerAnnotation> ann;
    if (res_.use_gazetteer) {
      ann = GazetteerNer(pair, res_.gazetteer);
    } else if (const NerAnnotation* found = res_.ner.Find(pair.id, Side::kSrc)) {
      ann = *found;
      ValidateEntities(*ann, pair.src_tokens, diag_);
    }
    for (const Candidate& c : out.span) {
      if (auto kept = NerFilter(c, ann ? &*ann : nullptr)) {
        out.ner.push_back(std::move(*kept));
      } else {
        ++totals_.ner_no_entity;
        Reject(pair, c.k, c.m, StageId::kNer, "no_entity");
      }
    }
    return 0;
  });
  seconds_[Idx(StageId::kNer)] += Since(t);
  if (!out.ner.empty()) {
    ++ner.pairs_out;
    ner.candidates_out += out.ner.size();

    t = Clock::now();
    auto& wiki = totals_.stages[Idx(StageId::kWiki)];
    ++wiki.pairs_in;
    InStage(StageId::kWiki, [&] {
      for (const Candidate& c : out.ner) {
        WikiDecision decision;
        auto kept = WikiFilter(c, res_.src_wiki, res_.tgt_wiki, res_.ptitles, pair, &decision);
        ++totals_.wiki_decisions[static_cast<std::size_t>(decision)];
        if (kept) {
          out.wiki.push_back(std::move(*kept));
        } else {
          Reject(pair, c.k, c.m, StageId::kWiki, std::string(WikiDecisionName(decision)));
        }
      }
      return 0;
    });
    seconds_[Idx(StageId::kWiki)] += Since(t);
    if (!out.wiki.empty()) {
      ++wiki.pairs_out;
      wiki.candidates_out += out.wiki.size();
    }
  }

  const auto span_keys = Keys(out.span);
  const auto ner_keys = Keys(out.ner);
  CheckSubset(out.ner, span_keys, "NER", "SPAN");
  CheckSubset(out.wiki, ner_keys, "WIKI", "NER");
  return out;
}

CascadeRun RunCascade(const std::vector<SentencePair>& pairs, const Resources& resources,
                      const CascadeOptions& options, Diagnostics* diag) {
  Cascade cascade(resources, options, diag);
  CascadeRun run;
  for (const SentencePair& pair : pairs) {
    if (pair.src_tokens.empty() || pair.tgt_tokens.empty()) continue;
    PairResult r = cascade.Process(pair);
    std::move(r.span.begin(), r.span.end(), std::back_inserter(run.span));
    std::move(r.ner.begin(), r.ner.end(), std::back_inserter(run.ner));
    std::move(r.wiki.begin(), r.wiki.end(), std::back_inserter(run.wiki));
  }
  run.totals = cascade.totals();
  run.rejections = cascade.TakeRejections();
  return run;
}

Resources LoadResources(const PipelineConfig& cfg, Diagnostics* diag) {
  Resources res;
  res.src_counts = ReadCounts(cfg.src_counts);
  res.tgt_counts = ReadCounts(cfg.tgt_counts);
  if (diag && res.src_counts.lang() != cfg.src_lang) {
    diag->warn(cfg.src_counts + ": counts are for '" + res.src_counts.lang() +
               "', config says '" + cfg.src_lang + "'");
  }
  if (diag && res.tgt_counts.lang() != cfg.tgt_lang) {
    diag->warn(cfg.tgt_counts + ": counts are for '" + res.tgt_counts.lang() +
               "', config says '" + cfg.tgt_lang + "'");
  }
  res.src_wiki = ReadWikiIndex(cfg.src_wiki, cfg.src_lang);
  res.tgt_wiki = ReadWikiIndex(cfg.tgt_wiki, cfg.tgt_lang);
  if (cfg.ner_source == "gazetteer") {
    res.use_gazetteer = true;
    res.gazetteer = cfg.gazetteer_titles.empty()
                        ? res.src_wiki
                        : ReadWikiIndex(cfg.gazetteer_titles, cfg.src_lang);
  } else {
    res.ner = LoadNer(cfg.ner_file, diag);
  }
  if (cfg.parallel_titles.empty()) {
    res.ptitles = ParallelTitles(cfg.src_lang, cfg.tgt_lang);
  } else {
    res.ptitles = ReadParallelTitles(cfg.parallel_titles, cfg.src_lang, cfg.tgt_lang, diag);
    res.ptitles.CheckAgainst(res.src_wiki, diag);
  }
  return res;
}

std::string FormatReportJson(const PipelineReport& report) {
  ordered_json doc;
  doc["config"] = ordered_json::object();
  for (const auto& [k, v] : report.config) doc["config"][k] = v;
  doc["pairs_read"] = report.pairs_read;
  doc["skipped_empty"] = report.skipped_empty;
  ordered_json stages = ordered_json::array();
  for (std::size_t i = 0; i < kStageCount; ++i) {
    const StageCounts& s = report.totals.stages[i];
    ordered_json item;
    item["stage"] = StageIdName(static_cast<StageId>(i));
    item["pairs_in"] = s.pairs_in;
    item["pairs_out"] = s.pairs_out;
    item["candidates_out"] = s.candidates_out;
    stages.push_back(std::move(item));
  }
  doc["stages"] = std::move(stages);
  ordered_json rejected;
  rejected["rarity"] = {{"not_rare", report.totals.rarity_not_rare}};
  ordered_json span = ordered_json::object();
  for (std::size_t i = 0; i < kSpanRejectCount; ++i) {
    span[std::string(SpanRejectName(static_cast<SpanReject>(i)))] =
        report.totals.span.rejected[i];
  }
  rejected["span"] = std::move(span);
  rejected["ner"] = {{"no_entity", report.totals.ner_no_entity}};
  doc["rejected"] = std::move(rejected);
  ordered_json decisions = ordered_json::object();
  for (std::size_t i = 0; i < report.totals.wiki_decisions.size(); ++i) {
    decisions[std::string(WikiDecisionName(static_cast<WikiDecision>(i)))] =
        report.totals.wiki_decisions[i];
  }
  doc["wiki_decisions"] = std::move(decisions);
  doc["warnings"] = report.warnings;
  return doc.dump(2) + "\n";
}

std::string FormatReportText(const PipelineReport& report) {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof line, "pairs read: %llu (skipped empty: %llu)\n\n",
                static_cast<unsigned long long>(report.pairs_read),
                static_cast<unsigned long long>(report.skipped_empty));
  out += line;
  std::snprintf(line, sizeof line, "%-8s %12s %12s %15s\n", "stage", "pairs_in", "pairs_out",
                "candidates_out");
  out += line;
  for (std::size_t i = 0; i < kStageCount; ++i) {
    const StageCounts& s = report.totals.stages[i];
    std::snprintf(line, sizeof line, "%-8s %12llu %12llu %15llu\n",
                  std::string(StageIdName(static_cast<StageId>(i))).c_str(),
                  static_cast<unsigned long long>(s.pairs_in),
                  static_cast<unsigned long long>(s.pairs_out),
                  static_cast<unsigned long long>(s.candidates_out));
    out += line;
  }
  out += "\nrejected\n";
  auto row = [&](std::string_view name, std::uint64_t n) {
    std::snprintf(line, sizeof line, "  %-20s %12llu\n", std::string(name).c_str(),
                  static_cast<unsigned long long>(n));
    out += line;
  };
  row("not_rare", report.totals.rarity_not_rare);
  for (std::size_t i = 0; i < kSpanRejectCount; ++i) {
    row(SpanRejectName(static_cast<SpanReject>(i)), report.totals.span.rejected[i]);
  }
  row("no_entity", report.totals.ner_no_entity);
  out += "\nwiki decisions\n";
  for (std::size_t i = 0; i < report.totals.wiki_decisions.size(); ++i) {
    row(WikiDecisionName(static_cast<WikiDecision>(i)), report.totals.wiki_decisions[i]);
  }
  out += "\nconfig\n";
  for (const auto& [k, v] : report.config) out += "  " + k + " = " + v + "\n";
  if (report.warnings > 0) out += "\nwarnings: " + std::to_string(report.warnings) + "\n";
  return out;
}

std::string FormatTimingJson(const PipelineReport& report) {
  ordered_json doc;
  for (std::size_t i = 0; i < kStageCount; ++i) {
    doc[std::string(StageIdName(static_cast<StageId>(i))) + "_seconds"] = report.seconds[i];
  }
  doc["total_seconds"] = report.total_seconds;
  return doc.dump(2) + "\n";
}

std::string FormatRejection(const Rejection& r) {
  ordered_json doc;
  doc["pair_id"] = r.pair_id;
  doc["k"] = r.k;
  doc["m"] = r.m;
  doc["stage"] = StageIdName(r.stage);
  doc["reason"] = r.reason;
  return doc.dump();
}

PipelineReport RunPipeline(const PipelineConfig& cfg, const RunOptions& options,
                           Diagnostics* diag) {
  const auto start = Clock::now();
  ValidateConfig(cfg);
  const Resources res = LoadResources(cfg, diag);
  // Opened before the output directory is touched so a bad path fails early.
  ParallelCorpusReader corpus(cfg.src_corpus, cfg.tgt_corpus);
  AlignmentReader aligner(cfg.alignments);

  std::error_code ec;
  std::filesystem::create_directories(cfg.output_dir, ec);
  if (ec) throw Error("cannot create " + cfg.output_dir + ": " + ec.message());
  const std::filesystem::path dir(cfg.output_dir);
  const std::string span_path = (dir / "candidates.span.jsonl").string();
  const std::string ner_path = (dir / "candidates.ner.jsonl").string();
  const std::string wiki_path = (dir / "candidates.wiki.jsonl").string();
  const std::string reject_path = (dir / "rejections.jsonl").string();
  std::ofstream span_out = OpenOutput(span_path);
  std::ofstream ner_out = OpenOutput(ner_path);
  std::ofstream wiki_out = OpenOutput(wiki_path);
  std::ofstream reject_out;
  if (options.trace) reject_out = OpenOutput(reject_path);

  CascadeOptions copt;
  copt.src_lang = cfg.src_lang;
  copt.tgt_lang = cfg.tgt_lang;
  copt.rarity = {cfg.src_threshold, cfg.tgt_threshold};
  copt.min_span = cfg.min_span;
  copt.trace = options.trace;
  Cascade cascade(res, copt, diag);

  PipelineReport report;
  report.config = cfg.Snapshot();
  while (auto pair = corpus.Next()) {
    aligner.Attach(*pair);
    ++report.pairs_read;
    const PairResult r = cascade.Process(*pair);
    for (const Candidate& c : r.span) span_out << FormatCandidateRecord(c) << '\n';
    for (const Candidate& c : r.ner) ner_out << FormatCandidateRecord(c) << '\n';
    for (const Candidate& c : r.wiki) wiki_out << FormatCandidateRecord(c) << '\n';
    if (options.trace) {
      for (const Rejection& rej : cascade.TakeRejections()) {
        reject_out << FormatRejection(rej) << '\n';
      }
    }
  }
  CloseOutput(span_out, span_path);
  CloseOutput(ner_out, ner_path);
  CloseOutput(wiki_out, wiki_path);
  if (options.trace) CloseOutput(reject_out, reject_path);

  report.skipped_empty = corpus.skipped_empty();
  report.totals = cascade.totals();
  report.warnings = diag ? diag->count() : 0;
  report.seconds = cascade.stage_seconds();

  auto write = [&](const char* name, const std::string& text) {
    const std::string path = (dir / name).string();
    std::ofstream out = OpenOutput(path);
    out << text;
    CloseOutput(out, path);
  };
  write("report.json", FormatReportJson(report));
  write("report.txt", FormatReportText(report));
  report.total_seconds = Since(start);
  write("timing.json", FormatTimingJson(report));
  return report;
}

}  // namespace explmine
