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

#include "explmine/labels.h"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>

#include "explmine/io.h"
#include "json.hpp"

namespace explmine {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

bool Digits(std::string_view s, std::size_t pos, std::size_t n, int* out) {
  if (pos + n > s.size()) return false;
  int v = 0;
  for (std::size_t i = pos; i < pos + n; ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
    v = v * 10 + (s[i] - '0');
  }
  *out = v;
  return true;
}

bool LeapYear(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int DaysInMonth(int y, int m) {
  static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  return m == 2 && LeapYear(y) ? 29 : kDays[m - 1];
}

}  // namespace

std::string_view VerdictName(Verdict verdict) {
  return verdict == Verdict::kExplanation ? "EXPLANATION" : "NOT_EXPLANATION";
}

std::optional<Verdict> ParseVerdict(std::string_view name) {
  if (name == "EXPLANATION") return Verdict::kExplanation;
  if (name == "NOT_EXPLANATION") return Verdict::kNotExplanation;
  return std::nullopt;
}

std::optional<std::int64_t> ParseRfc3339(std::string_view s) {
  int year, month, day, hour, minute, second;
  if (!Digits(s, 0, 4, &year) || s.size() < 20 || s[4] != '-' || !Digits(s, 5, 2, &month) ||
      s[7] != '-' || !Digits(s, 8, 2, &day) || (s[10] != 'T' && s[10] != 't') ||
      !Digits(s, 11, 2, &hour) || s[13] != ':' || !Digits(s, 14, 2, &minute) ||
      s[16] != ':' || !Digits(s, 17, 2, &second)) {
    return std::nullopt;
  }
  if (month < 1 || month > 12 || day < 1 || day > DaysInMonth(year, month) || hour > 23 ||
      minute > 59 || second > 60) {
    return std::nullopt;
  }
  std::size_t pos = 19;
  std::int64_t micros = 0;
  if (s[pos] == '.') {
    ++pos;
    std::size_t digits = 0;
    std::int64_t scale = 100000;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
      micros += (s[pos] - '0') * scale;
      scale /= 10;
      ++pos;
      ++digits;
    }
    if (digits == 0) return std::nullopt;
  }
  if (pos >= s.size()) return std::nullopt;
  std::int64_t offset_s = 0;
  if (s[pos] == 'Z' || s[pos] == 'z') {
    ++pos;
  } else if (s[pos] == '+' || s[pos] == '-') {
    int oh, om;
    if (!Digits(s, pos + 1, 2, &oh) || pos + 3 >= s.size() || s[pos + 3] != ':' ||
        !Digits(s, pos + 4, 2, &om) || oh > 23 || om > 59) {
      return std::nullopt;
    }
    offset_s = (oh * 60 + om) * 60 * (s[pos] == '+' ? 1 : -1);
    pos += 6;
  } else {
    return std::nullopt;
  }
  if (pos != s.size()) return std::nullopt;

  using namespace std::chrono;
  const sys_days date = year_month_day{std::chrono::year{year},
                                       std::chrono::month{static_cast<unsigned>(month)},
                                       std::chrono::day{static_cast<unsigned>(day)}};
  const std::int64_t secs = date.time_since_epoch().count() * 86400LL + hour * 3600LL +
                            minute * 60LL + second - offset_s;
  return secs * 1000000LL + micros;
}

std::string FormatRfc3339(std::int64_t micros) {
  using namespace std::chrono;
  std::int64_t secs = micros / 1000000;
  std::int64_t frac = micros % 1000000;
  if (frac < 0) {
    frac += 1000000;
    --secs;
  }
  std::int64_t days = secs / 86400;
  std::int64_t rem = secs % 86400;
  if (rem < 0) {
    rem += 86400;
    --days;
  }
  const year_month_day ymd{sys_days{std::chrono::days{days}}};
  char buf[40];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02d.%03dZ",
                static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()), static_cast<int>(rem / 3600),
                static_cast<int>(rem / 60 % 60), static_cast<int>(rem % 60),
                static_cast<int>(frac / 1000));
  return buf;
}

std::int64_t NowMicros() {
  using namespace std::chrono;
  return duration_cast<microseconds>(system_clock::now().time_since_epoch()).count();
}

std::string FormatLabelRecord(const ReviewLabel& label) {
  ordered_json doc;
  doc["candidate_id"] = label.candidate_id;
  doc["verdict"] = VerdictName(label.verdict);
  doc["annotator"] = label.annotator;
  doc["timestamp"] = label.timestamp;
  return doc.dump();
}

ReviewLabel ParseLabelRecord(std::string_view line, std::int64_t line_number) {
  const std::string where = "label record at line " + std::to_string(line_number);
  json doc;
  try {
    doc = json::parse(line);
  } catch (const json::exception& e) {
    throw Error("malformed " + where + ": " + e.what());
  }
  if (!doc.is_object()) throw Error("malformed " + where + ": not an object");
  auto text = [&](const char* name) -> std::string {
    auto it = doc.find(name);
    if (it == doc.end() || !it->is_string() || it->get_ref<const std::string&>().empty()) {
      throw Error("malformed " + where + ": field '" + name + "' must be a non-empty string");
    }
    return it->get<std::string>();
  };
  ReviewLabel label;
  label.candidate_id = text("candidate_id");
  auto verdict = ParseVerdict(text("verdict"));
  if (!verdict) {
    throw Error("malformed " + where +
                ": field 'verdict' must be EXPLANATION or NOT_EXPLANATION");
  }
  label.verdict = *verdict;
  label.annotator = text("annotator");
  label.timestamp = text("timestamp");
  auto t = ParseRfc3339(label.timestamp);
  if (!t) throw Error("malformed " + where + ": field 'timestamp' is not RFC 3339");
  label.time_us = *t;
  return label;
}

void LabelLog::Add(ReviewLabel label) { labels_.push_back(std::move(label)); }

std::map<std::pair<std::string, std::string>, ReviewLabel> LabelLog::Effective() const {
  std::map<std::pair<std::string, std::string>, ReviewLabel> out;
  for (const ReviewLabel& l : labels_) {
    auto [it, inserted] = out.try_emplace({l.candidate_id, l.annotator}, l);
    if (!inserted && l.time_us >= it->second.time_us) it->second = l;
  }
  return out;
}

std::map<std::string, Verdict> LabelLog::Verdicts() const {
  std::map<std::string, const ReviewLabel*> latest;
  // Effective() is keyed by candidate then annotator, so ties across
  // annotators resolve to the lexicographically last annotator.
  const auto effective = Effective();
  for (const auto& [key, label] : effective) {
    auto [it, inserted] = latest.try_emplace(key.first, &label);
    if (!inserted && label.time_us >= it->second->time_us) it->second = &label;
  }
  std::map<std::string, Verdict> out;
  for (const auto& [id, label] : latest) out.emplace(id, label->verdict);
  return out;
}

LabelTally LabelLog::Tally() const {
  LabelTally tally;
  for (const auto& [id, verdict] : Verdicts()) {
    ++tally.labeled;
    if (verdict == Verdict::kExplanation) {
      ++tally.explanation;
    } else {
      ++tally.not_explanation;
    }
  }
  return tally;
}

void LabelLog::CheckKnown(const std::set<std::string>& known, Diagnostics* diag) const {
  if (diag == nullptr) return;
  for (const ReviewLabel& l : labels_) {
    if (!known.contains(l.candidate_id)) {
      diag->warn("label for unknown candidate " + l.candidate_id + " (kept)");
    }
  }
}

LabelLog ReadLabels(std::istream& in) {
  LabelLog log;
  std::string line;
  std::int64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    log.Add(ParseLabelRecord(line, line_number));
  }
  return log;
}

LabelLog LoadLabels(const std::string& path) {
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return {};
  std::ifstream in = OpenInput(path);
  return ReadLabels(in);
}

void AppendLabel(const std::string& path, const ReviewLabel& label) {
  const std::string line = FormatLabelRecord(label) + "\n";
  const int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
  if (fd < 0) throw Error("cannot open " + path + ": " + std::strerror(errno));
  std::size_t done = 0;
  while (done < line.size()) {
    const ssize_t n = ::write(fd, line.data() + done, line.size() - done);
    if (n < 0) {
      if (errno == EINTR) continue;
      const int err = errno;
      ::close(fd);
      throw Error("cannot write " + path + ": " + std::strerror(err));
    }
    done += static_cast<std::size_t>(n);
  }
  if (::fsync(fd) != 0) {
    const int err = errno;
    ::close(fd);
    throw Error("cannot sync " + path + ": " + std::strerror(err));
  }
  ::close(fd);
}

}  // namespace explmine
