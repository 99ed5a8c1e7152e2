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

#include "explmine/stemmer.h"

#include "explmine/unicode.h"
#include "pystr.h"
#include "snowball.h"

namespace explmine {

namespace snowball {

void StandardRegions(std::u32string_view word, std::u32string_view vowels,
                     std::u32string& r1, std::u32string& r2) {
  r1.clear();
  r2.clear();
  for (long i = 1; i < py::Len(word); ++i) {
    if (!py::In(word[i], vowels) && py::In(word[i - 1], vowels)) {
      r1 = py::From(word, i + 1);
      break;
    }
  }
  for (long i = 1; i < py::Len(r1); ++i) {
    if (!py::In(r1[i], vowels) && py::In(r1[i - 1], vowels)) {
      r2 = py::From(r1, i + 1);
      break;
    }
  }
}

}  // namespace snowball

namespace {

using StemFn = std::u32string (*)(std::u32string);

StemFn Lookup(std::string_view lang) {
  if (lang == "en" || lang == "english") return snowball::StemEnglish;
  if (lang == "de" || lang == "german") return snowball::StemGerman;
  if (lang == "fr" || lang == "french") return snowball::StemFrench;
  return nullptr;
}

}  // namespace

bool HasStemmer(std::string_view lang) { return Lookup(lang) != nullptr; }

std::string Stem(std::string_view token, std::string_view lang) {
  std::string lower = ToLower(token);
  StemFn fn = Lookup(lang);
  if (fn == nullptr || lower.empty()) return lower;
  return EncodeUtf8(fn(DecodeUtf8(lower)));
}

std::string StemPhrase(std::span<const std::string> tokens, std::string_view lang) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += Stem(tokens[i], lang);
  }
  return out;
}

}  // namespace explmine
