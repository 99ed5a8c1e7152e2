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

// German Snowball stemmer (NLTK variant).

#include <array>

#include "pystr.h"
#include "snowball.h"

namespace explmine::snowball {

namespace {

using py::Str;
using py::View;

constexpr View kVowels = U"aeiouyäöü";
constexpr View kSEnding = U"bdfghklmnrt";
constexpr View kStEnding = U"bdfghklmnt";
constexpr std::array<View, 7> kStep1 = {U"ern", U"em", U"er", U"en", U"es", U"e", U"s"};
constexpr std::array<View, 4> kStep2 = {U"est", U"en", U"er", U"st"};
constexpr std::array<View, 8> kStep3 = {U"isch", U"lich", U"heit", U"keit",
                                        U"end",  U"ung",  U"ig",   U"ik"};

bool IsVowel(char32_t c) { return py::In(c, kVowels); }

}  // namespace

Str StemGerman(Str word) {
  py::ReplaceAll(word, U'ß', U"ss");

  for (long i = 1; i < py::Len(word) - 1; ++i) {
    if (IsVowel(word[i - 1]) && IsVowel(word[i + 1])) {
      if (word[i] == U'u') {
        py::SetAt(word, i, U'U');
      } else if (word[i] == U'y') {
        py::SetAt(word, i, U'Y');
      }
    }
  }

  Str r1;
  Str r2;
  StandardRegions(word, kVowels, r1, r2);

  // The region before R1 must hold at least three letters.
  for (long i = 1; i < py::Len(word); ++i) {
    if (!IsVowel(word[i]) && IsVowel(word[i - 1])) {
      if (i + 1 < 3) r1 = py::From(word, 3);
      break;
    }
  }

  auto drop = [&](long n) {
    word = py::DropLast(word, n);
    r1 = py::DropLast(r1, n);
    r2 = py::DropLast(r2, n);
  };

  for (View suffix : kStep1) {
    if (!py::EndsWith(r1, suffix)) continue;
    const long len = py::Len(suffix);
    if ((suffix == U"en" || suffix == U"es" || suffix == U"e") &&
        py::Slice(word, -len - 4, -len) == U"niss") {
      drop(len + 1);
    } else if (suffix == U"s") {
      if (py::In(py::At(word, -2), kSEnding)) drop(1);
    } else {
      drop(len);
    }
    break;
  }

  for (View suffix : kStep2) {
    if (!py::EndsWith(r1, suffix)) continue;
    if (suffix == U"st") {
      if (py::In(py::At(word, -3), kStEnding) && py::Len(py::DropLast(word, 3)) >= 3) {
        drop(2);
      }
    } else {
      drop(py::Len(suffix));
    }
    break;
  }

  for (View suffix : kStep3) {
    if (!py::EndsWith(r2, suffix)) continue;
    const long len = py::Len(suffix);
    if (suffix == U"end" || suffix == U"ung") {
      if (py::Contains(py::Slice(r2, -len - 2, -len), U"ig") &&
          !py::Contains(py::Slice(r2, -len - 3, -len - 2), U"e")) {
        word = py::DropLast(word, len + 2);
      } else {
        word = py::DropLast(word, len);
      }
    } else if ((suffix == U"ig" || suffix == U"ik" || suffix == U"isch") &&
               !py::Contains(py::Slice(r2, -len - 1, -len), U"e")) {
      word = py::DropLast(word, len);
    } else if (suffix == U"lich" || suffix == U"heit") {
      const Str before = py::Slice(r1, -len - 2, -len);
      if (py::Contains(before, U"er") || py::Contains(before, U"en")) {
        word = py::DropLast(word, len + 2);
      } else {
        word = py::DropLast(word, len);
      }
    } else if (suffix == U"keit") {
      if (py::Contains(py::Slice(r2, -len - 4, -len), U"lich")) {
        word = py::DropLast(word, len + 4);
      } else if (py::Contains(py::Slice(r2, -len - 2, -len), U"ig")) {
        word = py::DropLast(word, len + 2);
      } else {
        word = py::DropLast(word, len);
      }
    }
    break;
  }

  for (char32_t& c : word) {
    switch (c) {
      case U'ä': c = U'a'; break;
      case U'ö': c = U'o'; break;
      case U'ü': c = U'u'; break;
      case U'U': c = U'u'; break;
      case U'Y': c = U'y'; break;
      default: break;
    }
  }
  return word;
}

}  // namespace explmine::snowball
