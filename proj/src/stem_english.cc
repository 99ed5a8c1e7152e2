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

// English Snowball (Porter2) stemmer, following the NLTK variant step by step
// so that stems agree with the NLTK output.

#include <array>
#include <unordered_map>

#include "pystr.h"
#include "snowball.h"

namespace explmine::snowball {

namespace {

using py::Str;
using py::View;

constexpr View kVowels = U"aeiouy";
constexpr View kLiEnding = U"cdeghkmnrt";
constexpr std::array<View, 9> kDoubles = {U"bb", U"dd", U"ff", U"gg", U"mm",
                                          U"nn", U"pp", U"rr", U"tt"};
constexpr std::array<View, 3> kStep0 = {U"'s'", U"'s", U"'"};
constexpr std::array<View, 6> kStep1a = {U"sses", U"ied", U"ies", U"us", U"ss", U"s"};
constexpr std::array<View, 6> kStep1b = {U"eedly", U"ingly", U"edly",
                                         U"eed",   U"ing",   U"ed"};
constexpr std::array<View, 24> kStep2 = {
    U"ization", U"ational", U"fulness", U"ousness", U"iveness", U"tional",
    U"biliti",  U"lessli",  U"entli",   U"ation",   U"alism",   U"aliti",
    U"ousli",   U"iviti",   U"fulli",   U"enci",    U"anci",    U"abli",
    U"izer",    U"ator",    U"alli",    U"bli",     U"ogi",     U"li"};
constexpr std::array<View, 9> kStep3 = {U"ational", U"tional", U"alize",
                                        U"icate",   U"iciti",  U"ative",
                                        U"ical",    U"ness",   U"ful"};
constexpr std::array<View, 18> kStep4 = {
    U"ement", U"ance", U"ence", U"able", U"ible", U"ment", U"ant", U"ent", U"ism",
    U"ate",   U"iti",  U"ous",  U"ive",  U"ize",  U"ion",  U"al",  U"er",  U"ic"};

const std::unordered_map<Str, Str>& SpecialWords() {
  static const auto* words = new std::unordered_map<Str, Str>{
      {U"skis", U"ski"},         {U"skies", U"sky"},        {U"dying", U"die"},
      {U"lying", U"lie"},        {U"tying", U"tie"},        {U"idly", U"idl"},
      {U"gently", U"gentl"},     {U"ugly", U"ugli"},        {U"early", U"earli"},
      {U"only", U"onli"},        {U"singly", U"singl"},     {U"sky", U"sky"},
      {U"news", U"news"},        {U"howe", U"howe"},        {U"atlas", U"atlas"},
      {U"cosmos", U"cosmos"},    {U"bias", U"bias"},        {U"andes", U"andes"},
      {U"inning", U"inning"},    {U"innings", U"inning"},   {U"outing", U"outing"},
      {U"outings", U"outing"},   {U"canning", U"canning"},  {U"cannings", U"canning"},
      {U"herring", U"herring"},  {U"herrings", U"herring"}, {U"earring", U"earring"},
      {U"earrings", U"earring"}, {U"proceed", U"proceed"},  {U"proceeds", U"proceed"},
      {U"proceeded", U"proceed"}, {U"proceeding", U"proceed"}, {U"exceed", U"exceed"},
      {U"exceeds", U"exceed"},   {U"exceeded", U"exceed"},  {U"exceeding", U"exceed"},
      {U"succeed", U"succeed"},  {U"succeeds", U"succeed"}, {U"succeeded", U"succeed"},
      {U"succeeding", U"succeed"}};
  return *words;
}

bool IsVowel(char32_t c) { return py::In(c, kVowels); }

bool HasVowel(View s) {
  for (char32_t c : s) {
    if (IsVowel(c)) return true;
  }
  return false;
}

// Region bookkeeping shared by all steps: word, R1 and R2 are trimmed or
// rewritten together.
struct Regions {
  Str word;
  Str r1;
  Str r2;

  void Drop(long n) {
    word = py::DropLast(word, n);
    r1 = py::DropLast(r1, n);
    r2 = py::DropLast(r2, n);
  }

  // Replaces `suffix` by `replacement`; a region shorter than the suffix
  // becomes `short_value`.
  void Replace(View suffix, View replacement, View r2_short = U"") {
    word = py::SuffixReplace(word, suffix, replacement);
    r1 = py::Len(r1) >= py::Len(suffix) ? py::SuffixReplace(r1, suffix, replacement)
                                        : Str();
    r2 = py::Len(r2) >= py::Len(suffix) ? py::SuffixReplace(r2, suffix, replacement)
                                        : Str(r2_short);
  }

  // Replaces the final character of each non-empty region with `c`.
  void ReplaceLast(char32_t c) {
    word = py::DropLast(word, 1) + c;
    r1 = py::Len(r1) >= 1 ? py::DropLast(r1, 1) + c : Str();
    r2 = py::Len(r2) >= 1 ? py::DropLast(r2, 1) + c : Str();
  }
};

void Step1b(Regions& w) {
  for (View suffix : kStep1b) {
    if (!py::EndsWith(w.word, suffix)) continue;
    if (suffix == U"eed" || suffix == U"eedly") {
      if (py::EndsWith(w.r1, suffix)) w.Replace(suffix, U"ee");
    } else if (HasVowel(py::DropLast(w.word, py::Len(suffix)))) {
      w.Drop(py::Len(suffix));
      const Str& word = w.word;
      if (py::EndsWith(word, U"at") || py::EndsWith(word, U"bl") ||
          py::EndsWith(word, U"iz")) {
        w.word += U'e';
        w.r1 += U'e';
        if (py::Len(w.word) > 5 || py::Len(w.r1) >= 3) w.r2 += U'e';
      } else if (std::any_of(kDoubles.begin(), kDoubles.end(),
                             [&](View d) { return py::EndsWith(word, d); })) {
        w.Drop(1);
      } else if ((w.r1.empty() && py::Len(word) >= 3 && !IsVowel(py::At(word, -1)) &&
                  !py::In(py::At(word, -1), U"wxY") && IsVowel(py::At(word, -2)) &&
                  !IsVowel(py::At(word, -3))) ||
                 (w.r1.empty() && py::Len(word) == 2 && IsVowel(py::At(word, 0)) &&
                  !IsVowel(py::At(word, 1)))) {
        w.word += U'e';
        if (!w.r1.empty()) w.r1 += U'e';
        if (!w.r2.empty()) w.r2 += U'e';
      }
    }
    break;
  }
}

void Step2(Regions& w) {
  for (View suffix : kStep2) {
    if (!py::EndsWith(w.word, suffix)) continue;
    if (py::EndsWith(w.r1, suffix)) {
      if (suffix == U"tional") {
        w.Drop(2);
      } else if (suffix == U"enci" || suffix == U"anci" || suffix == U"abli") {
        w.ReplaceLast(U'e');
      } else if (suffix == U"entli") {
        w.Drop(2);
      } else if (suffix == U"izer" || suffix == U"ization") {
        w.Replace(suffix, U"ize");
      } else if (suffix == U"ational" || suffix == U"ation" || suffix == U"ator") {
        w.Replace(suffix, U"ate", U"e");
      } else if (suffix == U"alism" || suffix == U"aliti" || suffix == U"alli") {
        w.Replace(suffix, U"al");
      } else if (suffix == U"fulness") {
        w.Drop(4);
      } else if (suffix == U"ousli" || suffix == U"ousness") {
        w.Replace(suffix, U"ous");
      } else if (suffix == U"iveness" || suffix == U"iviti") {
        w.Replace(suffix, U"ive", U"e");
      } else if (suffix == U"biliti" || suffix == U"bli") {
        w.Replace(suffix, U"ble");
      } else if (suffix == U"ogi" && py::At(w.word, -4) == U'l') {
        w.Drop(1);
      } else if (suffix == U"fulli" || suffix == U"lessli") {
        w.Drop(2);
      } else if (suffix == U"li" && py::In(py::At(w.word, -3), kLiEnding)) {
        w.Drop(2);
      }
    }
    break;
  }
}

void Step3(Regions& w) {
  for (View suffix : kStep3) {
    if (!py::EndsWith(w.word, suffix)) continue;
    if (py::EndsWith(w.r1, suffix)) {
      if (suffix == U"tional") {
        w.Drop(2);
      } else if (suffix == U"ational") {
        w.Replace(suffix, U"ate");
      } else if (suffix == U"alize") {
        w.Drop(3);
      } else if (suffix == U"icate" || suffix == U"iciti" || suffix == U"ical") {
        w.Replace(suffix, U"ic");
      } else if (suffix == U"ful" || suffix == U"ness") {
        w.Drop(py::Len(suffix));
      } else if (suffix == U"ative" && py::EndsWith(w.r2, suffix)) {
        w.Drop(5);
      }
    }
    break;
  }
}

void Step4(Regions& w) {
  for (View suffix : kStep4) {
    if (!py::EndsWith(w.word, suffix)) continue;
    if (py::EndsWith(w.r2, suffix)) {
      if (suffix == U"ion") {
        if (py::In(py::At(w.word, -4), U"st")) w.Drop(3);
      } else {
        w.Drop(py::Len(suffix));
      }
    }
    break;
  }
}

}  // namespace

Str StemEnglish(Str word) {
  if (py::Len(word) <= 2) return word;
  const auto& special = SpecialWords();
  if (auto it = special.find(word); it != special.end()) return it->second;

  for (char32_t& c : word) {
    if (c == 0x2019 || c == 0x2018 || c == 0x201B) c = U'\'';
  }
  if (py::StartsWith(word, U"'")) word = py::From(word, 1);
  if (py::StartsWith(word, U"y")) py::SetAt(word, 0, U'Y');
  for (long i = 1; i < py::Len(word); ++i) {
    if (IsVowel(word[i - 1]) && word[i] == U'y') py::SetAt(word, i, U'Y');
  }

  Regions w;
  w.word = word;
  if (py::StartsWith(word, U"gener") || py::StartsWith(word, U"commun") ||
      py::StartsWith(word, U"arsen")) {
    w.r1 = py::StartsWith(word, U"commun") ? py::From(word, 6) : py::From(word, 5);
    for (long i = 1; i < py::Len(w.r1); ++i) {
      if (!IsVowel(w.r1[i]) && IsVowel(w.r1[i - 1])) {
        w.r2 = py::From(w.r1, i + 1);
        break;
      }
    }
  } else {
    StandardRegions(word, kVowels, w.r1, w.r2);
  }

  for (View suffix : kStep0) {
    if (py::EndsWith(w.word, suffix)) {
      w.Drop(py::Len(suffix));
      break;
    }
  }

  for (View suffix : kStep1a) {
    if (!py::EndsWith(w.word, suffix)) continue;
    if (suffix == U"sses") {
      w.Drop(2);
    } else if (suffix == U"ied" || suffix == U"ies") {
      w.Drop(py::Len(py::DropLast(w.word, py::Len(suffix))) > 1 ? 2 : 1);
    } else if (suffix == U"s") {
      if (HasVowel(py::DropLast(w.word, 2))) w.Drop(1);
    }
    break;
  }

  Step1b(w);

  if (py::Len(w.word) > 2 && py::In(py::At(w.word, -1), U"yY") &&
      !IsVowel(py::At(w.word, -2))) {
    w.ReplaceLast(U'i');
  }

  Step2(w);
  Step3(w);
  Step4(w);

  if (py::EndsWith(w.r2, U"l") && py::At(w.word, -2) == U'l') {
    w.word = py::DropLast(w.word, 1);
  } else if (py::EndsWith(w.r2, U"e")) {
    w.word = py::DropLast(w.word, 1);
  } else if (py::EndsWith(w.r1, U"e")) {
    const Str& s = w.word;
    if (py::Len(s) >= 4 &&
        (IsVowel(py::At(s, -2)) || py::In(py::At(s, -2), U"wxY") ||
         !IsVowel(py::At(s, -3)) || IsVowel(py::At(s, -4)))) {
      w.word = py::DropLast(w.word, 1);
    }
  }

  for (char32_t& c : w.word) {
    if (c == U'Y') c = U'y';
  }
  return w.word;
}

}  // namespace explmine::snowball
