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

// French Snowball stemmer (NLTK variant). Region tests use substring
// containment where NLTK does, not suffix matching.

#include <array>
#include <initializer_list>

#include "pystr.h"
#include "snowball.h"

namespace explmine::snowball {

namespace {

using py::Str;
using py::View;

constexpr View kVowels = U"aeiouyâàëéêèïîôûù";

constexpr std::array<View, 43> kStep1 = {
    U"issements", U"issement", U"atrices", U"atrice", U"ateurs", U"ations", U"logies",
    U"usions",    U"utions",   U"ements",  U"amment", U"emment", U"ances",  U"iqUes",
    U"ismes",     U"ables",    U"istes",   U"ateur",  U"ation",  U"logie",  U"usion",
    U"ution",     U"ences",    U"ement",   U"euses",  U"ments",  U"ance",   U"iqUe",
    U"isme",      U"able",     U"iste",    U"ence",   U"ités",   U"ives",   U"eaux",
    U"euse",      U"ment",     U"eux",     U"ité",    U"ive",    U"ifs",    U"aux",
    U"if"};

constexpr std::array<View, 35> kStep2a = {
    U"issaIent", U"issantes", U"iraIent", U"issante", U"issants", U"issions", U"irions",
    U"issais",   U"issait",   U"issant",  U"issent",  U"issiez",  U"issons",  U"irais",
    U"irait",    U"irent",    U"iriez",   U"irons",   U"iront",   U"isses",   U"issez",
    U"îmes",     U"îtes",     U"irai",    U"iras",    U"irez",    U"isse",    U"ies",
    U"ira",      U"ît",       U"ie",      U"ir",      U"is",      U"it",      U"i"};

constexpr std::array<View, 38> kStep2b = {
    U"eraIent", U"assions", U"erions", U"assent", U"assiez", U"èrent", U"erais",
    U"erait",   U"eriez",   U"erons",  U"eront",  U"aIent",  U"antes", U"asses",
    U"ions",    U"erai",    U"eras",   U"erez",   U"âmes",   U"âtes",  U"ante",
    U"ants",    U"asse",    U"ées",    U"era",    U"iez",    U"ais",   U"ait",
    U"ant",     U"ée",      U"és",     U"er",     U"ez",     U"ât",    U"ai",
    U"as",      U"é",       U"a"};

constexpr std::array<View, 7> kStep4 = {U"ière", U"Ière", U"ion", U"ier",
                                        U"Ier",  U"e",    U"ë"};

bool IsVowel(char32_t c) { return py::In(c, kVowels); }

bool OneOf(View s, std::initializer_list<View> options) {
  for (View o : options) {
    if (s == o) return true;
  }
  return false;
}

// Character before the last occurrence of `sub` in `s`, with Python's
// wrap-around when that occurrence starts at 0.
char32_t BeforeLast(View s, View sub) {
  const auto pos = s.rfind(sub);
  return py::At(s, static_cast<long>(pos) - 1);
}

Str FrenchRv(View word) {
  Str rv;
  if (py::Len(word) >= 2) {
    if (py::StartsWith(word, U"par") || py::StartsWith(word, U"col") ||
        py::StartsWith(word, U"tap") || (IsVowel(word[0]) && IsVowel(word[1]))) {
      rv = py::From(word, 3);
    } else {
      for (long i = 1; i < py::Len(word); ++i) {
        if (IsVowel(word[i])) {
          rv = py::From(word, i + 1);
          break;
        }
      }
    }
  }
  return rv;
}

struct State {
  Str word;
  Str r1;
  Str r2;
  Str rv;
  bool step1_success = false;
  bool rv_ending_found = false;
  bool step2a_success = false;
  bool step2b_success = false;
};

// Replaces a trailing "ic" by nothing when "ic" occurs in R2, else by "iqU".
void FixIc(State& s) {
  if (py::Last(s.word, 2) == U"ic") {
    if (py::Contains(s.r2, U"ic")) {
      s.word = py::DropLast(s.word, 2);
    } else {
      s.word = py::DropLast(s.word, 2) + U"iqU";
    }
  }
}

void Step1(State& s) {
  Str& word = s.word;
  const Str& r1 = s.r1;
  const Str& r2 = s.r2;
  for (View suffix : kStep1) {
    if (!py::EndsWith(word, suffix)) continue;
    const long len = py::Len(suffix);
    if (suffix == U"eaux") {
      word = py::DropLast(word, 1);
      s.step1_success = true;
    } else if (OneOf(suffix, {U"euse", U"euses"})) {
      if (py::Contains(r2, suffix)) {
        word = py::DropLast(word, len);
        s.step1_success = true;
      } else if (py::Contains(r1, suffix)) {
        word = py::SuffixReplace(word, suffix, U"eux");
        s.step1_success = true;
      }
    } else if (OneOf(suffix, {U"ement", U"ements"}) && py::Contains(s.rv, suffix)) {
      word = py::DropLast(word, len);
      s.step1_success = true;
      if (py::Last(word, 2) == U"iv" && py::Contains(r2, U"iv")) {
        word = py::DropLast(word, 2);
        if (py::Last(word, 2) == U"at" && py::Contains(r2, U"at")) {
          word = py::DropLast(word, 2);
        }
      } else if (py::Last(word, 3) == U"eus") {
        if (py::Contains(r2, U"eus")) {
          word = py::DropLast(word, 3);
        } else if (py::Contains(r1, U"eus")) {
          word = py::DropLast(word, 1) + U"x";
        }
      } else if (OneOf(py::Last(word, 3), {U"abl", U"iqU"})) {
        if (py::Contains(r2, U"abl") || py::Contains(r2, U"iqU")) {
          word = py::DropLast(word, 3);
        }
      } else if (OneOf(py::Last(word, 3), {U"ièr", U"Ièr"})) {
        if (py::Contains(s.rv, U"ièr") || py::Contains(s.rv, U"Ièr")) {
          word = py::DropLast(word, 3) + U"i";
        }
      }
    } else if (suffix == U"amment" && py::Contains(s.rv, suffix)) {
      word = py::SuffixReplace(word, U"amment", U"ant");
      s.rv = py::SuffixReplace(s.rv, U"amment", U"ant");
      s.rv_ending_found = true;
    } else if (suffix == U"emment" && py::Contains(s.rv, suffix)) {
      word = py::SuffixReplace(word, U"emment", U"ent");
      s.rv_ending_found = true;
    } else if (OneOf(suffix, {U"ment", U"ments"}) && py::Contains(s.rv, suffix) &&
               !py::StartsWith(s.rv, suffix) && IsVowel(BeforeLast(s.rv, suffix))) {
      word = py::DropLast(word, len);
      s.rv = py::DropLast(s.rv, len);
      s.rv_ending_found = true;
    } else if (suffix == U"aux" && py::Contains(r1, suffix)) {
      word = py::DropLast(word, 2) + U"l";
      s.step1_success = true;
    } else if (OneOf(suffix, {U"issement", U"issements"}) && py::Contains(r1, suffix) &&
               !IsVowel(py::At(word, -len - 1))) {
      word = py::DropLast(word, len);
      s.step1_success = true;
    } else if (OneOf(suffix, {U"ance", U"iqUe", U"isme", U"able", U"iste", U"eux",
                              U"ances", U"iqUes", U"ismes", U"ables", U"istes"}) &&
               py::Contains(r2, suffix)) {
      word = py::DropLast(word, len);
      s.step1_success = true;
    } else if (OneOf(suffix, {U"atrice", U"ateur", U"ation", U"atrices", U"ateurs",
                              U"ations"}) &&
               py::Contains(r2, suffix)) {
      word = py::DropLast(word, len);
      s.step1_success = true;
      FixIc(s);
    } else if (OneOf(suffix, {U"logie", U"logies"}) && py::Contains(r2, suffix)) {
      word = py::SuffixReplace(word, suffix, U"log");
      s.step1_success = true;
    } else if (OneOf(suffix, {U"usion", U"ution", U"usions", U"utions"}) &&
               py::Contains(r2, suffix)) {
      word = py::SuffixReplace(word, suffix, U"u");
      s.step1_success = true;
    } else if (OneOf(suffix, {U"ence", U"ences"}) && py::Contains(r2, suffix)) {
      word = py::SuffixReplace(word, suffix, U"ent");
      s.step1_success = true;
    } else if (OneOf(suffix, {U"ité", U"ités"}) && py::Contains(r2, suffix)) {
      word = py::DropLast(word, len);
      s.step1_success = true;
      if (py::Last(word, 4) == U"abil") {
        if (py::Contains(r2, U"abil")) {
          word = py::DropLast(word, 4);
        } else {
          word = py::DropLast(word, 2) + U"l";
        }
      } else if (py::Last(word, 2) == U"ic") {
        FixIc(s);
      } else if (py::Last(word, 2) == U"iv") {
        if (py::Contains(r2, U"iv")) word = py::DropLast(word, 2);
      }
    } else if (OneOf(suffix, {U"if", U"ive", U"ifs", U"ives"}) && py::Contains(r2, suffix)) {
      word = py::DropLast(word, len);
      s.step1_success = true;
      if (py::Last(word, 2) == U"at" && py::Contains(r2, U"at")) {
        word = py::DropLast(word, 2);
        FixIc(s);
      }
    }
    break;
  }
}

void Step2(State& s) {
  Str& word = s.word;
  for (View suffix : kStep2a) {
    if (!py::EndsWith(word, suffix)) continue;
    if (py::Contains(s.rv, suffix) && py::Len(s.rv) > py::Len(suffix) &&
        !IsVowel(BeforeLast(s.rv, suffix))) {
      word = py::DropLast(word, py::Len(suffix));
      s.step2a_success = true;
    }
    break;
  }
  if (s.step2a_success) return;

  for (View suffix : kStep2b) {
    if (!py::EndsWith(s.rv, suffix)) continue;
    const long len = py::Len(suffix);
    if (suffix == U"ions" && py::Contains(s.r2, U"ions")) {
      word = py::DropLast(word, 4);
      s.step2b_success = true;
    } else if (OneOf(suffix, {U"eraIent", U"erions", U"èrent", U"erais", U"erait",
                              U"eriez", U"erons", U"eront", U"erai", U"eras", U"erez",
                              U"ées", U"era", U"iez", U"ée", U"és", U"er", U"ez",
                              U"é"})) {
      word = py::DropLast(word, len);
      s.step2b_success = true;
    } else if (OneOf(suffix, {U"assions", U"assent", U"assiez", U"aIent", U"antes",
                              U"asses", U"âmes", U"âtes", U"ante", U"ants", U"asse",
                              U"ais", U"ait", U"ant", U"ât", U"ai", U"as", U"a"})) {
      word = py::DropLast(word, len);
      s.rv = py::DropLast(s.rv, len);
      s.step2b_success = true;
      if (py::EndsWith(s.rv, U"e")) word = py::DropLast(word, 1);
    }
    break;
  }
}

void Step4(State& s) {
  Str& word = s.word;
  if (py::Len(word) >= 2 && py::At(word, -1) == U's' &&
      !py::In(py::At(word, -2), U"aiouès")) {
    word = py::DropLast(word, 1);
  }
  for (View suffix : kStep4) {
    if (!py::EndsWith(word, suffix)) continue;
    if (!py::Contains(s.rv, suffix)) continue;
    if (suffix == U"ion" && py::Contains(s.r2, suffix) && py::In(py::At(s.rv, -4), U"st")) {
      word = py::DropLast(word, 3);
    } else if (OneOf(suffix, {U"ier", U"ière", U"Ier", U"Ière"})) {
      word = py::SuffixReplace(word, suffix, U"i");
    } else if (suffix == U"e") {
      word = py::DropLast(word, 1);
    } else if (suffix == U"ë" && py::Slice(word, -3, -1) == U"gu") {
      word = py::DropLast(word, 1);
    }
    break;
  }
}

}  // namespace

Str StemFrench(Str word) {
  for (long i = 1; i < py::Len(word); ++i) {
    if (word[i - 1] == U'q' && word[i] == U'u') py::SetAt(word, i, U'U');
  }
  for (long i = 1; i < py::Len(word) - 1; ++i) {
    if (IsVowel(word[i - 1]) && IsVowel(word[i + 1])) {
      if (word[i] == U'u') {
        py::SetAt(word, i, U'U');
      } else if (word[i] == U'i') {
        py::SetAt(word, i, U'I');
      }
    }
    if (IsVowel(word[i - 1]) || IsVowel(word[i + 1])) {
      if (word[i] == U'y') py::SetAt(word, i, U'Y');
    }
  }

  State s;
  s.word = word;
  StandardRegions(word, kVowels, s.r1, s.r2);
  s.rv = FrenchRv(word);

  Step1(s);
  if (!s.step1_success || s.rv_ending_found) Step2(s);

  if (s.step1_success || s.step2a_success || s.step2b_success) {
    if (py::At(s.word, -1) == U'Y') {
      s.word = py::DropLast(s.word, 1) + U"i";
    } else if (py::At(s.word, -1) == U'ç') {
      s.word = py::DropLast(s.word, 1) + U"c";
    }
  } else {
    Step4(s);
  }

  Str& out = s.word;
  for (View ending : {View(U"enn"), View(U"onn"), View(U"ett"), View(U"ell"),
                      View(U"eill")}) {
    if (py::EndsWith(out, ending)) {
      out = py::DropLast(out, 1);
      break;
    }
  }

  for (long i = 1; i < py::Len(out); ++i) {
    if (!IsVowel(py::At(out, -i))) continue;
    if (i != 1 && (py::At(out, -i) == U'é' || py::At(out, -i) == U'è')) {
      out = py::DropLast(out, i) + U"e" + py::From(out, -i + 1);
    }
    break;
  }

  for (char32_t& c : out) {
    if (c == U'I') {
      c = U'i';
    } else if (c == U'U') {
      c = U'u';
    } else if (c == U'Y') {
      c = U'y';
    }
  }
  return out;
}

}  // namespace explmine::snowball
