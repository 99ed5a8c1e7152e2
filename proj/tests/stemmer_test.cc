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

#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "explmine/stemmer.h"

namespace explmine {
namespace {

struct Vector {
  std::string word;
  std::string stem;
};

// tests/data/stem_<lang>.tsv holds "word\tstem" rows produced by NLTK's
// SnowballStemmer over frequent words of each language.
std::vector<Vector> LoadVectors(const std::string& lang) {
  std::ifstream in(std::string(EXPLMINE_TEST_DATA) + "/stem_" + lang + ".tsv");
  REQUIRE(in);
  std::vector<Vector> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto tab = line.find('\t');
    REQUIRE(tab != std::string::npos);
    out.push_back({line.substr(0, tab), line.substr(tab + 1)});
  }
  return out;
}

void CheckLanguage(const std::string& lang) {
  const auto vectors = LoadVectors(lang);
  REQUIRE(vectors.size() > 7000);
  std::size_t mismatches = 0;
  for (const Vector& v : vectors) {
    const std::string got = Stem(v.word, lang);
    if (got != v.stem) {
      if (++mismatches <= 20) {
        MESSAGE(lang << ": " << v.word << " -> " << got << " (expected " << v.stem << ")");
      }
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("English stems agree with the reference Snowball output") { CheckLanguage("en"); }
TEST_CASE("German stems agree with the reference Snowball output") { CheckLanguage("de"); }
TEST_CASE("French stems agree with the reference Snowball output") { CheckLanguage("fr"); }

TEST_CASE("stem examples") {
  CHECK(Stem("Pilgrims", "en") == "pilgrim");
  CHECK(Stem("承包商", "zh") == "承包商");
  CHECK(Stem("", "en") == "");
  CHECK(Stem("Pilgerreise", "de") == Stem("Pilgerreisen", "de"));
  CHECK(Stem("Straße", "de") == "strass");
}

TEST_CASE("unsupported languages are lowercased only") {
  CHECK(Stem("Running", "xx") == "running");
  CHECK(Stem("ÉCOLE", "zh") == "école");
  CHECK_FALSE(HasStemmer("zh"));
  CHECK(HasStemmer("english"));
}

TEST_CASE("stem_phrase") {
  const std::vector<std::string> super_bowl = {"Super", "Bowl"};
  const std::vector<std::string> bunyan = {"John", "Bunyan"};
  CHECK(StemPhrase(super_bowl, "en") == "super bowl");
  CHECK(StemPhrase(std::vector<std::string>{}, "en") == "");
  CHECK(StemPhrase(bunyan, "en") == "john bunyan");
  CHECK(StemPhrase(bunyan, "de") == "john bunyan");
}

TEST_CASE("identity languages are idempotent; Snowball is not") {
  for (const char* w : {"承包商", "Ärger", "Super"}) {
    CHECK(Stem(Stem(w, "zh"), "zh") == Stem(w, "zh"));
  }
  // Snowball re-applies suffix rules to its own output.
  CHECK(Stem("only", "en") == "onli");
  CHECK(Stem("onli", "en") == "on");
}

}  // namespace
}  // namespace explmine
