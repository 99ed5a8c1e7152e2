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

#ifndef EXPLMINE_STEMMER_H_
#define EXPLMINE_STEMMER_H_

#include <span>
#include <string>
#include <string_view>

namespace explmine {

// Lowercases, then applies the Snowball stemmer for English, German or
// French ("en"/"english", "de"/"german", "fr"/"french"). Other languages,
// Chinese included, are only lowercased.
std::string Stem(std::string_view token, std::string_view lang);

// Per-token stems joined by single spaces.
std::string StemPhrase(std::span<const std::string> tokens, std::string_view lang);

bool HasStemmer(std::string_view lang);

}  // namespace explmine

#endif  // EXPLMINE_STEMMER_H_
