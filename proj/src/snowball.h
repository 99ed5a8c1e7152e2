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

#ifndef EXPLMINE_SRC_SNOWBALL_H_
#define EXPLMINE_SRC_SNOWBALL_H_

#include <string>
#include <string_view>

namespace explmine::snowball {

// Inputs must already be lowercased.
std::u32string StemEnglish(std::u32string word);
std::u32string StemGerman(std::u32string word);
std::u32string StemFrench(std::u32string word);

// R1: region after the first non-vowel following a vowel; R2: the same rule
// applied inside R1.
void StandardRegions(std::u32string_view word, std::u32string_view vowels,
                     std::u32string& r1, std::u32string& r2);

}  // namespace explmine::snowball

#endif  // EXPLMINE_SRC_SNOWBALL_H_
