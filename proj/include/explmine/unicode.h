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

#ifndef EXPLMINE_UNICODE_H_
#define EXPLMINE_UNICODE_H_

#include <string>
#include <string_view>

namespace explmine {

// Decodes UTF-8. Malformed sequences decode to U+FFFD.
std::u32string DecodeUtf8(std::string_view text);
std::string EncodeUtf8(std::u32string_view text);

// Full Unicode lowercase mapping (root locale).
std::string ToLower(std::string_view text);

// True for code points in general categories Pc, Pd, Ps, Pe, Pi, Pf, Po.
bool IsPunctuationChar(char32_t c);

}  // namespace explmine

#endif  // EXPLMINE_UNICODE_H_
