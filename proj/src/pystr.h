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

// Sequence helpers with Python slice/index semantics. The stemmers reproduce
// the NLTK Snowball implementations, whose region bookkeeping relies on
// negative indexes and clamped slices.

#ifndef EXPLMINE_SRC_PYSTR_H_
#define EXPLMINE_SRC_PYSTR_H_

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>

namespace explmine::py {

using Str = std::u32string;
using View = std::u32string_view;

inline long Len(View s) { return static_cast<long>(s.size()); }

// s[start:stop] with Python clamping of negative and out-of-range bounds.
inline Str Slice(View s, long start, long stop) {
  const long n = Len(s);
  if (start < 0) start = std::max(0L, start + n);
  if (stop < 0) stop = std::max(0L, stop + n);
  start = std::min(start, n);
  stop = std::min(stop, n);
  if (stop <= start) return Str();
  return Str(s.substr(start, stop - start));
}

// s[start:]
inline Str From(View s, long start) { return Slice(s, start, Len(s)); }

// s[:-n] for n > 0.
inline Str DropLast(View s, long n) { return Slice(s, 0, -n); }

// s[-n:]
inline Str Last(View s, long n) { return Slice(s, -n, Len(s)); }

// s[i] with negative wrap-around. Out-of-range yields 0, which never matches
// a letter set.
inline char32_t At(View s, long i) {
  const long n = Len(s);
  if (i < 0) i += n;
  if (i < 0 || i >= n) return 0;
  return s[static_cast<std::size_t>(i)];
}

inline bool EndsWith(View s, View suffix) { return s.ends_with(suffix); }
inline bool StartsWith(View s, View prefix) { return s.starts_with(prefix); }
inline bool Contains(View s, View sub) { return s.find(sub) != View::npos; }
inline bool In(char32_t c, View set) { return c != 0 && set.find(c) != View::npos; }

// NLTK's suffix_replace: original[:-len(old)] + new.
inline Str SuffixReplace(View original, View old, View replacement) {
  return DropLast(original, Len(old)) + Str(replacement);
}

inline Str Concat(View a, View b) { return Str(a) + Str(b); }

inline void ReplaceAll(Str& s, char32_t from, View to) {
  Str out;
  out.reserve(s.size());
  for (char32_t c : s) {
    if (c == from) {
      out += to;
    } else {
      out.push_back(c);
    }
  }
  s = std::move(out);
}

inline void SetAt(Str& s, long i, char32_t c) { s[static_cast<std::size_t>(i)] = c; }

}  // namespace explmine::py

#endif  // EXPLMINE_SRC_PYSTR_H_
