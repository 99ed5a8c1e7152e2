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

#ifndef EXPLMINE_ERROR_H_
#define EXPLMINE_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace explmine {

// Fatal input or configuration problem. The message is meant for the user.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-fatal problems found while reading inputs. Every warning is counted;
// only the first kMaxKept messages are retained.
class Diagnostics {
 public:
  static constexpr std::size_t kMaxKept = 1000;

  void warn(std::string message) {
    ++count_;
    if (messages_.size() < kMaxKept) messages_.push_back(std::move(message));
  }

  std::size_t count() const { return count_; }
  const std::vector<std::string>& messages() const { return messages_; }

 private:
  std::size_t count_ = 0;
  std::vector<std::string> messages_;
};

}  // namespace explmine

#endif  // EXPLMINE_ERROR_H_
