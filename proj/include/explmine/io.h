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

#ifndef EXPLMINE_IO_H_
#define EXPLMINE_IO_H_

#include <fstream>
#include <string>

namespace explmine {

// Both throw Error naming the path when the file cannot be opened.
std::ifstream OpenInput(const std::string& path);
std::ofstream OpenOutput(const std::string& path);

// Throws Error naming the path if the stream went bad while writing.
void CloseOutput(std::ofstream& out, const std::string& path);

std::string ReadFile(const std::string& path);

}  // namespace explmine

#endif  // EXPLMINE_IO_H_
