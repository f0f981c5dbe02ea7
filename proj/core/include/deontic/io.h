// Copyright 2026 The Deontic Toolkit Authors.
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

#ifndef DEONTIC_IO_H_
#define DEONTIC_IO_H_

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace deontic::io {

using Json = nlohmann::json;

// Reads a whole file. Throws Error(kIngest) naming the path on failure.
std::string ReadFile(const std::filesystem::path &path);

void WriteFile(const std::filesystem::path &path, std::string_view content);

// Line-delimited JSON. Blank lines are skipped; a malformed line throws
// Error(kParse) carrying the 1-based line number.
std::vector<Json> ReadJsonLines(std::istream &in, std::string_view source);
std::vector<Json> ReadJsonLinesFile(const std::filesystem::path &path);

// One compact object per line, keys in insertion order.
void WriteJsonLine(std::ostream &out, const nlohmann::ordered_json &value);
void WriteJsonLinesFile(const std::filesystem::path &path,
                        const std::vector<nlohmann::ordered_json> &values);

// Lowercase hex SHA-256.
std::string Sha256Hex(std::string_view data);

}  // namespace deontic::io

#endif  // DEONTIC_IO_H_
