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

#include "deontic/io.h"

#include <openssl/evp.h>

#include <fstream>
#include <iterator>
#include <sstream>

#include "deontic/error.h"
#include "deontic/text.h"

namespace deontic::io {

std::string ReadFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::kIngest, "io",
                "cannot read '" + path.string() + "'");
  }
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw Error(ErrorKind::kIngest, "io",
                "read failed for '" + path.string() + "'");
  }
  return content;
}

void WriteFile(const std::filesystem::path &path, std::string_view content) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorKind::kIngest, "io",
                "cannot write '" + path.string() + "'");
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

std::vector<Json> ReadJsonLines(std::istream &in, std::string_view source) {
  std::vector<Json> values;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::Trim(line).empty()) continue;
    try {
      values.push_back(Json::parse(line));
    } catch (const Json::parse_error &e) {
      throw Error(ErrorKind::kParse, "io",
                  std::string(source) + ":" + std::to_string(line_no) + ": " +
                      e.what());
    }
  }
  return values;
}

std::vector<Json> ReadJsonLinesFile(const std::filesystem::path &path) {
  std::istringstream in(ReadFile(path));
  return ReadJsonLines(in, path.string());
}

void WriteJsonLine(std::ostream &out, const nlohmann::ordered_json &value) {
  out << value.dump(-1, ' ', false, Json::error_handler_t::replace) << '\n';
}

void WriteJsonLinesFile(const std::filesystem::path &path,
                        const std::vector<nlohmann::ordered_json> &values) {
  std::ostringstream out;
  for (const auto &v : values) WriteJsonLine(out, v);
  WriteFile(path, out.str());
}

std::string Sha256Hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(length * 2);
  for (unsigned int i = 0; i < length; ++i) {
    hex.push_back(kHex[digest[i] >> 4]);
    hex.push_back(kHex[digest[i] & 0xF]);
  }
  return hex;
}

}  // namespace deontic::io
