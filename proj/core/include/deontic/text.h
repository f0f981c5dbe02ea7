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

// Byte-level text helpers. Case folding is ASCII-only (C locale semantics);
// bytes >= 0x80 pass through untouched so UTF-8 text is never corrupted.

#ifndef DEONTIC_TEXT_H_
#define DEONTIC_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace deontic::text {

inline bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}
inline bool IsUpper(char c) { return c >= 'A' && c <= 'Z'; }
inline bool IsLower(char c) { return c >= 'a' && c <= 'z'; }
inline bool IsAlpha(char c) { return IsUpper(c) || IsLower(c); }
inline bool IsDigit(char c) { return c >= '0' && c <= '9'; }
inline bool IsAlnum(char c) { return IsAlpha(c) || IsDigit(c); }
inline char ToLower(char c) { return IsUpper(c) ? char(c - 'A' + 'a') : c; }
inline char ToUpper(char c) { return IsLower(c) ? char(c - 'a' + 'A') : c; }

// Word characters for boundary checks: ASCII letters, digits, underscore.
inline bool IsWordChar(char c) { return IsAlnum(c) || c == '_'; }

std::string Lower(std::string_view s);
std::string Upper(std::string_view s);
bool EqualsIgnoreCase(std::string_view a, std::string_view b);

std::string_view Trim(std::string_view s);

// Replaces every run of whitespace (including U+00A0) with a single space
// and trims both ends.
std::string CollapseWhitespace(std::string_view s);

// Splits on runs of ASCII whitespace.
std::vector<std::string> SplitWords(std::string_view s);

std::string Join(const std::vector<std::string> &parts, std::string_view sep);

bool StartsWith(std::string_view s, std::string_view prefix);
bool EndsWith(std::string_view s, std::string_view suffix);

// Case-insensitive search for `needle` in `haystack` where the match is not
// preceded or followed by a word character. Returns npos if absent.
std::size_t FindWord(std::string_view haystack, std::string_view needle,
                     std::size_t from = 0);

inline bool ContainsWord(std::string_view haystack, std::string_view needle) {
  return FindWord(haystack, needle) != std::string_view::npos;
}

// Case-insensitive substring search.
bool ContainsIgnoreCase(std::string_view haystack, std::string_view needle);

}  // namespace deontic::text

#endif  // DEONTIC_TEXT_H_
