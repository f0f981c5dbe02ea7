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

#include "deontic/ingest/html.h"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "deontic/error.h"
#include "deontic/io.h"
#include "deontic/text.h"

namespace deontic::ingest {

namespace {

void AppendUtf8(std::string &out, std::uint32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

const std::unordered_map<std::string, std::uint32_t> &NamedEntities() {
  static const auto *table = new std::unordered_map<std::string, std::uint32_t>{
      {"amp", '&'},      {"lt", '<'},        {"gt", '>'},
      {"quot", '"'},     {"apos", '\''},     {"nbsp", 0xA0},
      {"ensp", ' '},     {"emsp", ' '},      {"thinsp", ' '},
      {"lsquo", 0x2018}, {"rsquo", 0x2019},  {"ldquo", 0x201C},
      {"rdquo", 0x201D}, {"ndash", 0x2013},  {"mdash", 0x2014},
      {"sect", 0xA7},    {"para", 0xB6},     {"hellip", 0x2026},
      {"bull", 0x2022},  {"middot", 0xB7},   {"copy", 0xA9},
      {"reg", 0xAE},     {"trade", 0x2122},  {"frac12", 0xBD},
  };
  return *table;
}

// Inline elements do not separate words; every other tag does.
bool IsInline(const std::string &tag) {
  static const auto *inline_tags = new std::unordered_set<std::string>{
      "a",    "b",   "i",     "u",      "em",  "strong", "span", "font",
      "sup",  "sub", "small", "big",    "abbr", "code",  "s",    "strike",
      "ins",  "del", "mark",  "label",
  };
  return inline_tags->contains(tag);
}

struct Element {
  std::string tag;  // "p" or "div"
  int parent = -1;  // element id of the enclosing p/div
  std::string raw_text;
};

class ProvisionScanner {
 public:
  explicit ProvisionScanner(std::string_view html) : html_(html) {}

  std::vector<Element> Run() {
    while (pos_ < html_.size()) {
      if (html_[pos_] == '<') {
        ScanMarkup();
      } else {
        std::size_t next = html_.find('<', pos_);
        if (next == std::string_view::npos) next = html_.size();
        AppendText(DecodeEntities(html_.substr(pos_, next - pos_)));
        pos_ = next;
      }
    }
    return std::move(elements_);
  }

 private:
  void AppendText(std::string_view s) {
    if (!open_.empty()) elements_[open_.back()].raw_text += s;
  }

  void SkipPast(std::string_view terminator) {
    std::size_t end = html_.find(terminator, pos_);
    pos_ = end == std::string_view::npos ? html_.size()
                                         : end + terminator.size();
  }

  void SkipRawText(const std::string &tag) {
    // Case-insensitive search for "</tag".
    std::string closing = "</" + tag;
    while (pos_ < html_.size()) {
      std::size_t lt = html_.find('<', pos_);
      if (lt == std::string_view::npos) {
        pos_ = html_.size();
        return;
      }
      if (text::EqualsIgnoreCase(html_.substr(lt, closing.size()), closing)) {
        pos_ = lt;
        SkipPast(">");
        return;
      }
      pos_ = lt + 1;
    }
  }

  void ScanMarkup() {
    if (html_.substr(pos_, 4) == "<!--") {
      pos_ += 4;
      SkipPast("-->");
      return;
    }
    std::size_t i = pos_ + 1;
    if (i < html_.size() && (html_[i] == '!' || html_[i] == '?')) {
      pos_ = i;
      SkipPast(">");
      return;
    }
    bool closing = i < html_.size() && html_[i] == '/';
    if (closing) ++i;
    std::size_t name_begin = i;
    while (i < html_.size() && (text::IsAlnum(html_[i]) || html_[i] == ':')) {
      ++i;
    }
    if (i == name_begin) {
      // A bare '<' in text.
      AppendText("<");
      ++pos_;
      return;
    }
    std::string tag = text::Lower(html_.substr(name_begin, i - name_begin));
    // Skip attributes, honouring quotes.
    char quote = 0;
    while (i < html_.size()) {
      char c = html_[i];
      if (quote) {
        if (c == quote) quote = 0;
      } else if (c == '"' || c == '\'') {
        quote = c;
      } else if (c == '>') {
        break;
      }
      ++i;
    }
    bool self_closing = i > 0 && i < html_.size() && html_[i - 1] == '/';
    pos_ = i < html_.size() ? i + 1 : html_.size();

    if (!closing && (tag == "script" || tag == "style")) {
      if (!self_closing) SkipRawText(tag);
      return;
    }
    if (tag == "p" || tag == "div") {
      if (closing) {
        Close(tag);
      } else {
        Open(tag);
        if (self_closing) Close(tag);
      }
      return;
    }
    if (!IsInline(tag)) AppendText(" ");
  }

  void Open(const std::string &tag) {
    // A paragraph cannot contain block content; any open <p> ends here.
    if (!open_.empty() && elements_[open_.back()].tag == "p") Close("p");
    Element e;
    e.tag = tag;
    e.parent = open_.empty() ? -1 : open_.back();
    elements_.push_back(std::move(e));
    open_.push_back(static_cast<int>(elements_.size()) - 1);
    // Separate the parent's text before and after this child.
    if (elements_[open_.back()].parent >= 0) {
      elements_[elements_[open_.back()].parent].raw_text += ' ';
    }
  }

  void Close(const std::string &tag) {
    for (std::size_t k = open_.size(); k-- > 0;) {
      if (elements_[open_[k]].tag == tag) {
        open_.resize(k);
        if (!open_.empty()) elements_[open_.back()].raw_text += ' ';
        return;
      }
    }
    // Stray end tag.
  }

  std::string_view html_;
  std::size_t pos_ = 0;
  std::vector<Element> elements_;
  std::vector<int> open_;
};

}  // namespace

std::string DecodeEntities(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '&') {
      out.push_back(s[i++]);
      continue;
    }
    std::size_t semi = s.find(';', i + 1);
    if (semi == std::string_view::npos || semi - i > 12) {
      out.push_back(s[i++]);
      continue;
    }
    std::string_view name = s.substr(i + 1, semi - i - 1);
    std::uint32_t cp = 0;
    bool ok = false;
    if (!name.empty() && name[0] == '#') {
      bool hex = name.size() > 1 && (name[1] == 'x' || name[1] == 'X');
      std::string_view digits = name.substr(hex ? 2 : 1);
      ok = !digits.empty();
      for (char c : digits) {
        int v;
        if (text::IsDigit(c)) {
          v = c - '0';
        } else if (hex && c >= 'a' && c <= 'f') {
          v = c - 'a' + 10;
        } else if (hex && c >= 'A' && c <= 'F') {
          v = c - 'A' + 10;
        } else {
          ok = false;
          break;
        }
        cp = cp * (hex ? 16 : 10) + static_cast<std::uint32_t>(v);
        if (cp > 0x10FFFF) {
          ok = false;
          break;
        }
      }
    } else {
      auto it = NamedEntities().find(std::string(name));
      if (it != NamedEntities().end()) {
        cp = it->second;
        ok = true;
      }
    }
    if (!ok) {
      out.push_back(s[i++]);
      continue;
    }
    // Typographic spaces collapse like ordinary whitespace.
    if (cp >= 0x2000 && cp <= 0x200A) cp = ' ';
    AppendUtf8(out, cp);
    i = semi + 1;
  }
  return out;
}

std::vector<Provision> ExtractProvisions(std::string_view html,
                                         const std::string &contract_id) {
  std::vector<Element> elements = ProvisionScanner(html).Run();

  std::vector<int> emitted_index(elements.size(), -1);
  std::vector<int> depth_of(elements.size(), 0);
  std::vector<Provision> provisions;
  for (std::size_t id = 0; id < elements.size(); ++id) {
    // Nearest emitted ancestor. Parents precede children, so theirs is known.
    int ancestor = elements[id].parent;
    while (ancestor >= 0 && emitted_index[ancestor] < 0) {
      ancestor = elements[ancestor].parent;
    }
    std::string normalized = text::CollapseWhitespace(elements[id].raw_text);
    if (normalized.empty()) continue;
    Provision p;
    p.contract_id = contract_id;
    p.index = static_cast<int>(provisions.size());
    p.text = std::move(normalized);
    if (ancestor >= 0) {
      p.parent_index = emitted_index[ancestor];
      p.depth = depth_of[ancestor] + 1;
    }
    emitted_index[id] = p.index;
    depth_of[id] = p.depth;
    provisions.push_back(std::move(p));
  }
  return provisions;
}

std::vector<Provision> ExtractProvisionsFromFile(
    const std::filesystem::path &path, const std::string &contract_id) {
  std::string html;
  try {
    html = io::ReadFile(path);
  } catch (const Error &) {
    throw Error(ErrorKind::kIngest, "ingest",
                "unreadable document '" + path.string() + "'");
  }
  return ExtractProvisions(html, contract_id);
}

}  // namespace deontic::ingest
