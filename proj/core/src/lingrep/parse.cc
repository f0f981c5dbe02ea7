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

#include "deontic/lingrep/parse.h"

#include <charconv>

#include "deontic/error.h"
#include "deontic/text.h"

namespace deontic::lingrep {

using nlohmann::json;
using nlohmann::ordered_json;

int ParsedSentence::Root() const {
  for (const Token &t : tokens) {
    if (t.head == t.index) return t.index;
  }
  return -1;
}

std::vector<int> ParsedSentence::Children(int i) const {
  std::vector<int> children;
  for (const Token &t : tokens) {
    if (t.head == i && t.index != i) children.push_back(t.index);
  }
  return children;
}

std::vector<std::string> ParsedSentence::Surfaces() const {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const Token &t : tokens) out.push_back(t.surface);
  return out;
}

void ValidateTree(const ParsedSentence &s) {
  auto fail = [&](const std::string &what) {
    throw Error(ErrorKind::kStructural, "lingrep",
                "sentence '" + s.sentence_id + "': " + what);
  };
  const int n = s.size();
  if (n == 0) fail("no tokens");
  int roots = 0;
  for (const Token &t : s.tokens) {
    if (t.head < 0 || t.head >= n) {
      fail("token " + std::to_string(t.index + 1) + " has head out of range");
    }
    if (t.head == t.index) ++roots;
  }
  if (roots != 1) fail(std::to_string(roots) + " roots, expected 1");
  for (const Token &t : s.tokens) {
    int cursor = t.index;
    for (int steps = 0; s.tokens[cursor].head != cursor; ++steps) {
      if (steps > n) fail("cycle through token " + std::to_string(t.index + 1));
      cursor = s.tokens[cursor].head;
    }
  }
}

const LabelMap &DefaultLabelMap() {
  static const auto *map = new LabelMap{
      {"root", "ROOT"},         {"nsubj:pass", "nsubjpass"},
      {"obj", "dobj"},          {"aux:pass", "auxpass"},
      {"csubj:pass", "csubjpass"}, {"obl:agent", "agent"},
  };
  return *map;
}

void NormalizeLabels(ParsedSentence &sentence, const LabelMap &map) {
  for (Token &t : sentence.tokens) {
    auto it = map.find(t.deprel);
    if (it != map.end()) t.deprel = it->second;
  }
}

namespace {

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t b = 0;
  for (;;) {
    std::size_t tab = line.find('\t', b);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(b));
      return fields;
    }
    fields.push_back(line.substr(b, tab - b));
    b = tab + 1;
  }
}

std::optional<int> ToInt(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string_view CommentValue(std::string_view comment, std::string_view key) {
  std::string_view body = text::Trim(comment.substr(1));
  if (!text::StartsWith(body, key)) return {};
  body = text::Trim(body.substr(key.size()));
  if (body.empty() || body.front() != '=') return {};
  return text::Trim(body.substr(1));
}

struct PendingSentence {
  ParsedSentence sentence;
  std::vector<int> raw_heads;  // 1-based, 0 = root
  int first_line = 0;
};

}  // namespace

std::vector<ParsedSentence> ReadConllu(std::istream &in,
                                       std::string_view source) {
  std::vector<ParsedSentence> out;
  PendingSentence pending;
  bool active = false;
  int line_no = 0;

  auto parse_error = [&](const std::string &what) {
    throw Error(ErrorKind::kParse, "lingrep",
                std::string(source) + ":" + std::to_string(line_no) + ": " +
                    what);
  };

  auto flush = [&]() {
    if (!active) return;
    active = false;
    ParsedSentence &s = pending.sentence;
    if (s.tokens.empty()) return;  // comments only
    if (s.sentence_id.empty()) {
      s.sentence_id = std::string(source) + "#" + std::to_string(out.size());
    }
    const int n = s.size();
    for (int i = 0; i < n; ++i) {
      int h = pending.raw_heads[i];
      if (h < 0 || h > n) {
        throw Error(ErrorKind::kStructural, "lingrep",
                    "sentence '" + s.sentence_id + "': token " +
                        std::to_string(i + 1) + " has HEAD " +
                        std::to_string(h) + " outside 0.." +
                        std::to_string(n));
      }
      s.tokens[i].head = h == 0 ? i : h - 1;
    }
    int zero_heads = 0;
    for (int h : pending.raw_heads) zero_heads += h == 0;
    if (zero_heads != 1) {
      throw Error(ErrorKind::kStructural, "lingrep",
                  "sentence '" + s.sentence_id + "': " +
                      std::to_string(zero_heads) + " tokens with HEAD 0");
    }
    ValidateTree(s);
    out.push_back(std::move(s));
    pending = PendingSentence{};
  };

  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (text::Trim(line).empty()) {
      flush();
      continue;
    }
    if (!active) {
      active = true;
      pending.first_line = line_no;
    }
    if (line.front() == '#') {
      if (auto id = CommentValue(line, "sent_id"); !id.empty()) {
        pending.sentence.sentence_id = std::string(id);
      } else if (auto t = CommentValue(line, "text"); !t.empty()) {
        pending.sentence.text = std::string(t);
      }
      continue;
    }
    std::vector<std::string_view> fields = SplitTabs(line);
    if (fields.size() < 8) {
      parse_error("expected 10 tab-separated columns, got " +
                  std::to_string(fields.size()));
    }
    std::string_view id = fields[0];
    if (id.find('-') != std::string_view::npos ||
        id.find('.') != std::string_view::npos) {
      continue;  // multiword token range or empty node
    }
    auto index = ToInt(id);
    if (!index) parse_error("bad ID '" + std::string(id) + "'");
    int expected = pending.sentence.size() + 1;
    if (*index != expected) {
      parse_error("ID " + std::to_string(*index) + " out of sequence, expected " +
                  std::to_string(expected));
    }
    auto head = ToInt(fields[6]);
    if (!head) parse_error("bad HEAD '" + std::string(fields[6]) + "'");
    if (fields[1].empty()) parse_error("empty FORM");
    Token t;
    t.index = *index - 1;
    t.surface = std::string(fields[1]);
    t.pos = std::string(fields[3]);
    t.head = 0;
    t.deprel = std::string(fields[7]);
    pending.sentence.tokens.push_back(std::move(t));
    pending.raw_heads.push_back(*head);
  }
  flush();
  return out;
}

void WriteConllu(std::ostream &out,
                 const std::vector<ParsedSentence> &sentences) {
  for (const ParsedSentence &s : sentences) {
    out << "# sent_id = " << s.sentence_id << '\n';
    if (!s.text.empty()) out << "# text = " << s.text << '\n';
    for (const Token &t : s.tokens) {
      int head = t.head == t.index ? 0 : t.head + 1;
      out << t.index + 1 << '\t' << t.surface << "\t_\t"
          << (t.pos.empty() ? "_" : t.pos) << "\t_\t_\t" << head << '\t'
          << (t.deprel.empty() ? "_" : t.deprel) << "\t_\t_\n";
    }
    out << '\n';
  }
}

ParsedSentence AlignTokens(std::string_view sentence_text,
                           ParsedSentence parsed) {
  std::size_t pos = 0;
  for (Token &t : parsed.tokens) {
    while (pos < sentence_text.size() && text::IsSpace(sentence_text[pos])) {
      ++pos;
    }
    std::size_t begin = pos;
    for (std::size_t k = 0; k < t.surface.size(); ++k, ++pos) {
      if (pos >= sentence_text.size() || sentence_text[pos] != t.surface[k]) {
        throw Error(ErrorKind::kAlignment, "lingrep",
                    "sentence '" + parsed.sentence_id + "': token " +
                        std::to_string(t.index + 1) + " '" + t.surface +
                        "' diverges from text at offset " +
                        std::to_string(pos));
      }
    }
    t.char_span = CharSpan{begin, pos};
  }
  while (pos < sentence_text.size() && text::IsSpace(sentence_text[pos])) {
    ++pos;
  }
  if (pos != sentence_text.size()) {
    throw Error(ErrorKind::kAlignment, "lingrep",
                "sentence '" + parsed.sentence_id +
                    "': text not covered by tokens from offset " +
                    std::to_string(pos));
  }
  parsed.text = std::string(sentence_text);
  return parsed;
}

ordered_json ToJson(const ParsedSentence &s) {
  ordered_json j;
  j["sentence_id"] = s.sentence_id;
  j["text"] = s.text;
  ordered_json tokens = ordered_json::array();
  for (const Token &t : s.tokens) {
    ordered_json tj;
    tj["index"] = t.index;
    tj["surface"] = t.surface;
    tj["pos"] = t.pos;
    tj["head"] = t.head;
    tj["deprel"] = t.deprel;
    tj["char_span"] = t.char_span ? ordered_json{t.char_span->begin,
                                                  t.char_span->end}
                                  : ordered_json(nullptr);
    tokens.push_back(std::move(tj));
  }
  j["tokens"] = std::move(tokens);
  j["complete"] = s.complete ? ordered_json(*s.complete) : ordered_json(nullptr);
  return j;
}

ParsedSentence ParsedSentenceFromJson(const json &j) {
  ParsedSentence s;
  try {
    s.sentence_id = j.at("sentence_id").get<std::string>();
    s.text = j.value("text", "");
    for (const json &tj : j.at("tokens")) {
      Token t;
      t.index = tj.at("index").get<int>();
      t.surface = tj.at("surface").get<std::string>();
      t.pos = tj.value("pos", "");
      t.head = tj.at("head").get<int>();
      t.deprel = tj.value("deprel", "");
      if (tj.contains("char_span") && !tj["char_span"].is_null()) {
        auto span = tj["char_span"].get<std::vector<std::size_t>>();
        if (span.size() == 2) t.char_span = CharSpan{span[0], span[1]};
      }
      s.tokens.push_back(std::move(t));
    }
    if (j.contains("complete") && !j["complete"].is_null()) {
      s.complete = j["complete"].get<bool>();
    }
  } catch (const json::exception &e) {
    throw Error(ErrorKind::kParse, "lingrep",
                std::string("parsed sentence: ") + e.what());
  }
  ValidateTree(s);
  return s;
}

}  // namespace deontic::lingrep
