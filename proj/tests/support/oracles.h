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

// Brute-force reference implementations used to check the library. They
// work on plain strings and enumerate definitions directly, sharing no code
// with the implementations under test.

#ifndef DEONTIC_TESTS_SUPPORT_ORACLES_H_
#define DEONTIC_TESTS_SUPPORT_ORACLES_H_

#include <array>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace deontic::oracle {

inline const std::vector<std::string> &ClassNames() {
  static const std::vector<std::string> names = {"Obl", "Ent",  "Pro", "Per",
                                                 "Nobl", "Nent", "None"};
  return names;
}

inline const std::vector<std::string> &SpanSuffixes() {
  static const std::vector<std::string> s = {"OBL", "ENT", "PRO",
                                             "PER", "NOBL", "NENT"};
  return s;
}

struct Tally {
  long long tp = 0, fp = 0, fn = 0;
};

struct Prf {
  double p = 0, r = 0, f = 0;
};

inline Prf ScoreOf(const Tally &t) {
  Prf s;
  if (t.tp + t.fp > 0) s.p = double(t.tp) / double(t.tp + t.fp);
  if (t.tp + t.fn > 0) s.r = double(t.tp) / double(t.tp + t.fn);
  if (s.p + s.r > 0) s.f = 2 * s.p * s.r / (s.p + s.r);
  return s;
}

struct Report {
  std::vector<Tally> per_class;  // one per class in name order
  std::vector<int> macro_classes;
  Tally micro;
  Prf macro, micro_scores;
  double accuracy = 0;
};

inline void Summarize(Report &r) {
  Prf sum;
  for (int c : r.macro_classes) {
    Prf s = ScoreOf(r.per_class[c]);
    sum.p += s.p;
    sum.r += s.r;
    sum.f += s.f;
  }
  if (!r.macro_classes.empty()) {
    double n = double(r.macro_classes.size());
    r.macro = {sum.p / n, sum.r / n, sum.f / n};
  }
  r.micro_scores = ScoreOf(r.micro);
}

// Label sets as sets of class names.
using Labels = std::set<std::string>;

inline Report Classification(const std::vector<Labels> &pred,
                             const std::vector<Labels> &gold,
                             bool macro_all = false) {
  Report r;
  r.per_class.resize(ClassNames().size());
  long long exact = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    for (std::size_t c = 0; c < ClassNames().size(); ++c) {
      const std::string &name = ClassNames()[c];
      bool p = pred[i].count(name) > 0;
      bool g = gold[i].count(name) > 0;
      if (p && g) ++r.per_class[c].tp;
      if (p && !g) ++r.per_class[c].fp;
      if (!p && g) ++r.per_class[c].fn;
    }
    if (pred[i] == gold[i]) ++exact;
  }
  for (std::size_t c = 0; c < ClassNames().size(); ++c) {
    const Tally &t = r.per_class[c];
    if (macro_all || t.tp + t.fp + t.fn > 0) r.macro_classes.push_back(int(c));
    r.micro.tp += r.per_class[c].tp;
    r.micro.fp += r.per_class[c].fp;
    r.micro.fn += r.per_class[c].fn;
  }
  r.accuracy = gold.empty() ? 0.0 : double(exact) / double(gold.size());
  Summarize(r);
  return r;
}

// (suffix, start, end) triples.
using Entity = std::tuple<std::string, int, int>;

inline std::string Prefix(const std::string &tag) { return tag.substr(0, 1); }
inline std::string Suffix(const std::string &tag) {
  return tag.size() > 2 ? tag.substr(2) : "";
}

// An I-X continues the entity before it iff the previous tag is B-X or I-X.
inline bool Continues(const std::vector<std::string> &tags, int i) {
  if (i == 0) return false;
  const std::string &prev = tags[i - 1];
  return (Prefix(prev) == "B" || Prefix(prev) == "I") &&
         Suffix(prev) == Suffix(tags[i]);
}

// Enumerates every interval and keeps those that form a maximal entity.
inline std::set<Entity> Entities(const std::vector<std::string> &tags,
                                 long long *repairs = nullptr) {
  const int n = int(tags.size());
  std::set<Entity> out;
  for (int i = 0; i < n; ++i) {
    const std::string kind = Prefix(tags[i]);
    if (kind == "I" && !Continues(tags, i) && repairs) ++*repairs;
    for (int j = i; j < n; ++j) {
      bool ok = false;
      if (kind == "S") {
        ok = j == i;
      } else if (kind == "B" || (kind == "I" && !Continues(tags, i))) {
        ok = true;
        for (int k = i + 1; k <= j && ok; ++k) {
          ok = tags[k] == "I-" + Suffix(tags[i]);
        }
        if (ok && j + 1 < n) ok = tags[j + 1] != "I-" + Suffix(tags[i]);
      }
      if (ok) out.insert({Suffix(tags[i]), i, j});
    }
  }
  return out;
}

inline std::vector<std::string> Untyped(const std::vector<std::string> &tags) {
  std::vector<std::string> out;
  for (const std::string &t : tags) {
    out.push_back(t == "O" ? t : Prefix(t) + "-SPAN");
  }
  return out;
}

using TagMatrix = std::vector<std::vector<std::string>>;

inline Report Spans(const TagMatrix &pred, const TagMatrix &gold, bool labeled,
                    bool macro_all = false) {
  Report r;
  r.per_class.resize(SpanSuffixes().size());
  std::set<std::tuple<std::size_t, std::string, int, int>> P, G;
  long long same = 0, total = 0;
  for (std::size_t s = 0; s < gold.size(); ++s) {
    auto p = labeled ? pred[s] : Untyped(pred[s]);
    auto g = labeled ? gold[s] : Untyped(gold[s]);
    for (std::size_t k = 0; k < g.size(); ++k) {
      same += p[k] == g[k];
      ++total;
    }
    for (const auto &[t, a, b] : Entities(p)) P.insert({s, t, a, b});
    for (const auto &[t, a, b] : Entities(g)) G.insert({s, t, a, b});
  }
  r.accuracy = total == 0 ? 0.0 : double(same) / double(total);
  if (!labeled) {
    for (const auto &e : P) (G.count(e) ? r.micro.tp : r.micro.fp)++;
    for (const auto &e : G) r.micro.fn += P.count(e) == 0;
    r.micro_scores = ScoreOf(r.micro);
    r.macro = r.micro_scores;
    return r;
  }
  for (std::size_t c = 0; c < SpanSuffixes().size(); ++c) {
    const std::string &x = SpanSuffixes()[c];
    bool any = false;
    for (const auto &e : P) {
      if (std::get<1>(e) != x) continue;
      any = true;
      (G.count(e) ? r.per_class[c].tp : r.per_class[c].fp)++;
    }
    for (const auto &e : G) {
      if (std::get<1>(e) != x) continue;
      any = true;
      r.per_class[c].fn += P.count(e) == 0;
    }
    if (any || macro_all) r.macro_classes.push_back(int(c));
    r.micro.tp += r.per_class[c].tp;
    r.micro.fp += r.per_class[c].fp;
    r.micro.fn += r.per_class[c].fn;
  }
  Summarize(r);
  return r;
}

// Krippendorff's alpha for nominal data from its pairwise definition:
// observed disagreement averages mismatching ordered pairs within a unit
// (weighted 1/(m_u - 1)); expected disagreement averages mismatching ordered
// pairs across all pairable values.
inline std::optional<double> Alpha(
    const std::vector<std::vector<std::optional<int>>> &units) {
  std::vector<std::vector<int>> pairable;
  for (const auto &u : units) {
    std::vector<int> vals;
    for (const auto &v : u) {
      if (v) vals.push_back(*v);
    }
    if (vals.size() >= 2) pairable.push_back(vals);
  }
  std::vector<int> all;
  for (const auto &u : pairable) all.insert(all.end(), u.begin(), u.end());
  const double n = double(all.size());
  if (pairable.size() < 2) return std::nullopt;
  double observed = 0;
  for (const auto &u : pairable) {
    double m = double(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
      for (std::size_t j = 0; j < u.size(); ++j) {
        if (i != j && u[i] != u[j]) observed += 1.0 / (m - 1);
      }
    }
  }
  observed /= n;
  double expected = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (i != j && all[i] != all[j]) expected += 1;
    }
  }
  expected /= n * (n - 1);
  if (expected == 0) return 1.0;
  return 1.0 - observed / expected;
}

// Random valid tag strings: non-overlapping spans of random types.
inline std::vector<std::string> RandomValidTags(std::mt19937_64 &rng, int n) {
  std::vector<std::string> tags(n, "O");
  std::uniform_int_distribution<int> coin(0, 2), type(0, 5), len(1, 3);
  for (int i = 0; i < n;) {
    if (coin(rng) != 0) {
      ++i;
      continue;
    }
    const std::string &x = SpanSuffixes()[type(rng)];
    int l = std::min(len(rng), n - i);
    if (l == 1) {
      tags[i] = "S-" + x;
    } else {
      tags[i] = "B-" + x;
      for (int k = 1; k < l; ++k) tags[i + k] = "I-" + x;
    }
    i += l;
  }
  return tags;
}

// Arbitrary tag strings, including stray I- tags.
inline std::vector<std::string> RandomAnyTags(std::mt19937_64 &rng, int n) {
  static const std::vector<std::string> kinds = {"O", "O", "B", "I", "S"};
  std::uniform_int_distribution<int> k(0, int(kinds.size()) - 1), type(0, 5);
  std::vector<std::string> tags;
  for (int i = 0; i < n; ++i) {
    std::string kind = kinds[k(rng)];
    tags.push_back(kind == "O" ? kind : kind + "-" + SpanSuffixes()[type(rng)]);
  }
  return tags;
}

}  // namespace deontic::oracle

#endif  // DEONTIC_TESTS_SUPPORT_ORACLES_H_
