// Copyright 2026 The ckah authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "oracles.h"

#include <algorithm>
#include <functional>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "ckah/downward_closure.h"
#include "ckah/semantics.h"

namespace ckah::testing {
namespace {

std::string MultisetKey(const std::vector<Label>& labels) {
  return absl::StrJoin(labels, " ",
                       [](std::string* out, const Label& l) { out->append(l.name()); });
}

PomsetLanguage AllSpOverSorted(const std::vector<Label>& labels,
                               std::map<std::string, PomsetLanguage>& memo) {
  const std::string key = MultisetKey(labels);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  PomsetLanguage out;
  const int n = static_cast<int>(labels.size());
  if (n == 0) {
    out.Insert(Pomset());
  } else if (n == 1) {
    out.Insert(Pomset::Prim(labels[0]));
  } else {
    // Every proper nonempty sub-multiset, via index subsets.
    std::set<std::string> seen;
    for (uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
      std::vector<Label> left, right;
      for (int i = 0; i < n; ++i) ((mask >> i) & 1 ? left : right).push_back(labels[i]);
      if (!seen.insert(MultisetKey(left)).second) continue;
      const PomsetLanguage a = AllSpOverSorted(left, memo);
      const PomsetLanguage b = AllSpOverSorted(right, memo);
      out.InsertAll(LangSeq(a, b));
      out.InsertAll(LangPar(a, b));
    }
  }
  memo.emplace(key, out);
  return out;
}

std::vector<Label> Residual(const Pomset& w, const Pomset& v, bool* ok) {
  std::vector<Label> rest = w.Leaves();
  *ok = true;
  for (const Label& l : v.Leaves()) {
    auto it = std::find(rest.begin(), rest.end(), l);
    if (it == rest.end()) {
      *ok = false;
      return {};
    }
    rest.erase(it);
  }
  return rest;
}

template <typename T>
const T& Pick(Rng& rng, const std::vector<T>& xs) {
  return xs[std::uniform_int_distribution<size_t>(0, xs.size() - 1)(rng)];
}

int Uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Random pomset where leaf number `hole` (if any) is the hole.
Pomset RandomShape(Rng& rng, int leaves, int hole, const std::vector<std::string>& alphabet) {
  if (leaves == 1) return hole == 0 ? Pomset::Hole() : Letter(Pick(rng, alphabet));
  const int k = Uniform(rng, 1, leaves - 1);
  Pomset a = RandomShape(rng, k, hole, alphabet);
  Pomset b = RandomShape(rng, leaves - k, hole - k, alphabet);
  return Uniform(rng, 0, 1) ? Seq(a, b) : Par(a, b);
}

}  // namespace

PomsetLanguage AllSpOver(std::vector<Label> labels) {
  std::sort(labels.begin(), labels.end(),
            [](const Label& a, const Label& b) { return a.name() < b.name(); });
  std::map<std::string, PomsetLanguage> memo;
  return AllSpOverSorted(labels, memo);
}

PomsetLanguage AllSpUpTo(int max_leaves, const std::vector<std::string>& alphabet) {
  std::vector<PomsetLanguage> by_size(max_leaves + 1);
  for (const std::string& a : alphabet) by_size[1].Insert(Letter(a));
  for (int n = 2; n <= max_leaves; ++n) {
    for (int k = 1; k < n; ++k) {
      by_size[n].InsertAll(LangSeq(by_size[k], by_size[n - k]));
      by_size[n].InsertAll(LangPar(by_size[k], by_size[n - k]));
    }
  }
  PomsetLanguage out;
  for (const PomsetLanguage& l : by_size) out.InsertAll(l);
  return out;
}

std::vector<std::vector<std::pair<int, int>>> AllPosetRelations(int n) {
  // Node j is added below, above or beside each earlier node; a choice is
  // kept when the strict order stays transitive.
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
  std::function<void(int, int)> extend = [&](int j, int i) {
    if (j == n) {
      std::vector<std::pair<int, int>> rel;
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          if (less[a][b]) rel.emplace_back(a, b);
        }
      }
      out.push_back(std::move(rel));
      return;
    }
    if (i == j) {
      for (int a = 0; a <= j; ++a) {
        for (int b = 0; b <= j; ++b) {
          if (a == j || b == j) {
            for (int c = 0; c <= j; ++c) {
              if (less[a][b] && less[b][c] && !less[a][c]) return;
              if (less[c][a] && less[a][b] && !less[c][b]) return;
            }
          }
        }
      }
      extend(j + 1, 0);
      return;
    }
    extend(j, i + 1);
    less[i][j] = true;
    extend(j, i + 1);
    less[i][j] = false;
    less[j][i] = true;
    extend(j, i + 1);
    less[j][i] = false;
  };
  extend(0, 0);
  return out;
}

PomsetLanguage OracleDownwardClosure(const Pomset& v) {
  PomsetLanguage out;
  const LabelledPoset pv = ToPoset(v);
  for (const Pomset& u : AllSpOver(v.Leaves())) {
    if (PosetSubsumes(pv, ToPoset(u))) out.Insert(u);
  }
  return out;
}

std::vector<SpContext> OracleOccurrences(const Pomset& w, const Pomset& v) {
  bool ok = false;
  std::vector<Label> rest = Residual(w, v, &ok);
  if (!ok) return {};
  rest.push_back(Label::Hole());
  std::vector<SpContext> out;
  for (const Pomset& p : AllSpOver(rest)) {
    absl::StatusOr<SpContext> c = SpContext::Create(p);
    if (c.ok() && Plug(*c, v) == w) out.push_back(*c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

NaiveClosure NaiveClose(const PomsetLanguage& l, const HypothesisSet& h, int max_rounds,
                        int max_size) {
  NaiveClosure result{l, true};
  for (int round = 0; round < max_rounds; ++round) {
    PomsetLanguage next = result.language;
    for (const Pomset& w : result.language) {
      for (size_t i = 0; i < h.size(); ++i) {
        for (const Pomset& v : h.rhs_language(i)) {
          for (const SpContext& c : OracleOccurrences(w, v)) {
            if (PlugLang(c, h.rhs_language(i)).IsSubsetOf(result.language)) {
              next.InsertAll(PlugLang(c, h.lhs_language(i)));
            }
          }
        }
      }
    }
    if (next == result.language) return result;
    result.language = std::move(next);
    if (static_cast<int>(result.language.size()) > max_size) break;
  }
  result.complete = false;
  return result;
}

absl::StatusOr<LabelledPoset> ParseDot(const std::string& text) {
  static const std::regex node(R"re(^\s*n(\d+)\s*\[label="([^"]*)"\];\s*$)re");
  static const std::regex edge(R"re(^\s*n(\d+)\s*->\s*n(\d+);\s*$)re");
  std::map<int, std::string> labels;
  std::vector<std::pair<int, int>> edges;
  std::istringstream in(text);
  std::string line;
  std::smatch m;
  while (std::getline(in, line)) {
    if (std::regex_match(line, m, node)) {
      labels[std::stoi(m[1])] = m[2];
    } else if (std::regex_match(line, m, edge)) {
      edges.emplace_back(std::stoi(m[1]), std::stoi(m[2]));
    }
  }
  std::vector<Label> ls;
  for (const auto& [id, name] : labels) {
    if (id != static_cast<int>(ls.size())) return absl::InvalidArgumentError("node ids not dense");
    ls.emplace_back(name);
  }
  return LabelledPoset::FromRelation(std::move(ls), edges);
}

Pomset RandomPomset(Rng& rng, int leaves, const std::vector<std::string>& alphabet) {
  if (leaves == 0) return Pomset();
  return RandomShape(rng, leaves, -1, alphabet);
}

SpContext RandomContext(Rng& rng, int leaves, const std::vector<std::string>& alphabet) {
  const int hole = Uniform(rng, 0, leaves);
  return *SpContext::Create(RandomShape(rng, leaves + 1, hole, alphabet));
}

BoolTerm RandomBoolTerm(Rng& rng, int depth, const std::vector<std::string>& observations) {
  const int pick = Uniform(rng, 0, depth <= 0 ? 3 : 6);
  switch (pick) {
    case 0:
      return Uniform(rng, 0, 3) == 0 ? BoolTerm::Bot() : BoolTerm::Top();
    case 1:
    case 2:
    case 3:
      return BoolTerm::Prim(Pick(rng, observations));
    case 4:
      return BoolTerm::Or(RandomBoolTerm(rng, depth - 1, observations),
                          RandomBoolTerm(rng, depth - 1, observations));
    case 5:
      return BoolTerm::And(RandomBoolTerm(rng, depth - 1, observations),
                           RandomBoolTerm(rng, depth - 1, observations));
    default:
      return BoolTerm::Not(RandomBoolTerm(rng, depth - 1, observations));
  }
}

Term RandomTerm(Rng& rng, int leaves, const TermShape& shape) {
  if (leaves <= 1) {
    const int pick = Uniform(rng, 0, 9);
    if (shape.units && pick == 0) return Term::Zero();
    if (shape.units && pick == 1) return Term::One();
    if (!shape.observations.empty() && pick >= 6) {
      return Term::Obs(RandomBoolTerm(rng, 1, shape.observations));
    }
    Term a = Term::Act(Pick(rng, shape.actions));
    if (shape.star && pick == 5) return Term::Star(a);
    return a;
  }
  const int k = Uniform(rng, 1, leaves - 1);
  Term a = RandomTerm(rng, k, shape);
  Term b = RandomTerm(rng, leaves - k, shape);
  Term out = Term::Zero();
  switch (Uniform(rng, 0, 2)) {
    case 0:
      out = Term::Plus(a, b);
      break;
    case 1:
      out = Term::Dot(a, b);
      break;
    default:
      out = Term::Par(a, b);
  }
  if (shape.star && Uniform(rng, 0, 7) == 0) out = Term::Star(out);
  return out;
}

namespace {

BoolTerm RewriteBool(Rng& rng, const BoolTerm& p) {
  switch (Uniform(rng, 0, 5)) {
    case 0:
      return BoolTerm::Or(p, BoolTerm::Bot());
    case 1:
      return BoolTerm::And(p, BoolTerm::Top());
    case 2:
      return BoolTerm::Not(BoolTerm::Not(p));
    case 3:
      return BoolTerm::Or(p, p);
    case 4:
      return BoolTerm::And(p, BoolTerm::Or(p, BoolTerm::Bot()));
    default:
      // p ≡ (p ∧ q) ∨ (p ∧ ¬q)
      return BoolTerm::Or(BoolTerm::And(p, BoolTerm::Top()), BoolTerm::And(p, BoolTerm::Bot()));
  }
}

Term RewriteHere(Rng& rng, const Term& e, bool bool_axioms) {
  if (bool_axioms && e.kind() == Term::Kind::kObs) return Term::Obs(RewriteBool(rng, e.obs()));
  switch (Uniform(rng, 0, 9)) {
    case 0:
      return Term::Plus(e, Term::Zero());
    case 1:
      return Term::Dot(Term::One(), e);
    case 2:
      return Term::Par(e, Term::One());
    case 3:
      return Term::Plus(e, e);
    case 4:
      if (e.kind() == Term::Kind::kPlus) return Term::Plus(e.right(), e.left());
      return Term::Dot(e, Term::One());
    case 5:
      if (e.kind() == Term::Kind::kPar) return Term::Par(e.right(), e.left());
      return Term::Plus(Term::Zero(), e);
    case 6:
      // (f + g)·h = f·h + g·h
      if (e.kind() == Term::Kind::kDot && e.left().kind() == Term::Kind::kPlus) {
        return Term::Plus(Term::Dot(e.left().left(), e.right()),
                          Term::Dot(e.left().right(), e.right()));
      }
      return Term::Par(Term::One(), e);
    case 7:
      // f ∥ (g + h) = f∥g + f∥h
      if (e.kind() == Term::Kind::kPar && e.right().kind() == Term::Kind::kPlus) {
        return Term::Plus(Term::Par(e.left(), e.right().left()),
                          Term::Par(e.left(), e.right().right()));
      }
      return Term::Plus(e, Term::Dot(Term::Zero(), e));
    case 8:
      // associativity of ·
      if (e.kind() == Term::Kind::kDot && e.left().kind() == Term::Kind::kDot) {
        return Term::Dot(e.left().left(), Term::Dot(e.left().right(), e.right()));
      }
      return Term::Plus(e, Term::Par(e, Term::Zero()));
    default:
      if (e.kind() == Term::Kind::kStar) return Term::Plus(Term::One(), Term::Dot(e.left(), e));
      return Term::Dot(e, Term::Plus(Term::One(), Term::Zero()));
  }
}

}  // namespace

Term RewriteByAxiom(Rng& rng, const Term& e, bool bool_axioms) {
  std::vector<const Term*> stack = {&e};
  std::vector<const Term*> nodes;
  while (!stack.empty()) {
    const Term* t = stack.back();
    stack.pop_back();
    nodes.push_back(t);
    switch (t->kind()) {
      case Term::Kind::kPlus:
      case Term::Kind::kDot:
      case Term::Kind::kPar:
        stack.push_back(&t->right());
        [[fallthrough]];
      case Term::Kind::kStar:
        stack.push_back(&t->left());
        break;
      default:
        break;
    }
  }
  std::vector<const Term*> candidates = nodes;
  if (bool_axioms) {
    std::vector<const Term*> obs;
    for (const Term* t : nodes) {
      if (t->kind() == Term::Kind::kObs) obs.push_back(t);
    }
    if (!obs.empty()) candidates = obs;
  }
  const Term* target = Pick(rng, candidates);
  // Rebuild with the chosen node rewritten.
  auto rebuild = [&](auto&& self, const Term& t) -> Term {
    if (&t == target) return RewriteHere(rng, t, bool_axioms);
    switch (t.kind()) {
      case Term::Kind::kPlus:
        return Term::Plus(self(self, t.left()), self(self, t.right()));
      case Term::Kind::kDot:
        return Term::Dot(self(self, t.left()), self(self, t.right()));
      case Term::Kind::kPar:
        return Term::Par(self(self, t.left()), self(self, t.right()));
      case Term::Kind::kStar:
        return Term::Star(self(self, t.left()));
      default:
        return t;
    }
  };
  return rebuild(rebuild, e);
}

PomsetLanguage RandomLanguage(Rng& rng, int count, int max_leaves,
                              const std::vector<std::string>& alphabet) {
  PomsetLanguage out;
  for (int i = 0; i < count; ++i) out.Insert(RandomPomset(rng, Uniform(rng, 1, max_leaves), alphabet));
  return out;
}

HypothesisSet RandomGroundedHypotheses(Rng& rng, int count,
                                       const std::vector<std::string>& alphabet,
                                       bool parallel_lhs) {
  std::vector<Hypothesis> hs;
  auto word = [&](int n) {
    Term t = Term::Act(Pick(rng, alphabet));
    for (int i = 1; i < n; ++i) t = Term::Dot(t, Term::Act(Pick(rng, alphabet)));
    return t;
  };
  for (int i = 0; i < count; ++i) {
    const Term rhs = word(Uniform(rng, 1, 2));
    Term lhs = Term::One();
    switch (Uniform(rng, 0, parallel_lhs ? 4 : 3)) {
      case 0:
        lhs = Term::Act(Pick(rng, alphabet));
        break;
      case 1:
        lhs = Term::Plus(Term::Act(Pick(rng, alphabet)), Term::Act(Pick(rng, alphabet)));
        break;
      case 2:
        lhs = word(1);
        break;
      case 3:
        lhs = Uniform(rng, 0, 1) ? Term::One() : word(2);
        break;
      default:
        lhs = Term::Par(Term::Act(Pick(rng, alphabet)), Term::Act(Pick(rng, alphabet)));
    }
    hs.push_back({lhs, rhs});
  }
  return *HypothesisSet::Create(std::move(hs));
}

}  // namespace ckah::testing
