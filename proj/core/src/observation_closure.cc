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

#include "ckah/observation_closure.h"

#include <algorithm>
#include <map>
#include <span>
#include <set>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "ckah/boolean.h"
#include "ckah/poset.h"

namespace ckah {
namespace {

struct LabelProfile {
  std::map<std::string, int> actions;
  std::map<std::string, int> atoms;
};

LabelProfile Profile(const Pomset& u) {
  LabelProfile out;
  for (const Label& l : u.Leaves()) ++(l.is_atom() ? out.atoms : out.actions)[l.name()];
  return out;
}

// Necessary condition for v ∈ cl({w}).
bool ProfileCompatible(const LabelProfile& w, const LabelProfile& v) {
  if (w.actions != v.actions || w.atoms.size() != v.atoms.size()) return false;
  for (const auto& [name, count] : v.atoms) {
    auto it = w.atoms.find(name);
    if (it == w.atoms.end() || it->second < count) return false;
  }
  return true;
}

absl::Status TooLarge(const Budget& budget) {
  return absl::ResourceExhaustedError(
      absl::StrCat("bounded closure exceeds ", budget.max_language_size, " members"));
}

}  // namespace

bool ContractionChecker::Below(const Pomset& w, const Pomset& v) {
  if (v.size() > w.size()) return false;
  if (v == w) return true;
  const std::string key = w.key() + '\x01' + v.key();
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  bool result = false;
  if (ProfileCompatible(Profile(w), Profile(v))) {
    switch (v.kind()) {
      case Pomset::Kind::kEmpty:
        break;
      case Pomset::Kind::kPrim:
        // The profile leaves only copies of the atom in w; any
        // linearisation of them is a chain.
        result = v.label().is_atom();
        break;
      case Pomset::Kind::kSeq: {
        const auto parts = v.children();
        const Pomset head = parts[0];
        const Pomset tail =
            SeqAll(std::vector<Pomset>(parts.begin() + 1, parts.end()));
        for (const DownSetSplit& s : DownSetSplits(w)) {
          if (s.lower.size() < head.size() || s.upper.size() < tail.size()) continue;
          if (Below(s.lower, head) && Below(s.upper, tail)) {
            result = true;
            break;
          }
        }
        break;
      }
      case Pomset::Kind::kPar: {
        const std::vector<Pomset> targets = v.ParComponents();
        const std::vector<Pomset> sources = w.ParComponents();
        const int m = static_cast<int>(sources.size());
        auto assign = [&](auto&& self, size_t i, uint64_t free) -> bool {
          if (i == targets.size()) return free == 0;
          for (uint64_t s = free; s; s = (s - 1) & free) {
            std::vector<Pomset> group;
            for (int j = 0; j < m; ++j) {
              if ((s >> j) & 1) group.push_back(sources[j]);
            }
            if (Below(ParAll(group), targets[i]) && self(self, i + 1, free & ~s)) return true;
          }
          return false;
        };
        if (targets.size() <= sources.size()) {
          result = assign(assign, 0, (uint64_t{1} << m) - 1);
        }
        break;
      }
    }
  }
  memo_.emplace(key, result);
  return result;
}

bool ContractionChecker::InClosure(const PomsetLanguage& l, const Pomset& v) {
  for (const Pomset& w : l) {
    if (w.size() >= v.size() && Below(w, v)) return true;
  }
  return false;
}

const ClosureMembership::Info& ClosureMembership::Of(const Term& t) {
  if (auto it = info_.find(t.id()); it != info_.end()) return it->second;
  Info info;
  auto add_ranges = [](Info& out, const Info& a, const Info& b) {
    out.max_size = (a.max_size < 0 || b.max_size < 0) ? -1 : a.max_size + b.max_size;
    out.actions = a.actions;
    for (const auto& [name, range] : b.actions) {
      auto& r = out.actions[name];
      r.first += range.first;
      r.second = (r.second < 0 || range.second < 0) ? -1 : r.second + range.second;
    }
    out.alphabet = a.alphabet;
    out.alphabet.insert(b.alphabet.begin(), b.alphabet.end());
  };
  switch (t.kind()) {
    case Term::Kind::kZero:
    case Term::Kind::kObs:
    case Term::Kind::kHole:
      info.empty = true;
      break;
    case Term::Kind::kOne:
      break;
    case Term::Kind::kAct:
      info.max_size = 1;
      info.alphabet.insert(t.label().name());
      if (!t.label().is_atom()) info.actions[t.label().name()] = {1, 1};
      break;
    case Term::Kind::kPlus: {
      const Info a = Of(t.left()), b = Of(t.right());
      if (a.empty || b.empty) {
        info = a.empty ? b : a;
        break;
      }
      info.max_size = (a.max_size < 0 || b.max_size < 0) ? -1 : std::max(a.max_size, b.max_size);
      info.alphabet = a.alphabet;
      info.alphabet.insert(b.alphabet.begin(), b.alphabet.end());
      for (const Info* side : {&a, &b}) {
        const Info* other = side == &a ? &b : &a;
        for (const auto& [name, range] : side->actions) {
          auto it = other->actions.find(name);
          const std::pair<int, int> o = it == other->actions.end() ? std::pair{0, 0} : it->second;
          info.actions[name] = {std::min(range.first, o.first),
                                (range.second < 0 || o.second < 0)
                                    ? -1
                                    : std::max(range.second, o.second)};
        }
      }
      break;
    }
    case Term::Kind::kDot:
    case Term::Kind::kPar: {
      const Info a = Of(t.left()), b = Of(t.right());
      if (a.empty || b.empty) {
        info.empty = true;
        break;
      }
      add_ranges(info, a, b);
      break;
    }
    case Term::Kind::kStar: {
      const Info a = Of(t.left());
      if (a.empty || a.max_size == 0) break;
      info.max_size = -1;
      info.alphabet = a.alphabet;
      for (const auto& [name, range] : a.actions) {
        info.actions[name] = {0, range.second == 0 ? 0 : -1};
      }
      break;
    }
  }
  return info_.emplace(t.id(), std::move(info)).first->second;
}

bool ClosureMembership::Admissible(const Info& info, const Pomset& v) const {
  if (info.empty) return false;
  if (info.max_size >= 0 && v.size() > info.max_size) return false;
  std::map<std::string, int> counts;
  for (const Label& l : v.Leaves()) {
    if (!info.alphabet.contains(l.name())) return false;
    if (!l.is_atom()) ++counts[l.name()];
  }
  for (const auto& [name, range] : info.actions) {
    auto it = counts.find(name);
    const int c = it == counts.end() ? 0 : it->second;
    if (c < range.first || (range.second >= 0 && c > range.second)) return false;
  }
  return true;
}

bool ClosureMembership::In(const Term& t, const Pomset& v) {
  std::string key;
  const uintptr_t id = reinterpret_cast<uintptr_t>(t.id());
  key.append(reinterpret_cast<const char*>(&id), sizeof(id));
  key += v.key();
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  bool result = false;
  if (Admissible(Of(t), v)) {
    switch (t.kind()) {
      case Term::Kind::kOne:
        result = v.is_empty();
        break;
      case Term::Kind::kAct:
        result = v.kind() == Pomset::Kind::kPrim && v.label() == t.label();
        break;
      case Term::Kind::kPlus:
        result = In(t.left(), v) || In(t.right(), v);
        break;
      case Term::Kind::kDot:
        result = InSeq(t.left(), t.right(), v, false);
        break;
      case Term::Kind::kStar:
        result = v.is_empty() || InSeq(t.left(), t, v, true);
        break;
      case Term::Kind::kPar:
        result = InPar(t, v);
        break;
      default:
        break;
    }
  }
  memo_.emplace(std::move(key), result);
  return result;
}

bool ClosureMembership::InSeq(const Term& first, const Term& rest, const Pomset& v, bool star) {
  const std::vector<Pomset> comps = v.SeqComponents();
  const size_t n = comps.size();
  auto part = [&](size_t from, size_t to) {
    return SeqAll(std::span<const Pomset>(comps.data() + from, to - from));
  };
  for (size_t i = star ? 1 : 0; i <= n; ++i) {
    if (In(first, part(0, i)) && In(rest, part(i, n))) return true;
  }
  // x·α·y from x·α and α·y.
  for (size_t i = star ? 1 : 0; i < n; ++i) {
    if (comps[i].kind() != Pomset::Kind::kPrim || !comps[i].label().is_atom()) continue;
    if (In(first, part(0, i + 1)) && In(rest, part(i, n))) return true;
  }
  return false;
}

bool ClosureMembership::InPar(const Term& t, const Pomset& v) {
  const Term& l = t.left();
  const Term& r = t.right();
  if (v.is_empty()) return In(l, v) && In(r, v);
  const Info& li = Of(l);
  const Info& ri = Of(r);
  const LabelledPoset g = ToPoset(v);
  const int n = g.size();
  // Twins (same label and same neighbourhood) are interchangeable; their
  // choices are kept non-decreasing.
  std::vector<int> twin_of(n, -1);
  for (int j = 0; j < n; ++j) {
    const uint64_t bj = uint64_t{1} << j;
    for (int i = j - 1; i >= 0 && twin_of[j] < 0; --i) {
      const uint64_t bi = uint64_t{1} << i;
      if (g.label(i) == g.label(j) && (g.UpSet(i) & ~bi) == (g.UpSet(j) & ~bj) &&
          (g.DownSet(i) & ~bi) == (g.DownSet(j) & ~bj)) {
        twin_of[j] = i;
      }
    }
  }
  enum Choice { kLeft = 0, kRight = 1, kBoth = 2 };
  std::vector<int> choice(n, 0);
  auto search = [&](auto&& self, int i, uint64_t lmask, uint64_t rmask) -> bool {
    const int lsize = __builtin_popcountll(lmask), rsize = __builtin_popcountll(rmask);
    if (li.max_size >= 0 && lsize > li.max_size) return false;
    if (ri.max_size >= 0 && rsize > ri.max_size) return false;
    if (i == n) {
      absl::StatusOr<Pomset> pl = FromPoset(g.Restrict(lmask));
      absl::StatusOr<Pomset> pr = FromPoset(g.Restrict(rmask));
      return pl.ok() && pr.ok() && In(l, *pl) && In(r, *pr);
    }
    const std::string& name = g.label(i).name();
    const bool to_l = li.alphabet.contains(name), to_r = ri.alphabet.contains(name);
    const uint64_t bit = uint64_t{1} << i;
    for (int c = twin_of[i] < 0 ? 0 : choice[twin_of[i]]; c <= kBoth; ++c) {
      if ((c == kLeft && !to_l) || (c == kRight && !to_r) ||
          (c == kBoth && !(to_l && to_r && g.label(i).is_atom()))) {
        continue;
      }
      choice[i] = c;
      if (self(self, i + 1, c != kRight ? lmask | bit : lmask,
               c != kLeft ? rmask | bit : rmask)) {
        return true;
      }
    }
    return false;
  };
  return search(search, 0, 0, 0);
}

PomsetLanguage SeqMerge(const PomsetLanguage& a, const PomsetLanguage& b, int max_nodes) {
  PomsetLanguage out;
  std::map<std::string, std::vector<Pomset>> by_first_atom;
  for (const Pomset& y : b) {
    const std::vector<Pomset> parts = y.SeqComponents();
    if (!parts.empty() && parts.front().kind() == Pomset::Kind::kPrim &&
        parts.front().label().is_atom()) {
      by_first_atom[parts.front().key()].push_back(y);
    }
  }
  for (const Pomset& x : a) {
    for (const Pomset& y : b) {
      if (x.size() + y.size() > max_nodes) break;
      out.Insert(Seq(x, y));
    }
    std::vector<Pomset> parts = x.SeqComponents();
    if (parts.empty() || parts.back().kind() != Pomset::Kind::kPrim ||
        !parts.back().label().is_atom()) {
      continue;
    }
    auto it = by_first_atom.find(parts.back().key());
    if (it == by_first_atom.end()) continue;
    parts.pop_back();
    const Pomset prefix = SeqAll(parts);
    for (const Pomset& y : it->second) {
      if (prefix.size() + y.size() <= max_nodes) out.Insert(Seq(prefix, y));
    }
  }
  return out;
}

absl::StatusOr<PomsetLanguage> ParMerge(const PomsetLanguage& a, const PomsetLanguage& b,
                                        int max_nodes, const Budget& budget) {
  PomsetLanguage out;
  DownwardClosureCache cache;
  std::set<std::string> glued_seen;
  for (const Pomset& p : a) {
    for (const Pomset& q : b) {
      if (p.is_empty() || q.is_empty()) {
        out.Insert(Par(p, q));
        continue;
      }
      const LabelProfile pp = Profile(p), qp = Profile(q);
      int max_merge = 0;
      for (const auto& [name, count] : pp.atoms) {
        if (auto it = qp.atoms.find(name); it != qp.atoms.end()) {
          max_merge += std::min(count, it->second);
        }
      }
      const int n = p.size() + q.size();
      if (n - max_merge > max_nodes) continue;
      if (n <= max_nodes) out.InsertAll(cache.Closure(Par(p, q)));

      const LabelledPoset pg = ToPoset(p), qg = ToPoset(q);
      std::vector<int> match(q.size(), -1);  // q node -> p node
      std::vector<bool> p_used(p.size(), false);
      auto glue = [&]() -> absl::Status {
        std::vector<Label> labels = pg.labels();
        std::vector<int> id(q.size());
        for (int j = 0; j < q.size(); ++j) {
          if (match[j] >= 0) {
            id[j] = match[j];
          } else {
            id[j] = static_cast<int>(labels.size());
            labels.push_back(qg.label(j));
          }
        }
        std::vector<std::pair<int, int>> edges = {};
        for (const auto& [x, y] : pg.CoveringPairs()) edges.emplace_back(x, y);
        for (const auto& [x, y] : qg.CoveringPairs()) edges.emplace_back(id[x], id[y]);
        absl::StatusOr<LabelledPoset> g = LabelledPoset::FromRelation(labels, edges);
        if (!g.ok()) return absl::OkStatus();
        if (IsNFree(*g)) {
          absl::StatusOr<Pomset> sp = FromPoset(*g);
          if (sp.ok() && glued_seen.insert(sp->key()).second) {
            out.InsertAll(cache.Closure(*sp));
          }
        } else {
          out.InsertAll(SpDownwardClosure(*g));
        }
        if (static_cast<int>(out.size()) > budget.max_language_size) return TooLarge(budget);
        return absl::OkStatus();
      };
      // Partial matchings of equal atoms that keep the glued order acyclic.
      auto extend = [&](auto&& self, int j, int matched) -> absl::Status {
        if (j == q.size()) {
          if (matched == 0 || n - matched > max_nodes) return absl::OkStatus();
          return glue();
        }
        if (n - matched - (q.size() - j) <= max_nodes) {
          absl::Status s = self(self, j + 1, matched);
          if (!s.ok()) return s;
        }
        if (!qg.label(j).is_atom()) return absl::OkStatus();
        for (int i = 0; i < p.size(); ++i) {
          if (p_used[i] || pg.label(i) != qg.label(j)) continue;
          bool consistent = true;
          for (int j2 = 0; j2 < j && consistent; ++j2) {
            const int i2 = match[j2];
            if (i2 < 0) continue;
            consistent = !(pg.Less(i, i2) && qg.Less(j2, j)) &&
                         !(pg.Less(i2, i) && qg.Less(j, j2));
          }
          if (!consistent) continue;
          match[j] = i;
          p_used[i] = true;
          absl::Status s = self(self, j + 1, matched + 1);
          match[j] = -1;
          p_used[i] = false;
          if (!s.ok()) return s;
        }
        return absl::OkStatus();
      };
      absl::Status s = extend(extend, 0, 0);
      if (!s.ok()) return s;
      if (static_cast<int>(out.size()) > budget.max_language_size) return TooLarge(budget);
    }
  }
  return out;
}

absl::StatusOr<PomsetLanguage> BoundedObservationClosure(const Term& e, int max_nodes,
                                                         const Budget& budget) {
  auto check = [&](PomsetLanguage l) -> absl::StatusOr<PomsetLanguage> {
    if (static_cast<int>(l.size()) > budget.max_language_size) return TooLarge(budget);
    return l;
  };
  switch (e.kind()) {
    case Term::Kind::kZero:
      return PomsetLanguage();
    case Term::Kind::kOne:
      return PomsetLanguage{Pomset()};
    case Term::Kind::kAct:
      if (max_nodes < 1) return PomsetLanguage();
      return PomsetLanguage{Pomset::Prim(e.label())};
    case Term::Kind::kObs:
      return absl::FailedPreconditionError(
          absl::StrCat("ContainsObs: reify '", e.ToString(), "' first"));
    case Term::Kind::kHole:
      return absl::InvalidArgumentError("a hole is not a term");
    case Term::Kind::kPlus:
    case Term::Kind::kDot:
    case Term::Kind::kPar: {
      absl::StatusOr<PomsetLanguage> l = BoundedObservationClosure(e.left(), max_nodes, budget);
      if (!l.ok()) return l;
      absl::StatusOr<PomsetLanguage> r =
          BoundedObservationClosure(e.right(), max_nodes, budget);
      if (!r.ok()) return r;
      if (e.kind() == Term::Kind::kPlus) return check(LangUnion(*l, *r));
      if (e.kind() == Term::Kind::kDot) return check(SeqMerge(*l, *r, max_nodes));
      return ParMerge(*l, *r, max_nodes, budget);
    }
    case Term::Kind::kStar: {
      absl::StatusOr<PomsetLanguage> inner =
          BoundedObservationClosure(e.left(), max_nodes, budget);
      if (!inner.ok()) return inner;
      PomsetLanguage factors;
      for (const Pomset& u : *inner) {
        if (!u.is_empty()) factors.Insert(u);
      }
      PomsetLanguage out{Pomset()};
      PomsetLanguage frontier = out;
      while (!frontier.empty()) {
        PomsetLanguage next;
        for (const Pomset& u : SeqMerge(factors, frontier, max_nodes)) {
          if (out.Insert(u)) next.Insert(u);
        }
        if (static_cast<int>(out.size()) > budget.max_language_size) return TooLarge(budget);
        frontier = std::move(next);
      }
      return out;
    }
  }
  return PomsetLanguage();
}

namespace {

std::string ClassLetter(const std::vector<Atom>& atoms, uint64_t cls) {
  std::vector<std::string> names;
  for (size_t i = 0; i < atoms.size(); ++i) {
    if ((cls >> i) & 1) names.push_back(AtomName(atoms[i]));
  }
  if (names.size() == 1) return names.front();
  return "{" + absl::StrJoin(names, "+") + "}";
}

}  // namespace

Term ObservationClassLetters(const Term& e, const std::vector<std::string>& omega) {
  switch (e.kind()) {
    case Term::Kind::kObs: {
      const std::vector<Atom> atoms = AllAtoms(omega);
      uint64_t cls = 0;
      for (size_t i = 0; i < atoms.size(); ++i) {
        if (e.obs().Evaluate(atoms[i])) cls |= uint64_t{1} << i;
      }
      if (cls == 0) return Term::Zero();
      return Term::Act(ClassLetter(atoms, cls));
    }
    case Term::Kind::kPlus:
      return Term::Plus(ObservationClassLetters(e.left(), omega),
                        ObservationClassLetters(e.right(), omega));
    case Term::Kind::kDot:
      return Term::Dot(ObservationClassLetters(e.left(), omega),
                       ObservationClassLetters(e.right(), omega));
    case Term::Kind::kPar:
      return Term::Par(ObservationClassLetters(e.left(), omega),
                       ObservationClassLetters(e.right(), omega));
    case Term::Kind::kStar:
      return Term::Star(ObservationClassLetters(e.left(), omega));
    default:
      return e;
  }
}

absl::StatusOr<HypothesisSet> RawObservationPack(const std::vector<std::string>& omega) {
  const std::vector<Atom> atoms = AllAtoms(omega);
  const uint64_t classes = uint64_t{1} << atoms.size();
  auto letter = [&](uint64_t cls) { return Term::Act(ClassLetter(atoms, cls)); };
  std::vector<Hypothesis> hypotheses;
  for (uint64_t p = 1; p < classes; ++p) {
    for (uint64_t q = p; q < classes; ++q) {
      // glue: p ∨ q = p + q.
      hypotheses.push_back({Term::Plus(letter(p), letter(q)), letter(p | q)});
      hypotheses.push_back({letter(p | q), Term::Plus(letter(p), letter(q))});
    }
  }
  for (uint64_t p = 1; p < classes; ++p) {
    for (uint64_t q = 1; q < classes; ++q) {
      // contr: p ∧ q ≤ p · q; the ⊥ instances only relate absorbing pomsets.
      if ((p & q) != 0) hypotheses.push_back({letter(p & q), Term::Dot(letter(p), letter(q))});
    }
  }
  return HypothesisSet::Create(std::move(hypotheses), true);
}

std::map<std::string, Term> ClassReification(const std::vector<std::string>& omega) {
  const std::vector<Atom> atoms = AllAtoms(omega);
  std::map<std::string, Term> out;
  for (uint64_t cls = 1; cls < (uint64_t{1} << atoms.size()); ++cls) {
    std::vector<Term> members;
    for (size_t i = 0; i < atoms.size(); ++i) {
      if ((cls >> i) & 1) members.push_back(Term::Act(AtomLabel(atoms[i])));
    }
    out.emplace(ClassLetter(atoms, cls), SumOf(members));
  }
  return out;
}

absl::StatusOr<ClosureResult> RawObservationClosure(const PomsetLanguage& l,
                                                    const std::vector<std::string>& omega,
                                                    const Budget& budget) {
  absl::StatusOr<HypothesisSet> h = RawObservationPack(omega);
  if (!h.ok()) return h.status();
  absl::StatusOr<ClosureResult> r = CloseJoint(l, *h, budget);
  if (!r.ok()) return r;
  PomsetLanguage kept;
  for (const Pomset& u : r->language) {
    bool plain = true;
    for (const Label& x : u.Leaves()) plain = plain && !x.name().starts_with("{");
    if (plain) kept.Insert(u);
  }
  r->language = std::move(kept);
  return r;
}

}  // namespace ckah
