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

#include "ckah/context.h"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace ckah {
namespace {

constexpr uint64_t Bit(int i) { return uint64_t{1} << i; }

absl::Status Precondition(std::string_view what) {
  return absl::FailedPreconditionError(absl::StrCat("PreconditionViolated: ", std::string(what)));
}

Pomset Substitute(const Pomset& p, const Pomset& u) {
  switch (p.kind()) {
    case Pomset::Kind::kEmpty:
      return p;
    case Pomset::Kind::kPrim:
      return p.label().is_hole() ? u : p;
    case Pomset::Kind::kSeq:
    case Pomset::Kind::kPar: {
      if (p.hole_count() == 0) return p;
      std::vector<Pomset> parts;
      for (const Pomset& c : p.children()) parts.push_back(Substitute(c, u));
      return p.kind() == Pomset::Kind::kSeq ? SeqAll(parts) : ParAll(parts);
    }
  }
  return p;
}

int HoleNode(const LabelledPoset& p) {
  for (int i = 0; i < p.size(); ++i) {
    if (p.label(i).is_hole()) return i;
  }
  return -1;
}

uint64_t AllBut(int n, int node) {
  const uint64_t all = n == 64 ? ~uint64_t{0} : Bit(n) - 1;
  return all & ~Bit(node);
}

class OccurrenceFinder {
 public:
  explicit OccurrenceFinder(const Pomset& v) : v_(v) {}

  const std::set<Pomset>& Find(const Pomset& w) {
    if (auto it = memo_.find(w.key()); it != memo_.end()) return it->second;
    std::set<Pomset> out;
    if (w == v_) out.insert(Pomset::Hole());
    if (v_.size() <= w.size()) {
      AddParallel(w, out);
      AddSequential(w, out);
    }
    return memo_.emplace(w.key(), std::move(out)).first->second;
  }

 private:
  // C = h ∥ R with h the hole's component and R nonempty.
  void AddParallel(const Pomset& w, std::set<Pomset>& out) {
    const std::vector<Pomset> parts = w.ParComponents();
    const int n = static_cast<int>(parts.size());
    if (n == 0) return;
    std::set<std::string> seen;
    for (uint64_t mask = 0; mask + 1 < Bit(n); ++mask) {
      std::vector<Pomset> inside, rest;
      for (int i = 0; i < n; ++i) ((mask >> i) & 1 ? inside : rest).push_back(parts[i]);
      const Pomset target = ParAll(inside);
      if (target.size() < v_.size()) continue;
      if (!seen.insert(target.key()).second) continue;
      const Pomset residue = ParAll(rest);
      for (const Pomset& h : Find(target)) {
        if (h.kind() == Pomset::Kind::kPar) continue;
        out.insert(Par(h, residue));
      }
    }
  }

  // C = x · g · y with g the hole's factor and x·y nonempty.
  void AddSequential(const Pomset& w, std::set<Pomset>& out) {
    const std::vector<Pomset> parts = w.SeqComponents();
    const size_t n = parts.size();
    for (size_t begin = 0; begin <= n; ++begin) {
      for (size_t end = begin; end <= n; ++end) {
        if (begin == 0 && end == n) continue;
        const std::vector<Pomset> window(parts.begin() + begin, parts.begin() + end);
        const Pomset target = SeqAll(window);
        if (target.size() < v_.size()) continue;
        if (target.is_empty() && !v_.is_empty()) continue;
        const Pomset prefix =
            SeqAll(std::vector<Pomset>(parts.begin(), parts.begin() + begin));
        const Pomset suffix = SeqAll(std::vector<Pomset>(parts.begin() + end, parts.end()));
        for (const Pomset& g : Find(target)) {
          if (g.kind() == Pomset::Kind::kSeq) continue;
          out.insert(SeqAll({prefix, g, suffix}));
        }
      }
    }
  }

  Pomset v_;
  std::map<std::string, std::set<Pomset>> memo_;
};

}  // namespace

bool SatisfiesContextGrammar(const Pomset& p) {
  if (p.hole_count() != 1) return false;
  if (p.kind() == Pomset::Kind::kPrim) return p.label().is_hole();
  int carrying = 0;
  for (const Pomset& c : p.children()) {
    if (c.hole_count() == 0) continue;
    ++carrying;
    if (!SatisfiesContextGrammar(c)) return false;
  }
  return carrying == 1;
}

absl::StatusOr<SpContext> SpContext::Create(Pomset p) {
  if (!SatisfiesContextGrammar(p)) {
    return absl::InvalidArgumentError(
        absl::StrCat("'", p.key(), "' must contain exactly one hole"));
  }
  return SpContext(std::move(p));
}

Pomset Plug(const SpContext& c, const Pomset& u) { return Substitute(c.pomset(), u); }

PomsetLanguage PlugLang(const SpContext& c, const PomsetLanguage& l) {
  PomsetLanguage out;
  for (const Pomset& u : l) out.Insert(Plug(c, u));
  return out;
}

absl::StatusOr<GeneralContext> GeneralContext::Create(LabelledPoset p) {
  int holes = 0;
  for (const Label& l : p.labels()) holes += l.is_hole() ? 1 : 0;
  if (holes != 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("a context needs exactly one hole, found ", holes));
  }
  const int hole = HoleNode(p);
  return GeneralContext(std::move(p), hole);
}

GeneralContext ToGeneralContext(const SpContext& c) {
  return *GeneralContext::Create(ToPoset(c.pomset()));
}

LabelledPoset PlugGeneral(const GeneralContext& c, const Pomset& u) {
  const LabelledPoset& p = c.poset();
  const LabelledPoset q = ToPoset(u);
  const int h = c.hole();
  // Old context node -> new id; u's nodes occupy [h, h + |u|).
  std::vector<int> renumber(p.size());
  for (int i = 0; i < p.size(); ++i) renumber[i] = i < h ? i : i - 1 + q.size();
  std::vector<Label> labels;
  for (int i = 0; i < h; ++i) labels.push_back(p.label(i));
  for (int i = 0; i < q.size(); ++i) labels.push_back(q.label(i));
  for (int i = h + 1; i < p.size(); ++i) labels.push_back(p.label(i));

  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < p.size(); ++a) {
    for (int b = 0; b < p.size(); ++b) {
      if (a == h || b == h || !p.Less(a, b)) continue;
      edges.emplace_back(renumber[a], renumber[b]);
    }
  }
  for (int a = 0; a < q.size(); ++a) {
    for (int b = 0; b < q.size(); ++b) {
      if (q.Less(a, b)) edges.emplace_back(h + a, h + b);
    }
  }
  for (int s = 0; s < p.size(); ++s) {
    if (s == h) continue;
    for (int x = 0; x < q.size(); ++x) {
      if (p.Less(s, h)) edges.emplace_back(renumber[s], h + x);
      if (p.Less(h, s)) edges.emplace_back(h + x, renumber[s]);
    }
  }
  return *LabelledPoset::FromRelation(std::move(labels), edges);
}

bool ContextSubsumes(const SpContext& c, const SpContext& c_prime) {
  return PosetSubsumes(ToPoset(c.pomset()), ToPoset(c_prime.pomset()));
}

bool IsSequential(const SpContext& c) {
  auto has_par = [](auto&& self, const Pomset& p) -> bool {
    if (p.kind() == Pomset::Kind::kPar) return true;
    for (const Pomset& child : p.children()) {
      if (self(self, child)) return true;
    }
    return false;
  };
  return !has_par(has_par, c.pomset());
}

absl::StatusOr<ParallelFactor> FactorParallel(const SpContext& c, const Pomset& u,
                                              const Pomset& v, const Pomset& w) {
  if (u.is_empty() || !u.IsWord()) return Precondition("U must be a nonempty word");
  if (Plug(c, u) != Par(v, w)) return Precondition("C[U] differs from V || W");

  const Pomset& root = c.pomset();
  if (root.kind() != Pomset::Kind::kPar) {
    // C[U] is connected, so one side is empty.
    if (w.is_empty()) return ParallelFactor{Side::kLeft, c};
    return ParallelFactor{Side::kRight, c};
  }
  Pomset holder;
  std::vector<Pomset> others;
  for (const Pomset& part : root.children()) {
    if (part.hole_count() > 0) {
      holder = part;
    } else {
      others.push_back(part);
    }
  }
  const Pomset plugged = Substitute(holder, u);
  auto remove_one = [&](const Pomset& side) -> std::optional<std::vector<Pomset>> {
    std::vector<Pomset> parts = side.ParComponents();
    auto it = std::find(parts.begin(), parts.end(), plugged);
    if (it == parts.end()) return std::nullopt;
    parts.erase(it);
    return parts;
  };
  for (Side side : {Side::kLeft, Side::kRight}) {
    std::optional<std::vector<Pomset>> rest = remove_one(side == Side::kLeft ? v : w);
    if (!rest.has_value()) continue;
    rest->push_back(holder);
    absl::StatusOr<SpContext> sub = SpContext::Create(ParAll(*rest));
    if (!sub.ok()) return sub.status();
    return ParallelFactor{side, *std::move(sub)};
  }
  return absl::InternalError("hole component not found on either side");
}

absl::StatusOr<SpContext> SpifyContext(const GeneralContext& c) {
  LabelledPoset p = c.poset();
  const int h = c.hole();
  if (!IsNFree(p.Restrict(AllBut(p.size(), h)))) {
    return Precondition("C[1] is not series-parallel");
  }
  while (std::optional<std::array<int, 4>> n = FindNPattern(p)) {
    const auto [s1, s2, s3, s4] = *n;
    absl::StatusOr<LabelledPoset> next;
    if (h == s1) {
      next = p.WithEdge(h, s4);
    } else if (h == s2) {
      next = p.WithEdge(h, s1);
    } else if (h == s3) {
      next = p.WithEdge(s4, h);
    } else if (h == s4) {
      next = p.WithEdge(s1, h);
    } else {
      return absl::InternalError("N-pattern avoids the hole");
    }
    if (!next.ok()) return next.status();
    p = *std::move(next);
  }
  absl::StatusOr<Pomset> term = FromPoset(p, /*allow_hole=*/true);
  if (!term.ok()) return term.status();
  return SpContext::Create(*std::move(term));
}

absl::StatusOr<SpContext> EraseTo(const SpContext& c, const Pomset& v) {
  const LabelledPoset p = ToPoset(c.pomset());
  const int h = HoleNode(p);
  const uint64_t keep = AllBut(p.size(), h);
  const LabelledPoset target = ToPoset(v);
  std::optional<std::vector<int>> witness =
      FindSubsumptionWitness(p.Restrict(keep), target);
  if (!witness.has_value()) return Precondition("V is not below C[1]");

  // Node i of the restriction is node i (< h) or i + 1 of p.
  auto original = [h](int i) { return i < h ? i : i + 1; };
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < p.size(); ++a) {
    for (int b = 0; b < p.size(); ++b) {
      if (p.Less(a, b)) edges.emplace_back(a, b);
    }
  }
  for (int i = 0; i < target.size(); ++i) {
    for (int j = 0; j < target.size(); ++j) {
      if (i != j && target.Leq((*witness)[i], (*witness)[j])) {
        edges.emplace_back(original(i), original(j));
      }
    }
  }
  absl::StatusOr<LabelledPoset> extended =
      LabelledPoset::FromRelation(p.labels(), edges);
  if (!extended.ok()) return absl::InternalError("extended order is cyclic");
  absl::StatusOr<GeneralContext> general = GeneralContext::Create(*std::move(extended));
  if (!general.ok()) return general.status();
  return SpifyContext(*general);
}

absl::StatusOr<SpContext> SubsumeTo(const SpContext& c, const Label& a,
                                    const Pomset& v) {
  const LabelledPoset p = ToPoset(c.pomset());
  const int h = HoleNode(p);
  const LabelledPoset target = ToPoset(v);
  std::optional<std::vector<int>> witness =
      FindSubsumptionWitness(p.Relabelled(h, a), target);
  if (!witness.has_value()) return Precondition("V is not below C[a]");
  absl::StatusOr<Pomset> term =
      FromPoset(target.Relabelled((*witness)[h], Label::Hole()), /*allow_hole=*/true);
  if (!term.ok()) return term.status();
  return SpContext::Create(*std::move(term));
}

std::vector<SpContext> Occurrences(const Pomset& w, const Pomset& v) {
  OccurrenceFinder finder(v);
  std::vector<SpContext> out;
  for (const Pomset& p : finder.Find(w)) out.push_back(*SpContext::Create(p));
  return out;
}

}  // namespace ckah
