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

#include "ckah/poset.h"

#include <algorithm>
#include <bit>
#include <map>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "ckah/downward_closure.h"

namespace ckah {
namespace {

constexpr uint64_t Bit(int i) { return uint64_t{1} << i; }

// Closes `up` transitively (Warshall on bitsets) and derives the down sets.
// Returns false if the closure is not antisymmetric.
bool CloseOrder(std::vector<uint64_t>& up, std::vector<uint64_t>& down) {
  const int n = static_cast<int>(up.size());
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (up[i] & Bit(k)) up[i] |= up[k];
    }
  }
  down.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (up[i] & Bit(j)) down[j] |= Bit(i);
    }
  }
  for (int i = 0; i < n; ++i) {
    if ((up[i] & down[i]) != Bit(i)) return false;
  }
  return true;
}

std::map<std::string, int> LabelCounts(const LabelledPoset& p) {
  std::map<std::string, int> counts;
  for (const Label& l : p.labels()) ++counts[l.name()];
  return counts;
}

int AssignPoset(const Pomset& u, int next, std::vector<Label>& labels,
                std::vector<uint64_t>& up) {
  switch (u.kind()) {
    case Pomset::Kind::kEmpty:
      return next;
    case Pomset::Kind::kPrim:
      labels.push_back(u.label());
      up.push_back(Bit(next));
      return next + 1;
    case Pomset::Kind::kPar:
      for (const Pomset& c : u.children()) next = AssignPoset(c, next, labels, up);
      return next;
    case Pomset::Kind::kSeq: {
      std::vector<std::pair<int, int>> ranges;
      for (const Pomset& c : u.children()) {
        const int begin = next;
        next = AssignPoset(c, next, labels, up);
        ranges.emplace_back(begin, next);
      }
      // Everything in an earlier factor sits below everything after it.
      uint64_t later = 0;
      for (auto it = ranges.rbegin(); it != ranges.rend(); ++it) {
        for (int node = it->first; node < it->second; ++node) up[node] |= later;
        for (int node = it->first; node < it->second; ++node) later |= Bit(node);
      }
      return next;
    }
  }
  return next;
}

// Connected components of the graph on `mask` whose adjacency is given by
// `neighbours(node) & mask`.
template <typename Adjacency>
std::vector<uint64_t> Components(uint64_t mask, Adjacency neighbours) {
  std::vector<uint64_t> out;
  while (mask) {
    uint64_t component = 0;
    uint64_t frontier = mask & (~mask + 1);
    while (frontier) {
      component |= frontier;
      uint64_t next = 0;
      for (uint64_t f = frontier; f; f &= f - 1) {
        next |= neighbours(std::countr_zero(f));
      }
      frontier = next & mask & ~component;
    }
    out.push_back(component);
    mask &= ~component;
  }
  return out;
}

absl::StatusOr<Pomset> Decompose(const LabelledPoset& p, uint64_t mask) {
  const int count = std::popcount(mask);
  if (count == 0) return Pomset();
  if (count == 1) return Pomset::Prim(p.label(std::countr_zero(mask)));

  auto comparable = [&](int x) { return p.UpSet(x) | p.DownSet(x); };
  std::vector<uint64_t> parts = Components(mask, comparable);
  if (parts.size() > 1) {
    std::vector<Pomset> children;
    for (uint64_t part : parts) {
      absl::StatusOr<Pomset> child = Decompose(p, part);
      if (!child.ok()) return child.status();
      children.push_back(*std::move(child));
    }
    return ParAll(children);
  }

  auto incomparable = [&](int x) { return ~comparable(x); };
  parts = Components(mask, incomparable);
  if (parts.size() > 1) {
    std::sort(parts.begin(), parts.end(), [&](uint64_t a, uint64_t b) {
      return p.Less(std::countr_zero(a), std::countr_zero(b));
    });
    for (size_t i = 0; i + 1 < parts.size(); ++i) {
      for (uint64_t a = parts[i]; a; a &= a - 1) {
        const int node = std::countr_zero(a);
        uint64_t later = 0;
        for (size_t j = i + 1; j < parts.size(); ++j) later |= parts[j];
        if ((p.UpSet(node) & later) != later) {
          return absl::InvalidArgumentError(
              "NotSeriesParallel: inconsistent sequential factors");
        }
      }
    }
    std::vector<Pomset> children;
    for (uint64_t part : parts) {
      absl::StatusOr<Pomset> child = Decompose(p, part);
      if (!child.ok()) return child.status();
      children.push_back(*std::move(child));
    }
    return SeqAll(children);
  }
  return absl::InvalidArgumentError(
      "NotSeriesParallel: poset contains an N-pattern");
}

}  // namespace

absl::StatusOr<LabelledPoset> LabelledPoset::FromRelation(
    std::vector<Label> labels, const std::vector<std::pair<int, int>>& edges) {
  const int n = static_cast<int>(labels.size());
  if (n > kMaxNodes) {
    return absl::InvalidArgumentError(
        absl::StrCat("poset has ", n, " nodes; at most ", kMaxNodes, " supported"));
  }
  LabelledPoset p;
  p.labels_ = std::move(labels);
  p.up_.resize(n);
  for (int i = 0; i < n; ++i) p.up_[i] = Bit(i);
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      return absl::InvalidArgumentError(
          absl::StrCat("edge (", a, ",", b, ") out of range"));
    }
    p.up_[a] |= Bit(b);
  }
  if (!CloseOrder(p.up_, p.down_)) {
    return absl::InvalidArgumentError("relation is not antisymmetric");
  }
  return p;
}

int LabelledPoset::StrictPairCount() const {
  int total = 0;
  for (uint64_t u : up_) total += std::popcount(u) - 1;
  return total;
}

std::vector<std::pair<int, int>> LabelledPoset::CoveringPairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a) {
    for (int b = 0; b < size(); ++b) {
      if (!Less(a, b)) continue;
      const uint64_t between = (up_[a] & down_[b]) & ~Bit(a) & ~Bit(b);
      if (between == 0) out.emplace_back(a, b);
    }
  }
  return out;
}

LabelledPoset LabelledPoset::Restrict(uint64_t keep) const {
  std::vector<int> old_ids;
  for (uint64_t k = keep; k; k &= k - 1) old_ids.push_back(std::countr_zero(k));
  LabelledPoset out;
  const int m = static_cast<int>(old_ids.size());
  out.up_.assign(m, 0);
  for (int i = 0; i < m; ++i) {
    out.labels_.push_back(labels_[old_ids[i]]);
    for (int j = 0; j < m; ++j) {
      if (Leq(old_ids[i], old_ids[j])) out.up_[i] |= Bit(j);
    }
  }
  CloseOrder(out.up_, out.down_);
  return out;
}

absl::StatusOr<LabelledPoset> LabelledPoset::WithEdge(int a, int b) const {
  if (a != b && Leq(b, a)) {
    return absl::InvalidArgumentError(
        absl::StrCat("adding ", a, "<", b, " creates a cycle"));
  }
  LabelledPoset out = *this;
  for (uint64_t below = down_[a]; below; below &= below - 1) {
    out.up_[std::countr_zero(below)] |= up_[b];
  }
  CloseOrder(out.up_, out.down_);
  return out;
}

LabelledPoset LabelledPoset::Relabelled(int node, Label label) const {
  LabelledPoset out = *this;
  out.labels_[node] = std::move(label);
  return out;
}

absl::StatusOr<LabelledPoset> LabelledPoset::Join(const LabelledPoset& other) const {
  if (labels_ != other.labels_) {
    return absl::InvalidArgumentError("joined posets must share their labelling");
  }
  LabelledPoset out = *this;
  for (int i = 0; i < size(); ++i) out.up_[i] |= other.up_[i];
  if (!CloseOrder(out.up_, out.down_)) {
    return absl::InvalidArgumentError("joined order is not antisymmetric");
  }
  return out;
}

std::string LabelledPoset::ToString() const {
  std::vector<std::string> nodes;
  for (int i = 0; i < size(); ++i) nodes.push_back(absl::StrCat(i, ":", labels_[i].name()));
  std::vector<std::string> edges;
  for (const auto& [a, b] : CoveringPairs()) edges.push_back(absl::StrCat(a, "<", b));
  return absl::StrCat("{", absl::StrJoin(nodes, " "), " | ", absl::StrJoin(edges, " "),
                      "}");
}

LabelledPoset ToPoset(const Pomset& u) {
  std::vector<Label> labels;
  std::vector<uint64_t> up;
  AssignPoset(u, 0, labels, up);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < static_cast<int>(up.size()); ++i) {
    for (uint64_t b = up[i] & ~Bit(i); b; b &= b - 1) {
      edges.emplace_back(i, std::countr_zero(b));
    }
  }
  // Already transitive; FromRelation only re-derives the down sets.
  return *LabelledPoset::FromRelation(std::move(labels), edges);
}

absl::StatusOr<Pomset> FromPoset(const LabelledPoset& p, bool allow_hole) {
  if (!allow_hole) {
    for (const Label& l : p.labels()) {
      if (l.is_hole()) {
        return absl::InvalidArgumentError("poset carries a hole label");
      }
    }
  }
  const uint64_t all = p.size() == 64 ? ~uint64_t{0} : Bit(p.size()) - 1;
  return Decompose(p, all);
}

std::optional<std::array<int, 4>> FindNPattern(const LabelledPoset& p) {
  const int n = p.size();
  for (int s1 = 0; s1 < n; ++s1) {
    for (int s2 = 0; s2 < n; ++s2) {
      if (p.Leq(s2, s1)) continue;
      for (int s3 = 0; s3 < n; ++s3) {
        if (!p.Leq(s1, s3) || !p.Leq(s2, s3)) continue;
        for (int s4 = 0; s4 < n; ++s4) {
          if (p.Leq(s2, s4) && !p.Leq(s1, s4) && !p.Leq(s4, s3)) {
            return std::array<int, 4>{s1, s2, s3, s4};
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool IsNFree(const LabelledPoset& p) { return !FindNPattern(p).has_value(); }

std::optional<std::vector<int>> FindSubsumptionWitness(const LabelledPoset& v,
                                                       const LabelledPoset& u) {
  const int n = v.size();
  if (u.size() != n) return std::nullopt;
  if (LabelCounts(v) != LabelCounts(u)) return std::nullopt;
  if (v.StrictPairCount() > u.StrictPairCount()) return std::nullopt;

  // Map v's nodes bottom-up so constraints from predecessors prune early.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const int da = std::popcount(v.DownSet(a)), db = std::popcount(v.DownSet(b));
    return da != db ? da < db : a < b;
  });

  std::vector<int> image(n, -1);
  uint64_t used = 0;
  auto extend = [&](auto&& self, int depth) -> bool {
    if (depth == n) return true;
    const int s = order[depth];
    uint64_t need_below = 0, need_above = 0;
    for (int d = 0; d < depth; ++d) {
      const int t = order[d];
      if (v.Leq(t, s)) need_below |= Bit(image[t]);
      if (v.Leq(s, t)) need_above |= Bit(image[t]);
    }
    const int down_count = std::popcount(v.DownSet(s));
    const int up_count = std::popcount(v.UpSet(s));
    for (int c = 0; c < n; ++c) {
      if (used & Bit(c)) continue;
      if (u.label(c) != v.label(s)) continue;
      if (std::popcount(u.DownSet(c)) < down_count) continue;
      if (std::popcount(u.UpSet(c)) < up_count) continue;
      if ((need_below & ~u.DownSet(c)) != 0) continue;
      if ((need_above & ~u.UpSet(c)) != 0) continue;
      image[s] = c;
      used |= Bit(c);
      if (self(self, depth + 1)) return true;
      used &= ~Bit(c);
      image[s] = -1;
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return image;
}

bool PosetSubsumes(const LabelledPoset& v, const LabelledPoset& u) {
  return FindSubsumptionWitness(v, u).has_value();
}

bool Isomorphic(const LabelledPoset& p, const LabelledPoset& q) {
  if (p.size() != q.size()) return false;
  if (p.StrictPairCount() != q.StrictPairCount()) return false;
  if (IsNFree(p) && IsNFree(q)) {
    absl::StatusOr<Pomset> a = FromPoset(p, /*allow_hole=*/true);
    absl::StatusOr<Pomset> b = FromPoset(q, /*allow_hole=*/true);
    return a.ok() && b.ok() && *a == *b;
  }
  // An order-preserving bijection between orders of equal cardinality also
  // reflects the order.
  return FindSubsumptionWitness(p, q).has_value();
}

bool Subsumes(const Pomset& v, const Pomset& u) {
  if (v.size() != u.size()) return false;
  if (v == u) return true;
  if (v.size() <= kSubsumptionSearchLimit) {
    return PosetSubsumes(ToPoset(v), ToPoset(u));
  }
  return SubsumesStructural(v, u);
}

}  // namespace ckah
