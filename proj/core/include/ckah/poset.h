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

// Explicit finite labelled posets. These are the reference representation
// against which the canonical sp-terms of pomset.h are checked, and the only
// representation able to hold non-series-parallel shapes.

#ifndef CKAH_POSET_H_
#define CKAH_POSET_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "ckah/label.h"
#include "ckah/pomset.h"

namespace ckah {

class LabelledPoset {
 public:
  static constexpr int kMaxNodes = 64;

  // Builds the reflexive-transitive closure of `edges` over nodes
  // 0..labels.size()-1. Fails if the closure is not antisymmetric or there
  // are more than kMaxNodes nodes.
  static absl::StatusOr<LabelledPoset> FromRelation(
      std::vector<Label> labels, const std::vector<std::pair<int, int>>& edges);

  LabelledPoset() = default;

  int size() const { return static_cast<int>(labels_.size()); }
  const Label& label(int node) const { return labels_[node]; }
  const std::vector<Label>& labels() const { return labels_; }

  bool Leq(int a, int b) const { return (up_[a] >> b) & 1u; }
  bool Less(int a, int b) const { return a != b && Leq(a, b); }
  bool Comparable(int a, int b) const { return Leq(a, b) || Leq(b, a); }

  // Bitmask of nodes above / below `node` (inclusive).
  uint64_t UpSet(int node) const { return up_[node]; }
  uint64_t DownSet(int node) const { return down_[node]; }

  // Number of pairs (a, b) with a < b.
  int StrictPairCount() const;

  // Pairs (a, b) with a < b and nothing strictly in between.
  std::vector<std::pair<int, int>> CoveringPairs() const;

  // Nodes in `keep` (bitmask), renumbered in increasing order.
  LabelledPoset Restrict(uint64_t keep) const;

  // Adds a < b (plus transitive consequences). Fails on a cycle.
  absl::StatusOr<LabelledPoset> WithEdge(int a, int b) const;

  // Returns a copy with `node` relabelled.
  LabelledPoset Relabelled(int node, Label label) const;

  // Same carrier and labels; order is the transitive closure of both orders.
  // Fails if the result is not antisymmetric or the labellings differ.
  absl::StatusOr<LabelledPoset> Join(const LabelledPoset& other) const;

  std::string ToString() const;

 private:
  std::vector<Label> labels_;
  std::vector<uint64_t> up_;
  std::vector<uint64_t> down_;
};

// Nodes are numbered by the left-to-right order of leaves in `u`'s term.
LabelledPoset ToPoset(const Pomset& u);

// Recovers the canonical sp-term of an N-free poset by recursively splitting
// on connected components of the comparability and incomparability graphs.
// Fails with InvalidArgument ("NotSeriesParallel") on an N-shaped poset, and
// with InvalidArgument if a hole label occurs and `allow_hole` is false.
absl::StatusOr<Pomset> FromPoset(const LabelledPoset& p, bool allow_hole = false);

// An N-pattern (s1, s2, s3, s4): s1 ≤ s3, s2 ≤ s3, s2 ≤ s4, s1 ≰ s4,
// s2 ≰ s1, s4 ≰ s3. The first one in lexicographic node order is returned.
std::optional<std::array<int, 4>> FindNPattern(const LabelledPoset& p);
bool IsNFree(const LabelledPoset& p);

// Label-preserving order isomorphism.
bool Isomorphic(const LabelledPoset& p, const LabelledPoset& q);

// A label-preserving bijection h from the nodes of `v` to the nodes of `u`
// with s ≤_v s' ⇒ h(s) ≤_u h(s'), i.e. a witness of u ⊑ v. Backtracking
// search with label and up/down-set cardinality pruning.
std::optional<std::vector<int>> FindSubsumptionWitness(const LabelledPoset& v,
                                                       const LabelledPoset& u);
// u ⊑ v on explicit posets.
bool PosetSubsumes(const LabelledPoset& v, const LabelledPoset& u);

// Above this many events `Subsumes` switches from the bijection search to
// the structural check of downward_closure.h.
inline constexpr int kSubsumptionSearchLimit = 12;

// u ⊑ v: u has the events of v and at least its order.
bool Subsumes(const Pomset& v, const Pomset& u);

}  // namespace ckah

#endif  // CKAH_POSET_H_
