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

// Series-parallel pomsets in canonical term form.
//
// A `Pomset` is an immutable, shared sp-term that is kept flattened and
// unit-free at all times:
//
//   * `Seq` nodes have at least two children, none of which is a `Seq`;
//   * `Par` nodes have at least two children, none of which is a `Par`, and
//     the children are sorted in canonical order (size, then key);
//   * the empty pomset only ever appears at the top level.
//
// Under these invariants two sp-pomsets are isomorphic iff their terms are
// structurally equal, which in turn holds iff their canonical keys coincide.

#ifndef CKAH_POMSET_H_
#define CKAH_POMSET_H_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "ckah/label.h"

namespace ckah {

class Pomset {
 public:
  enum class Kind { kEmpty, kPrim, kSeq, kPar };

  // The empty pomset.
  Pomset();

  static Pomset Empty() { return Pomset(); }
  static Pomset Prim(Label label);
  static Pomset Hole() { return Prim(Label::Hole()); }

  Kind kind() const;
  bool is_empty() const { return kind() == Kind::kEmpty; }

  // Only valid for kPrim.
  const Label& label() const;
  // Empty for kEmpty and kPrim.
  std::span<const Pomset> children() const;

  // Number of events (Prim leaves).
  int size() const;
  int hole_count() const;

  // Canonical serialization in the term grammar (`;` for sequential,
  // `||` for parallel, `1` for the empty pomset). Injective on canonical
  // forms, so it doubles as the identity of the pomset.
  const std::string& key() const;
  std::string ToString() const { return key(); }

  // The maximal sequential factors: [] for Empty, [*this] when not a Seq.
  std::vector<Pomset> SeqComponents() const;
  // The maximal parallel factors: [] for Empty, [*this] when not a Par.
  std::vector<Pomset> ParComponents() const;

  // True iff the pomset is totally ordered (the empty word included).
  bool IsWord() const;

  // Labels of all leaves, in left-to-right term order.
  std::vector<Label> Leaves() const;

  friend bool operator==(const Pomset& a, const Pomset& b);
  // Orders by size, then by key.
  friend std::strong_ordering operator<=>(const Pomset& a, const Pomset& b);

  template <typename H>
  friend H AbslHashValue(H h, const Pomset& p) {
    return H::combine(std::move(h), p.key());
  }

 private:
  struct Node;
  explicit Pomset(std::shared_ptr<const Node> node);
  static const std::shared_ptr<const Node>& EmptyNode();

  friend Pomset SeqAll(std::span<const Pomset> parts);
  friend Pomset ParAll(std::span<const Pomset> parts);

  std::shared_ptr<const Node> node_;
};

// Sequential composition u·v, canonicalized.
Pomset Seq(const Pomset& u, const Pomset& v);
// Parallel composition u ∥ v, canonicalized.
Pomset Par(const Pomset& u, const Pomset& v);
// n-ary versions; the empty span yields the empty pomset.
Pomset SeqAll(std::span<const Pomset> parts);
Pomset ParAll(std::span<const Pomset> parts);
inline Pomset SeqAll(std::initializer_list<Pomset> parts) {
  return SeqAll(std::span<const Pomset>(parts.begin(), parts.size()));
}
inline Pomset ParAll(std::initializer_list<Pomset> parts) {
  return ParAll(std::span<const Pomset>(parts.begin(), parts.size()));
}

// Shorthand for a single event.
inline Pomset Letter(std::string name) { return Pomset::Prim(Label(std::move(name))); }

// A finite, deduplicated set of sp-pomsets, iterated in canonical order.
class PomsetLanguage {
 public:
  using const_iterator = std::set<Pomset>::const_iterator;

  PomsetLanguage() = default;
  PomsetLanguage(std::initializer_list<Pomset> members) : members_(members) {}

  // Returns true if `p` was not already present.
  bool Insert(const Pomset& p) { return members_.insert(p).second; }
  void InsertAll(const PomsetLanguage& other) {
    members_.insert(other.begin(), other.end());
  }
  bool Contains(const Pomset& p) const { return members_.contains(p); }
  bool IsSubsetOf(const PomsetLanguage& other) const;

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const_iterator begin() const { return members_.begin(); }
  const_iterator end() const { return members_.end(); }

  // Largest member size; -1 for the empty language.
  int MaxSize() const;

  // One member per line, canonical order.
  std::string ToString() const;

  friend bool operator==(const PomsetLanguage&, const PomsetLanguage&) = default;

 private:
  std::set<Pomset> members_;
};

PomsetLanguage LangSeq(const PomsetLanguage& l, const PomsetLanguage& k);
PomsetLanguage LangPar(const PomsetLanguage& l, const PomsetLanguage& k);
PomsetLanguage LangUnion(const PomsetLanguage& l, const PomsetLanguage& k);
// Members with at most `max_size` events.
PomsetLanguage LangSizeFilter(const PomsetLanguage& l, int max_size);

}  // namespace ckah

#endif  // CKAH_POMSET_H_
