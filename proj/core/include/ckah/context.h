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

// Pomset contexts: pomsets over Σ ∪ {*} with exactly one hole.

#ifndef CKAH_CONTEXT_H_
#define CKAH_CONTEXT_H_

#include <compare>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "ckah/label.h"
#include "ckah/pomset.h"
#include "ckah/poset.h"

namespace ckah {

// A series-parallel context, stored as a canonical sp-term with one hole leaf.
class SpContext {
 public:
  // Fails unless `p` has exactly one hole leaf.
  static absl::StatusOr<SpContext> Create(Pomset p);
  static SpContext Hole() { return SpContext(Pomset::Hole()); }

  const Pomset& pomset() const { return pomset_; }
  const std::string& ToString() const { return pomset_.key(); }

  friend bool operator==(const SpContext&, const SpContext&) = default;
  friend std::strong_ordering operator<=>(const SpContext& a, const SpContext& b) {
    return a.pomset_ <=> b.pomset_;
  }

 private:
  explicit SpContext(Pomset p) : pomset_(std::move(p)) {}
  Pomset pomset_;
};

// True iff exactly one child of every internal node on the path to the hole
// carries the hole, and there is exactly one hole overall.
bool SatisfiesContextGrammar(const Pomset& p);

// C[U].
Pomset Plug(const SpContext& c, const Pomset& u);
// C[L] = { C[U] : U ∈ L }.
PomsetLanguage PlugLang(const SpContext& c, const PomsetLanguage& l);

// A context given as an explicit poset; it need not be series-parallel.
class GeneralContext {
 public:
  static absl::StatusOr<GeneralContext> Create(LabelledPoset p);

  const LabelledPoset& poset() const { return poset_; }
  int hole() const { return hole_; }

 private:
  GeneralContext(LabelledPoset p, int hole) : poset_(std::move(p)), hole_(hole) {}
  LabelledPoset poset_;
  int hole_;
};

GeneralContext ToGeneralContext(const SpContext& c);

// Poset-level plugging: the hole node is replaced by the nodes of `u`, which
// inherit its up- and down-set. Nodes of `u` take the hole's position in the
// numbering.
LabelledPoset PlugGeneral(const GeneralContext& c, const Pomset& u);

// c′ ⊑ c, comparing the two contexts as pomsets over Σ ∪ {*}.
bool ContextSubsumes(const SpContext& c, const SpContext& c_prime);

// True iff the context contains no parallel node.
bool IsSequential(const SpContext& c);

enum class Side { kLeft, kRight };

struct ParallelFactor {
  Side side;
  SpContext context;
};

// Given C[U] = V ∥ W with U a nonempty word, returns C′ such that either
// C = C′ ∥ W and C′[U] = V (kLeft) or C = V ∥ C′ and C′[U] = W (kRight).
absl::StatusOr<ParallelFactor> FactorParallel(const SpContext& c, const Pomset& u,
                                              const Pomset& v, const Pomset& w);

// Turns a context whose Empty-plug is N-free into an sp-context below it by
// repeatedly ordering the hole against one corner of an N-pattern.
absl::StatusOr<SpContext> SpifyContext(const GeneralContext& c);

// For V ⊑ C[1]: an sp-context C′ ⊑ C with C′[1] = V.
absl::StatusOr<SpContext> EraseTo(const SpContext& c, const Pomset& v);

// For V ⊑ C[a]: an sp-context C′ ⊑ C with C′[a] = V.
absl::StatusOr<SpContext> SubsumeTo(const SpContext& c, const Label& a,
                                    const Pomset& v);

// All contexts C (up to isomorphism) with C[v] = w, in canonical order.
std::vector<SpContext> Occurrences(const Pomset& w, const Pomset& v);

}  // namespace ckah

#endif  // CKAH_CONTEXT_H_
