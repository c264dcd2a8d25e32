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

// Closure under exch ∪ contr′, where contr′ = {α ≤ α·α : α atom}.
//
// U belongs to the closure of {W} iff some stretch of U (every atom event
// replaced by a nonempty chain of copies inheriting its order) is ⊑ W. Both
// the membership test and the bounded generator below rest on this.

#ifndef CKAH_OBSERVATION_CLOSURE_H_
#define CKAH_OBSERVATION_CLOSURE_H_

#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "ckah/closure.h"
#include "ckah/downward_closure.h"
#include "ckah/pomset.h"
#include "ckah/term.h"

namespace ckah {

class ContractionChecker {
 public:
  // v ∈ cl({w}).
  bool Below(const Pomset& w, const Pomset& v);
  // v ∈ cl(l).
  bool InClosure(const PomsetLanguage& l, const Pomset& v);

 private:
  DownwardClosureCache cache_;
  std::unordered_map<std::string, bool> memo_;
};

// Decides v ∈ cl(⟦t⟧) by recursion on t, without enumerating ⟦t⟧:
//
//   e·f:  v = x·y with x ∈ cl(e), y ∈ cl(f), or v = x·α·y with
//         x·α ∈ cl(e) and α·y ∈ cl(f);
//   e∥f:  the events of v split into e-only, f-only and shared atoms such
//         that the two restrictions lie in cl(e) and cl(f);
//   e*:   v = 1 or v splits as for e·e* with a nonempty first factor.
//
// Stars are allowed. Not thread-safe (memoised).
class ClosureMembership {
 public:
  explicit ClosureMembership(Term t) : term_(std::move(t)) {}

  bool Contains(const Pomset& v) { return In(term_, v); }

 private:
  struct Info {
    bool empty = false;       // ⟦t⟧ = ∅
    int max_size = 0;         // -1 when unbounded
    std::map<std::string, std::pair<int, int>> actions;  // count range, max -1 = ∞
    std::set<std::string> alphabet;
  };
  const Info& Of(const Term& t);
  bool Admissible(const Info& info, const Pomset& v) const;
  bool In(const Term& t, const Pomset& v);
  bool InSeq(const Term& first, const Term& rest, const Pomset& v, bool star);
  bool InPar(const Term& t, const Pomset& v);

  Term term_;
  std::unordered_map<const void*, Info> info_;
  std::unordered_map<std::string, bool> memo_;
};

// A·B ∪ { x·α·y : x·α ∈ A, α·y ∈ B, α atom }, members of size ≤ max_nodes.
PomsetLanguage SeqMerge(const PomsetLanguage& a, const PomsetLanguage& b, int max_nodes);

// cl(A ∥ B) ∩ (≤ max_nodes) for closed A and B: every sp pomset below a
// gluing of P ∈ A and Q ∈ B along a partial matching of equal atoms.
absl::StatusOr<PomsetLanguage> ParMerge(const PomsetLanguage& a, const PomsetLanguage& b,
                                        int max_nodes, const Budget& budget = {});

// cl(⟦e⟧) ∩ (≤ max_nodes), exact, for an observation-free term (stars
// allowed). ResourceExhausted when an intermediate language exceeds the
// budget.
absl::StatusOr<PomsetLanguage> BoundedObservationClosure(const Term& e, int max_nodes,
                                                         const Budget& budget = {});

// Experimental: closure under the unreduced pack (exch, glue in both
// directions and contr over all Boolean classes of `omega`), applied to a
// language whose observation letters are the class letters of
// ObservationClassLetters. The result keeps only pomsets over actions and
// single atoms.
absl::StatusOr<ClosureResult> RawObservationClosure(const PomsetLanguage& l,
                                                    const std::vector<std::string>& omega,
                                                    const Budget& budget = {});

// The unreduced pack over class letters: exch, p ∨ q ≡ p + q and
// p ∧ q ≤ p · q for all nonempty classes p, q of atoms of `omega`.
absl::StatusOr<HypothesisSet> RawObservationPack(const std::vector<std::string>& omega);

// Sends each class letter to the sum of its atom letters.
std::map<std::string, Term> ClassReification(const std::vector<std::string>& omega);

// Replaces each {p} by the letter of its class of atoms (0 for ⊥). A class
// with one atom is that atom's letter; larger classes are `{@{..}+@{..}}`.
Term ObservationClassLetters(const Term& e, const std::vector<std::string>& omega);

}  // namespace ckah

#endif  // CKAH_OBSERVATION_CLOSURE_H_
