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


// Randomised and exhaustive law checks shared by the unit tests and the
// acceptance binary. Each returns a tally instead of asserting so that the
// same code can run at small scale under gtest and at full scale in
// acceptance.

#ifndef CKAH_TESTS_LAWS_H_
#define CKAH_TESTS_LAWS_H_

#include <string>

#include "oracles.h"

namespace ckah::testing {

struct LawTally {
  int cases = 0;
  int failures = 0;
  // Instances dropped before checking (e.g. a truncated closure).
  int skipped = 0;
  std::string first_failure;

  void Fail(const std::string& what);
  void Merge(const LawTally& other);
  bool ok() const { return failures == 0; }
  std::string Summary() const;
};

// downward_closure against OracleDownwardClosure on every sp-pomset with
// 1..max_leaves events over `alphabet`.
LawTally CheckDownwardClosureExact(int max_leaves, const std::vector<std::string>& alphabet);

// Context lemmas: monotonicity, parallel factorisation, sp-preservation,
// erasure and subsumption constructions, substitution identities and
// sequential contexts, `per_lemma` random instances each.
LawTally CheckContextLemmas(Rng& rng, int per_lemma);

// SpifyContext on every general context with `nodes` events (the hole is
// node 0) whose Empty-plug is N-free.
LawTally CheckSpifyExhaustive(int nodes);

// Closure laws 1-5 and 7 on random (L, K, grounded H); truncated closures
// are skipped until `instances` complete ones were checked.
LawTally CheckClosureLaws(Rng& rng, int instances);

// close_exch(L) membership against "some member of L subsumes it", for
// every language of at most `max_members` sp-pomsets with at most
// `max_leaves` events over `alphabet`.
LawTally CheckExchCharacterisation(int max_members, int max_leaves,
                                   const std::vector<std::string>& alphabet);
// The same on `instances` random languages.
LawTally CheckExchCharacterisationRandom(Rng& rng, int instances, int max_members,
                                         int max_leaves,
                                         const std::vector<std::string>& alphabet);

// close_factorized is ⊑-down-closed and agrees with the joint closure.
LawTally CheckFactorisation(Rng& rng, int instances);

// close = close_seq on words and close(L ∥ L′) = close(L) ∥ close(L′) for
// grounded sequential H.
LawTally CheckLifting(Rng& rng, int instances);

// Reflexivity and axiom-rewrite congruence of decide_ckao on random
// star-free terms with |Ω| ≤ 2.
LawTally CheckCkaoCongruence(Rng& rng, int instances, int max_leaves);

// Reification conditions for the observation reification with |Ω| ≤ 2.
LawTally CheckObservationReification(Rng& rng, int samples);

// One-star pairs: bounded semantics monotone in k and no Different verdict
// turning into an equivalence as k grows over 2..max_bound.
LawTally CheckBoundedStar(Rng& rng, int pairs, int max_bound);

}  // namespace ckah::testing

#endif  // CKAH_TESTS_LAWS_H_
