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


// Equivalence decisions with witnesses.
//
// Star-free terms are decided outright. With a star, both sides are compared
// on their closures restricted to pomsets of at most `bound` events; since
// the packs used here never let a larger pomset derive a smaller one, a
// difference found at some bound persists at every larger bound.

#ifndef CKAH_DECISION_H_
#define CKAH_DECISION_H_

#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "ckah/closure.h"
#include "ckah/hypothesis.h"
#include "ckah/pomset.h"
#include "ckah/term.h"

namespace ckah {

enum class VerdictKind { kEquivalent, kEquivalentUpTo, kDifferent, kInconclusive };

std::string VerdictName(VerdictKind kind);

struct Verdict {
  VerdictKind kind = VerdictKind::kInconclusive;
  // The size bound used; meaningful for kEquivalentUpTo and for starred terms.
  int bound = 0;
  // Smallest pomset in one closure but not the other.
  std::optional<Pomset> witness;
  bool witness_in_left = false;
  // Inclusions between the closures, when known. For starred terms `true`
  // holds up to `bound` only; `false` is definitive.
  std::optional<bool> left_leq_right;
  std::optional<bool> right_leq_left;
  std::string reason;
  // Oracle comparison outcome when requested; empty otherwise.
  std::string cross_check;
};

struct DecideOptions {
  int bound = 12;
  Budget budget;
  // Recomputes the verdict through an independent path and records the
  // comparison in Verdict::cross_check.
  bool cross_check = false;
};

// e ≡obs f over Ω = `omega` (observations of both terms when empty).
absl::StatusOr<Verdict> DecideCkao(const Term& e, const Term& f,
                                   const std::vector<std::string>& omega = {},
                                   const DecideOptions& options = {});

// e ≤obs f; for starred terms the answer holds up to `options.bound`.
absl::StatusOr<bool> LeqCkao(const Term& e, const Term& f,
                             const std::vector<std::string>& omega = {},
                             const DecideOptions& options = {});

// e ≡H f for observation-free terms.
absl::StatusOr<Verdict> Decide(const Term& e, const Term& f, const HypothesisSet& h,
                               const DecideOptions& options = {});

// The obs closure of e restricted to `bound` events, over reified atoms.
absl::StatusOr<ClosureResult> CkaoClosure(const Term& e, const std::vector<std::string>& omega,
                                          const DecideOptions& options = {});

// The H closure of e restricted to `bound` events.
absl::StatusOr<ClosureResult> ClosureOf(const Term& e, const HypothesisSet& h,
                                        const DecideOptions& options = {});

}  // namespace ckah

#endif  // CKAH_DECISION_H_
