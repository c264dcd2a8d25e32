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

// H-closure of finite pomset languages.
//
// The generic engine saturates the rule "if C[⟦f⟧] ⊆ S then C[⟦e⟧] ⊆ S" over
// the contexts C at which some member of ⟦f⟧ occurs in some member of S. The
// exchange law is never instantiated: its closure is downward closure.

#ifndef CKAH_CLOSURE_H_
#define CKAH_CLOSURE_H_

#include <optional>
#include <string>

#include "absl/status/statusor.h"
#include "ckah/hypothesis.h"
#include "ckah/pomset.h"
#include "ckah/semantics.h"
#include "ckah/term.h"

namespace ckah {

struct Budget {
  int max_language_size = 200000;
  int max_leaf_count = 64;
  int max_iterations = 1000000;
};

enum class ClosureStatus { kComplete, kTruncated };

struct ClosureResult {
  PomsetLanguage language;
  ClosureStatus status = ClosureStatus::kComplete;
  // Why the fixpoint was not reached; empty when complete.
  std::string reason;

  bool complete() const { return status == ClosureStatus::kComplete; }
};

// Generic closure. FailedPrecondition if `h` carries the exch flag.
absl::StatusOr<ClosureResult> Close(const PomsetLanguage& l, const HypothesisSet& h,
                                    const Budget& budget = {});

// Exch-closure: the union of the downward closures of the members.
PomsetLanguage CloseExch(const PomsetLanguage& l);

// Closure restricted to sequential contexts. Requires a word language and a
// grounded, ∥-free, exch-free `h`.
absl::StatusOr<ClosureResult> CloseSeq(const PomsetLanguage& l, const HypothesisSet& h,
                                       const Budget& budget = {});

// close(close_exch(L), H \ exch). Requires every non-exch left-hand side to
// be 1 or a single letter.
absl::StatusOr<ClosureResult> CloseFactorized(const PomsetLanguage& l,
                                              const HypothesisSet& h,
                                              const Budget& budget = {});

// Alternates CloseExch and Close until neither adds anything.
absl::StatusOr<ClosureResult> CloseJoint(const PomsetLanguage& l, const HypothesisSet& h,
                                         const Budget& budget = {});

// Dispatches on the shape of `h`: Close without exch, CloseFactorized when
// its precondition holds, CloseJoint otherwise.
absl::StatusOr<ClosureResult> CloseUnder(const PomsetLanguage& l, const HypothesisSet& h,
                                         const Budget& budget = {});

struct LanguageComparison {
  bool equal = true;
  // A member of the symmetric difference, smallest first.
  std::optional<Pomset> witness;
  // True if the witness belongs to the first language.
  bool witness_in_first = false;
};

LanguageComparison LanguageEqual(const PomsetLanguage& l, const PomsetLanguage& k);

// ↓⟦e⟧ ⊆ ↓⟦f⟧, both sides evaluated at `unroll`. ResourceExhausted when a
// closure is truncated.
absl::StatusOr<bool> LeqSemantic(const Term& e, const Term& f, const HypothesisSet& h,
                                 const Budget& budget = {}, UnrollBudget unroll = {});

// Budget overridden by CKAH_MAX_LANGUAGE / CKAH_MAX_ITERATIONS when set.
Budget BudgetFromEnvironment(Budget defaults = {});

}  // namespace ckah

#endif  // CKAH_CLOSURE_H_
