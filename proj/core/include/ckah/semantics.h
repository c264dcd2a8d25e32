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

// Pomset-language semantics of terms.

#ifndef CKAH_SEMANTICS_H_
#define CKAH_SEMANTICS_H_

#include "absl/status/statusor.h"
#include "ckah/pomset.h"
#include "ckah/term.h"

namespace ckah {

struct UnrollBudget {
  // Members with more events than this are dropped.
  int max_nodes = 12;
};

// ⟦e⟧ for a term without star and without observations. Fails with
// FailedPrecondition ("ContainsStar" / "ContainsObs") otherwise.
absl::StatusOr<PomsetLanguage> SemanticsStarFree(const Term& e);

// { U ∈ ⟦e⟧ : |U| ≤ budget.max_nodes }, exact. Fails on observations.
absl::StatusOr<PomsetLanguage> SemanticsBounded(const Term& e, UnrollBudget budget);

// Size-bounded composition helpers.
PomsetLanguage LangSeqBounded(const PomsetLanguage& l, const PomsetLanguage& k,
                              int max_nodes);
PomsetLanguage LangParBounded(const PomsetLanguage& l, const PomsetLanguage& k,
                              int max_nodes);
// L* ∩ (≤ max_nodes).
PomsetLanguage LangStarBounded(const PomsetLanguage& l, int max_nodes);

}  // namespace ckah

#endif  // CKAH_SEMANTICS_H_
