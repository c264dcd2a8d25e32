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


// Empirical checks of the four reification conditions for a letter map
// r: Σ → T(Γ) between hypothesis sets H and H′, plus r(⟦e⟧) = ⟦r(e)⟧.

#ifndef CKAH_REIFICATION_H_
#define CKAH_REIFICATION_H_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "ckah/closure.h"
#include "ckah/hypothesis.h"
#include "ckah/pomset.h"
#include "ckah/term.h"

namespace ckah {

struct ReificationInstance {
  // Letters absent from `r` are sent to themselves.
  std::map<std::string, Term> r;
  // Letters of Σ checked by condition (i).
  std::vector<std::string> sigma;
  std::set<std::string> gamma;
  HypothesisSet h;
  HypothesisSet h_prime;
};

struct ReificationSamples {
  // Languages over Γ for condition (iii).
  std::vector<PomsetLanguage> gamma_languages;
  // Star-free terms over Σ for r(⟦e⟧) = ⟦r(e)⟧.
  std::vector<Term> terms;
};

struct ReificationCheck {
  std::string condition;  // "i", "ii", "iii", "iv" or "sem"
  std::string subject;
  bool passed = false;
  std::string detail;
};

struct ReificationReport {
  std::vector<ReificationCheck> checks;

  bool passed() const;
  // True if every check of `condition` passed (vacuously when there are none).
  bool passed(const std::string& condition) const;
  std::string ToString() const;
};

ReificationReport CheckReificationConditions(const ReificationInstance& instance,
                                             const ReificationSamples& samples,
                                             const Budget& budget = {});

// The reification of observations: Σ is the class letters of `omega` plus
// `actions`, Γ the atoms plus `actions`, H the unreduced class-letter pack
// and H′ = exch ∪ {α ≤ α·α}.
absl::StatusOr<ReificationInstance> ObservationReification(
    const std::vector<std::string>& omega, const std::vector<std::string>& actions);

}  // namespace ckah

#endif  // CKAH_REIFICATION_H_
