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

// Reification of observations into atoms, and letter substitutions.

#ifndef CKAH_CKAO_H_
#define CKAH_CKAO_H_

#include <map>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "ckah/boolean.h"
#include "ckah/context.h"
#include "ckah/pomset.h"
#include "ckah/term.h"

namespace ckah {

// Ω for a set of terms: `explicit_omega` if nonempty, otherwise the
// observations occurring in `terms`. Fails above `max_observations`.
absl::StatusOr<std::vector<std::string>> InferOmega(
    const std::vector<Term>& terms, const std::vector<std::string>& explicit_omega = {},
    int max_observations = kDefaultMaxObservations);

// r(e): every observation {p} becomes the sum of the atoms below p (0 when
// there are none); everything else is kept.
Term Reify(const Term& e, const std::vector<std::string>& omega);

// Homomorphic substitution of letters; letters missing from `sigma` stay.
Term SubstituteLetters(const Term& e, const std::map<std::string, Term>& sigma);

// Pomset-level application of a letter map: each event labelled a is
// replaced by a member of sigma[a]. Letters missing from `sigma` stay.
PomsetLanguage ApplyLetterMap(const Pomset& u,
                              const std::map<std::string, PomsetLanguage>& sigma);
PomsetLanguage ApplyLetterMap(const PomsetLanguage& l,
                              const std::map<std::string, PomsetLanguage>& sigma);

// Each observation {p} becomes an opaque letter named "{p}".
Term ObservationsAsLetters(const Term& e);

// r on the observation letters of `e`: "{p}" ↦ the atoms below p.
std::map<std::string, PomsetLanguage> ReificationMap(const Term& e,
                                                     const std::vector<std::string>& omega);

}  // namespace ckah

#endif  // CKAH_CKAO_H_
