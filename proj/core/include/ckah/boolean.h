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

// Boolean observations over a finite set Ω of primitive observations, and
// their atoms (subsets of Ω).

#ifndef CKAH_BOOLEAN_H_
#define CKAH_BOOLEAN_H_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "ckah/label.h"
#include "ckah/term.h"

namespace ckah {

inline constexpr int kDefaultMaxObservations = 6;

// An atom: the observations that hold.
using Atom = std::set<std::string>;

// Ω sorted and deduplicated. Fails if larger than `max_observations`.
absl::StatusOr<std::vector<std::string>> NormalizeOmega(
    std::vector<std::string> omega, int max_observations = kDefaultMaxObservations);

// All 2^|Ω| atoms, ordered by the bitmask over the sorted Ω (so ∅ first).
std::vector<Atom> AllAtoms(const std::vector<std::string>& omega);

// `@{o1,o3}`.
std::string AtomName(const Atom& atom);
Label AtomLabel(const Atom& atom);
// Inverse of AtomName; nullopt for non-atom labels.
std::optional<Atom> ParseAtomName(std::string_view name);

// Atoms α with π_α ≤ p, in AllAtoms order. Observations of `p` outside
// `omega` are read as false.
std::vector<Atom> AtomsBelow(const BoolTerm& p, const std::vector<std::string>& omega);

// Equivalence in the free Boolean algebra, by truth tables over the
// observations of both terms.
bool BaEquiv(const BoolTerm& p, const BoolTerm& q);

}  // namespace ckah

#endif  // CKAH_BOOLEAN_H_
