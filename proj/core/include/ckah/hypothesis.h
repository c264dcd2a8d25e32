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

// Hypotheses e ≤ f and hypothesis sets.
//
// Text format, one entry per line:
//
//   # comment
//   exch                 (adds the exchange law as a schematic family)
//   lhs <= rhs
//   lhs == rhs           (both directions)

#ifndef CKAH_HYPOTHESIS_H_
#define CKAH_HYPOTHESIS_H_

#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "ckah/pomset.h"
#include "ckah/term.h"

namespace ckah {

struct Hypothesis {
  Term lhs;
  Term rhs;

  std::string ToString() const { return lhs.ToString() + " <= " + rhs.ToString(); }
};

class HypothesisSet {
 public:
  HypothesisSet() = default;

  // Both sides of every hypothesis must be star- and observation-free.
  static absl::StatusOr<HypothesisSet> Create(std::vector<Hypothesis> hypotheses,
                                              bool includes_exch = false);
  static HypothesisSet Exch();

  const std::vector<Hypothesis>& hypotheses() const { return hypotheses_; }
  const PomsetLanguage& lhs_language(size_t i) const { return lhs_languages_[i]; }
  const PomsetLanguage& rhs_language(size_t i) const { return rhs_languages_[i]; }
  size_t size() const { return hypotheses_.size(); }
  bool empty() const { return hypotheses_.empty() && !includes_exch_; }

  bool includes_exch() const { return includes_exch_; }
  // Every right-hand side denotes a single nonempty word.
  bool grounded() const { return grounded_; }
  // Every left-hand side is 1 or a single letter.
  bool has_unit_or_letter_lhs() const;
  // Some hypothesis can replace a pomset by a strictly smaller one, i.e. has
  // a left member smaller than a right member.
  bool can_shrink() const;
  // Some hypothesis side contains a parallel composition.
  bool has_parallel_side() const;

  HypothesisSet WithoutExch() const;
  HypothesisSet WithExch() const;
  HypothesisSet Union(const HypothesisSet& other) const;

  std::string ToString() const;

 private:
  std::vector<Hypothesis> hypotheses_;
  std::vector<PomsetLanguage> lhs_languages_;
  std::vector<PomsetLanguage> rhs_languages_;
  bool includes_exch_ = false;
  bool grounded_ = true;
};

absl::StatusOr<HypothesisSet> ParseHypotheses(std::string_view text);

// Names accepted by BuiltinPack.
inline constexpr std::string_view kBuiltinPackNames[] = {
    "none", "exch", "obs", "contr-atoms", "demo-bake", "demo-print"};

// `obs` is the reduced pack exch ∪ {α ≤ α·α : α atom over `omega`}, which
// applies to reified terms; `contr-atoms` is the same without exch.
absl::StatusOr<HypothesisSet> BuiltinPack(std::string_view name,
                                          const std::vector<std::string>& omega = {});

}  // namespace ckah

#endif  // CKAH_HYPOTHESIS_H_
