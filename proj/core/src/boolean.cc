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

#include "ckah/boolean.h"

#include <algorithm>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"

namespace ckah {

absl::StatusOr<std::vector<std::string>> NormalizeOmega(std::vector<std::string> omega,
                                                        int max_observations) {
  std::sort(omega.begin(), omega.end());
  omega.erase(std::unique(omega.begin(), omega.end()), omega.end());
  if (static_cast<int>(omega.size()) > max_observations) {
    return absl::InvalidArgumentError(absl::StrCat(
        "|Ω| = ", omega.size(), " exceeds the limit of ", max_observations,
        " observations (", 1ull << omega.size(), " atoms)"));
  }
  return omega;
}

std::vector<Atom> AllAtoms(const std::vector<std::string>& omega) {
  std::vector<Atom> out;
  const size_t n = omega.size();
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    Atom a;
    for (size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1) a.insert(omega[i]);
    }
    out.push_back(std::move(a));
  }
  return out;
}

std::string AtomName(const Atom& atom) {
  return absl::StrCat(std::string(kAtomPrefix), "{", absl::StrJoin(atom, ","), "}");
}

Label AtomLabel(const Atom& atom) { return Label(AtomName(atom)); }

std::optional<Atom> ParseAtomName(std::string_view name) {
  if (!name.starts_with("@{") || !name.ends_with("}")) return std::nullopt;
  std::string_view body = name.substr(2, name.size() - 3);
  Atom out;
  if (body.empty()) return out;
  for (absl::string_view part : absl::StrSplit(absl::string_view(body.data(), body.size()), ',')) out.insert(std::string(part));
  return out;
}

std::vector<Atom> AtomsBelow(const BoolTerm& p, const std::vector<std::string>& omega) {
  std::vector<Atom> out;
  for (Atom& a : AllAtoms(omega)) {
    if (p.Evaluate(a)) out.push_back(std::move(a));
  }
  return out;
}

bool BaEquiv(const BoolTerm& p, const BoolTerm& q) {
  std::set<std::string> names;
  p.CollectObservations(names);
  q.CollectObservations(names);
  const std::vector<std::string> omega(names.begin(), names.end());
  for (const Atom& a : AllAtoms(omega)) {
    if (p.Evaluate(a) != q.Evaluate(a)) return false;
  }
  return true;
}

}  // namespace ckah
