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

#include "ckah/ckao.h"

#include <set>

namespace ckah {

absl::StatusOr<std::vector<std::string>> InferOmega(
    const std::vector<Term>& terms, const std::vector<std::string>& explicit_omega,
    int max_observations) {
  std::vector<std::string> omega = explicit_omega;
  if (omega.empty()) {
    std::set<std::string> found;
    for (const Term& t : terms) t.CollectObservations(found);
    omega.assign(found.begin(), found.end());
  }
  return NormalizeOmega(std::move(omega), max_observations);
}

Term Reify(const Term& e, const std::vector<std::string>& omega) {
  switch (e.kind()) {
    case Term::Kind::kObs: {
      std::vector<Term> atoms;
      for (const Atom& a : AtomsBelow(e.obs(), omega)) atoms.push_back(Term::Act(AtomLabel(a)));
      return SumOf(atoms);
    }
    case Term::Kind::kPlus:
      return Term::Plus(Reify(e.left(), omega), Reify(e.right(), omega));
    case Term::Kind::kDot:
      return Term::Dot(Reify(e.left(), omega), Reify(e.right(), omega));
    case Term::Kind::kPar:
      return Term::Par(Reify(e.left(), omega), Reify(e.right(), omega));
    case Term::Kind::kStar:
      return Term::Star(Reify(e.left(), omega));
    default:
      return e;
  }
}

Term SubstituteLetters(const Term& e, const std::map<std::string, Term>& sigma) {
  switch (e.kind()) {
    case Term::Kind::kAct: {
      auto it = sigma.find(e.label().name());
      return it == sigma.end() ? e : it->second;
    }
    case Term::Kind::kPlus:
      return Term::Plus(SubstituteLetters(e.left(), sigma), SubstituteLetters(e.right(), sigma));
    case Term::Kind::kDot:
      return Term::Dot(SubstituteLetters(e.left(), sigma), SubstituteLetters(e.right(), sigma));
    case Term::Kind::kPar:
      return Term::Par(SubstituteLetters(e.left(), sigma), SubstituteLetters(e.right(), sigma));
    case Term::Kind::kStar:
      return Term::Star(SubstituteLetters(e.left(), sigma));
    default:
      return e;
  }
}

PomsetLanguage ApplyLetterMap(const Pomset& u,
                              const std::map<std::string, PomsetLanguage>& sigma) {
  switch (u.kind()) {
    case Pomset::Kind::kEmpty:
      return PomsetLanguage{u};
    case Pomset::Kind::kPrim: {
      auto it = sigma.find(u.label().name());
      return it == sigma.end() ? PomsetLanguage{u} : it->second;
    }
    case Pomset::Kind::kSeq:
    case Pomset::Kind::kPar: {
      PomsetLanguage out{Pomset()};
      for (const Pomset& c : u.children()) {
        const PomsetLanguage part = ApplyLetterMap(c, sigma);
        out = u.kind() == Pomset::Kind::kSeq ? LangSeq(out, part) : LangPar(out, part);
      }
      return out;
    }
  }
  return {};
}

PomsetLanguage ApplyLetterMap(const PomsetLanguage& l,
                              const std::map<std::string, PomsetLanguage>& sigma) {
  PomsetLanguage out;
  for (const Pomset& u : l) out.InsertAll(ApplyLetterMap(u, sigma));
  return out;
}

Term ObservationsAsLetters(const Term& e) {
  switch (e.kind()) {
    case Term::Kind::kObs:
      return Term::Act("{" + e.obs().ToString() + "}");
    case Term::Kind::kPlus:
      return Term::Plus(ObservationsAsLetters(e.left()), ObservationsAsLetters(e.right()));
    case Term::Kind::kDot:
      return Term::Dot(ObservationsAsLetters(e.left()), ObservationsAsLetters(e.right()));
    case Term::Kind::kPar:
      return Term::Par(ObservationsAsLetters(e.left()), ObservationsAsLetters(e.right()));
    case Term::Kind::kStar:
      return Term::Star(ObservationsAsLetters(e.left()));
    default:
      return e;
  }
}

std::map<std::string, PomsetLanguage> ReificationMap(const Term& e,
                                                     const std::vector<std::string>& omega) {
  std::map<std::string, PomsetLanguage> out;
  auto visit = [&](auto&& self, const Term& t) -> void {
    switch (t.kind()) {
      case Term::Kind::kObs: {
        PomsetLanguage atoms;
        for (const Atom& a : AtomsBelow(t.obs(), omega)) {
          atoms.Insert(Pomset::Prim(AtomLabel(a)));
        }
        out["{" + t.obs().ToString() + "}"] = std::move(atoms);
        return;
      }
      case Term::Kind::kPlus:
      case Term::Kind::kDot:
      case Term::Kind::kPar:
        self(self, t.left());
        self(self, t.right());
        return;
      case Term::Kind::kStar:
        self(self, t.left());
        return;
      default:
        return;
    }
  };
  visit(visit, e);
  return out;
}

}  // namespace ckah
