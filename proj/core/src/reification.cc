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


#include "ckah/reification.h"

#include <algorithm>
#include <utility>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "ckah/boolean.h"
#include "ckah/ckao.h"
#include "ckah/observation_closure.h"
#include "ckah/semantics.h"

namespace ckah {
namespace {

Term Apply(const ReificationInstance& inst, const std::string& letter) {
  auto it = inst.r.find(letter);
  return it == inst.r.end() ? Term::Act(letter) : it->second;
}

std::map<std::string, PomsetLanguage> LetterLanguages(const ReificationInstance& inst) {
  std::map<std::string, PomsetLanguage> out;
  for (const auto& [letter, image] : inst.r) {
    absl::StatusOr<PomsetLanguage> l = SemanticsStarFree(image);
    if (l.ok()) out.emplace(letter, *std::move(l));
  }
  return out;
}

struct Closed {
  bool ok = false;
  PomsetLanguage language;
  std::string problem;
};

Closed CloseLanguage(const PomsetLanguage& l, const HypothesisSet& h, const Budget& budget) {
  absl::StatusOr<ClosureResult> c = CloseUnder(l, h, budget);
  if (!c.ok()) return {false, {}, std::string(c.status().message())};
  if (!c->complete()) return {false, {}, "truncated: " + c->reason};
  return {true, std::move(c->language), ""};
}

Closed CloseTerm(const Term& e, const HypothesisSet& h, const Budget& budget) {
  absl::StatusOr<PomsetLanguage> l = SemanticsStarFree(e);
  if (!l.ok()) return {false, {}, std::string(l.status().message())};
  return CloseLanguage(*l, h, budget);
}

}  // namespace

bool ReificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ReificationCheck& c) { return c.passed; });
}

bool ReificationReport::passed(const std::string& condition) const {
  return std::all_of(checks.begin(), checks.end(), [&](const ReificationCheck& c) {
    return c.condition != condition || c.passed;
  });
}

std::string ReificationReport::ToString() const {
  return absl::StrJoin(checks, "\n", [](std::string* out, const ReificationCheck& c) {
    absl::StrAppend(out, "(", c.condition, ") ", c.passed ? "ok   " : "FAIL ", c.subject,
                    c.detail.empty() ? "" : ": ", c.detail);
  });
}

ReificationReport CheckReificationConditions(const ReificationInstance& inst,
                                             const ReificationSamples& samples,
                                             const Budget& budget) {
  ReificationReport report;
  auto add = [&](std::string condition, std::string subject, bool passed, std::string detail) {
    report.checks.push_back(
        {std::move(condition), std::move(subject), passed, std::move(detail)});
  };

  // (i) r(a) ≡H a.
  for (const std::string& a : inst.sigma) {
    const Term image = Apply(inst, a);
    Closed lhs = CloseTerm(image, inst.h, budget);
    Closed rhs = CloseTerm(Term::Act(a), inst.h, budget);
    const std::string subject = absl::StrCat("r(", a, ") = ", image.ToString());
    if (!lhs.ok || !rhs.ok) {
      add("i", subject, false, lhs.ok ? rhs.problem : lhs.problem);
      continue;
    }
    const LanguageComparison cmp = LanguageEqual(lhs.language, rhs.language);
    add("i", subject, cmp.equal,
        cmp.equal ? "" : absl::StrCat("closures differ on ", cmp.witness->ToString()));
  }

  // (ii) a ≦ r(a) on Γ.
  for (const std::string& a : inst.gamma) {
    const Term image = Apply(inst, a);
    absl::StatusOr<PomsetLanguage> l = SemanticsStarFree(image);
    const bool ok = l.ok() && l->Contains(Letter(a));
    add("ii", absl::StrCat("r(", a, ") = ", image.ToString()), ok,
        ok ? "" : absl::StrCat(a, " is not in ⟦r(", a, ")⟧"));
  }

  // (iii) H′-closure stays over Γ.
  for (const PomsetLanguage& l : samples.gamma_languages) {
    const std::string subject = absl::StrCat("{", absl::StrJoin(l, ", ", [](std::string* out, const Pomset& u) {
                                               out->append(u.key());
                                             }),
                                             "}");
    Closed c = CloseLanguage(l, inst.h_prime, budget);
    if (!c.ok) {
      add("iii", subject, false, c.problem);
      continue;
    }
    std::string stray;
    for (const Pomset& u : c.language) {
      for (const Label& x : u.Leaves()) {
        if (!inst.gamma.contains(x.name())) stray = x.name();
      }
    }
    add("iii", subject, stray.empty(), stray.empty() ? "" : "closure introduces " + stray);
  }

  // (iv) r(e) ≤H′ r(f) for e ≤ f ∈ H.
  for (const Hypothesis& hyp : inst.h.hypotheses()) {
    const Term re = SubstituteLetters(hyp.lhs, inst.r);
    const Term rf = SubstituteLetters(hyp.rhs, inst.r);
    absl::StatusOr<PomsetLanguage> le = SemanticsStarFree(re);
    Closed cf = CloseTerm(rf, inst.h_prime, budget);
    const std::string subject = hyp.ToString();
    if (!le.ok() || !cf.ok) {
      add("iv", subject, false, le.ok() ? cf.problem : std::string(le.status().message()));
      continue;
    }
    // ⟦r(e)⟧ ⊆ cl(⟦r(f)⟧) iff the closures are included.
    std::string missing;
    for (const Pomset& u : *le) {
      if (!cf.language.Contains(u)) {
        missing = u.key();
        break;
      }
    }
    add("iv", subject, missing.empty(), missing.empty() ? "" : missing + " is not derivable");
  }
  if (inst.h.includes_exch()) {
    // r commutes with composition, so exch instances map to exch instances.
    add("iv", "exch", inst.h_prime.includes_exch(),
        inst.h_prime.includes_exch() ? "" : "H′ lacks exch");
  }

  // r(⟦e⟧) = ⟦r(e)⟧.
  const std::map<std::string, PomsetLanguage> sigma = LetterLanguages(inst);
  for (const Term& e : samples.terms) {
    absl::StatusOr<PomsetLanguage> l = SemanticsStarFree(e);
    absl::StatusOr<PomsetLanguage> k = SemanticsStarFree(SubstituteLetters(e, inst.r));
    if (!l.ok() || !k.ok()) {
      add("sem", e.ToString(), false,
          std::string((l.ok() ? k.status() : l.status()).message()));
      continue;
    }
    const LanguageComparison cmp = LanguageEqual(ApplyLetterMap(*l, sigma), *k);
    add("sem", e.ToString(), cmp.equal,
        cmp.equal ? "" : absl::StrCat("differ on ", cmp.witness->ToString()));
  }
  return report;
}

absl::StatusOr<ReificationInstance> ObservationReification(
    const std::vector<std::string>& omega, const std::vector<std::string>& actions) {
  absl::StatusOr<std::vector<std::string>> om = NormalizeOmega(omega);
  if (!om.ok()) return om.status();
  ReificationInstance inst;
  inst.r = ClassReification(*om);
  absl::StatusOr<HypothesisSet> h = RawObservationPack(*om);
  if (!h.ok()) return h.status();
  absl::StatusOr<HypothesisSet> h_prime = BuiltinPack("obs", *om);
  if (!h_prime.ok()) return h_prime.status();
  inst.h = *std::move(h);
  inst.h_prime = *std::move(h_prime);
  for (const auto& [letter, image] : inst.r) inst.sigma.push_back(letter);
  for (const Atom& a : AllAtoms(*om)) inst.gamma.insert(AtomName(a));
  for (const std::string& a : actions) {
    inst.sigma.push_back(a);
    inst.gamma.insert(a);
  }
  return inst;
}

}  // namespace ckah
