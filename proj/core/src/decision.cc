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


#include "ckah/decision.h"

#include <map>
#include <set>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "ckah/ckao.h"
#include "ckah/observation_closure.h"
#include "ckah/semantics.h"

namespace ckah {
namespace {

// Fills kind, witness and inclusions from two exact (or equally bounded)
// closures.
void CompareClosures(const PomsetLanguage& left, const PomsetLanguage& right, Verdict& v) {
  const LanguageComparison cmp = LanguageEqual(left, right);
  v.left_leq_right = left.IsSubsetOf(right);
  v.right_leq_left = right.IsSubsetOf(left);
  if (!cmp.equal) {
    v.kind = VerdictKind::kDifferent;
    v.witness = cmp.witness;
    v.witness_in_left = cmp.witness_in_first;
  }
}

void FinishBounded(bool starred, int bound, Verdict& v) {
  if (v.kind == VerdictKind::kDifferent) return;
  if (starred) {
    v.kind = VerdictKind::kEquivalentUpTo;
    v.bound = bound;
  } else {
    v.kind = VerdictKind::kEquivalent;
  }
}

absl::Status CheckObservationsIn(const std::vector<Term>& terms,
                                 const std::vector<std::string>& omega) {
  std::set<std::string> used;
  for (const Term& t : terms) t.CollectObservations(used);
  for (const std::string& o : used) {
    if (std::find(omega.begin(), omega.end(), o) == omega.end()) {
      return absl::InvalidArgumentError(
          absl::StrCat("observation '", o, "' is not in omega {", absl::StrJoin(omega, ","), "}"));
    }
  }
  return absl::OkStatus();
}

Verdict Inconclusive(std::string reason) {
  Verdict v;
  v.kind = VerdictKind::kInconclusive;
  v.reason = std::move(reason);
  return v;
}

absl::StatusOr<std::vector<std::string>> ResolveOmega(const std::vector<Term>& terms,
                                                      const std::vector<std::string>& omega) {
  absl::StatusOr<std::vector<std::string>> resolved = InferOmega(terms, omega);
  if (!resolved.ok()) return resolved;
  absl::Status s = CheckObservationsIn(terms, *resolved);
  if (!s.ok()) return s;
  return resolved;
}

// Star-free obs decision by membership: cl(⟦e⟧) ⊆ cl(⟦f⟧) iff ⟦e⟧ ⊆ cl(⟦f⟧).
absl::StatusOr<Verdict> DecideCkaoStarFree(const Term& re, const Term& rf,
                                           const std::vector<std::string>& omega,
                                           const DecideOptions& options) {
  absl::StatusOr<PomsetLanguage> le = SemanticsStarFree(re);
  if (!le.ok()) return le.status();
  absl::StatusOr<PomsetLanguage> lf = SemanticsStarFree(rf);
  if (!lf.ok()) return lf.status();
  ClosureMembership in_left(re), in_right(rf);
  Verdict v;
  std::optional<Pomset> missing_right, missing_left;  // in the left only / right only
  for (const Pomset& u : *le) {
    if (!in_right.Contains(u)) {
      missing_right = u;
      break;
    }
  }
  for (const Pomset& u : *lf) {
    if (!in_left.Contains(u)) {
      missing_left = u;
      break;
    }
  }
  v.left_leq_right = !missing_right.has_value();
  v.right_leq_left = !missing_left.has_value();
  if (missing_right || missing_left) {
    v.kind = VerdictKind::kDifferent;
    v.witness_in_left =
        missing_right && (!missing_left || *missing_right <= *missing_left);
    v.witness = v.witness_in_left ? missing_right : missing_left;
  } else {
    v.kind = VerdictKind::kEquivalent;
  }

  if (options.cross_check) {
    absl::StatusOr<HypothesisSet> pack = BuiltinPack("obs", omega);
    if (!pack.ok()) return pack.status();
    absl::StatusOr<ClosureResult> ce = CloseFactorized(*le, *pack, options.budget);
    if (!ce.ok()) return ce.status();
    absl::StatusOr<ClosureResult> cf = CloseFactorized(*lf, *pack, options.budget);
    if (!cf.ok()) return cf.status();
    if (!ce->complete() || !cf->complete()) {
      v.cross_check = "closure engine truncated: " + (ce->complete() ? cf : ce)->reason;
    } else {
      Verdict oracle;
      CompareClosures(ce->language, cf->language, oracle);
      FinishBounded(false, 0, oracle);
      const bool agree = oracle.kind == v.kind && oracle.left_leq_right == v.left_leq_right &&
                         oracle.right_leq_left == v.right_leq_left;
      v.cross_check = agree ? "closure engine agrees"
                            : absl::StrCat("closure engine disagrees: ",
                                           VerdictName(oracle.kind));
    }
  }
  return v;
}

}  // namespace

std::string VerdictName(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::kEquivalent:
      return "EQUIVALENT";
    case VerdictKind::kEquivalentUpTo:
      return "EQUIVALENT-UP-TO";
    case VerdictKind::kDifferent:
      return "DIFFERENT";
    case VerdictKind::kInconclusive:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

absl::StatusOr<Verdict> DecideCkao(const Term& e, const Term& f,
                                   const std::vector<std::string>& omega,
                                   const DecideOptions& options) {
  absl::StatusOr<std::vector<std::string>> om = ResolveOmega({e, f}, omega);
  if (!om.ok()) return om.status();
  const Term re = Reify(e, *om), rf = Reify(f, *om);
  if (!re.ContainsStar() && !rf.ContainsStar()) {
    return DecideCkaoStarFree(re, rf, *om, options);
  }
  absl::StatusOr<PomsetLanguage> te = BoundedObservationClosure(re, options.bound, options.budget);
  absl::StatusOr<PomsetLanguage> tf =
      te.ok() ? BoundedObservationClosure(rf, options.bound, options.budget) : te;
  if (!tf.ok()) {
    if (absl::IsResourceExhausted(tf.status())) {
      Verdict v = Inconclusive(std::string(tf.status().message()));
      v.bound = options.bound;
      return v;
    }
    return tf.status();
  }
  Verdict v;
  CompareClosures(*te, *tf, v);
  FinishBounded(true, options.bound, v);
  v.bound = options.bound;
  if (options.cross_check) {
    // Closing the bounded semantics can only find part of the bounded
    // closure, since contraction may shrink larger members.
    absl::StatusOr<HypothesisSet> pack = BuiltinPack("obs", *om);
    if (!pack.ok()) return pack.status();
    bool contained = true, truncated = false;
    for (const auto& [term, closed] : {std::pair{re, &*te}, std::pair{rf, &*tf}}) {
      absl::StatusOr<PomsetLanguage> frag = SemanticsBounded(term, {options.bound});
      if (!frag.ok()) return frag.status();
      absl::StatusOr<ClosureResult> c = CloseFactorized(*frag, *pack, options.budget);
      if (!c.ok()) return c.status();
      truncated = truncated || !c->complete();
      contained = contained && LangSizeFilter(c->language, options.bound).IsSubsetOf(*closed);
    }
    v.cross_check = truncated   ? "closure engine truncated"
                    : contained ? "closure engine result contained in bounded closure"
                                : "closure engine found members outside the bounded closure";
  }
  return v;
}

absl::StatusOr<bool> LeqCkao(const Term& e, const Term& f, const std::vector<std::string>& omega,
                             const DecideOptions& options) {
  absl::StatusOr<Verdict> v = DecideCkao(e, f, omega, options);
  if (!v.ok()) return v.status();
  if (!v->left_leq_right.has_value()) return absl::ResourceExhaustedError(v->reason);
  return *v->left_leq_right;
}

absl::StatusOr<Verdict> Decide(const Term& e, const Term& f, const HypothesisSet& h,
                               const DecideOptions& options) {
  for (const Term* t : {&e, &f}) {
    if (t->ContainsObs()) {
      return absl::FailedPreconditionError(absl::StrCat(
          "ContainsObs: '", t->ToString(), "' has observations; use the obs pack"));
    }
  }
  const bool starred = e.ContainsStar() || f.ContainsStar();
  if (starred && h.can_shrink()) {
    Verdict v = Inconclusive(
        "a hypothesis can derive smaller pomsets from larger ones, so bounded fragments of "
        "starred terms are not conclusive");
    v.bound = options.bound;
    return v;
  }
  absl::StatusOr<ClosureResult> ce = ClosureOf(e, h, options);
  if (!ce.ok()) return ce.status();
  absl::StatusOr<ClosureResult> cf = ClosureOf(f, h, options);
  if (!cf.ok()) return cf.status();
  if (!ce->complete() || !cf->complete()) {
    Verdict v = Inconclusive((ce->complete() ? cf : ce)->reason);
    v.bound = options.bound;
    return v;
  }
  Verdict v;
  CompareClosures(ce->language, cf->language, v);
  FinishBounded(starred, options.bound, v);
  if (starred) v.bound = options.bound;
  if (options.cross_check && h.includes_exch()) {
    // Alternate exch closure with the generic engine instead of factorising.
    absl::StatusOr<PomsetLanguage> le = SemanticsBounded(e, {options.bound});
    absl::StatusOr<PomsetLanguage> lf = SemanticsBounded(f, {options.bound});
    if (!le.ok() || !lf.ok()) return le.ok() ? lf.status() : le.status();
    absl::StatusOr<ClosureResult> je = CloseJoint(*le, h, options.budget);
    absl::StatusOr<ClosureResult> jf = CloseJoint(*lf, h, options.budget);
    if (!je.ok() || !jf.ok()) return je.ok() ? jf.status() : je.status();
    if (!je->complete() || !jf->complete()) {
      v.cross_check = "joint closure truncated";
    } else {
      const bool agree =
          LangSizeFilter(je->language, starred ? options.bound : je->language.MaxSize()) ==
              ce->language &&
          LangSizeFilter(jf->language, starred ? options.bound : jf->language.MaxSize()) ==
              cf->language;
      v.cross_check = agree ? "joint closure agrees" : "joint closure disagrees";
    }
  } else if (options.cross_check) {
    v.cross_check = "no independent closure path for this hypothesis set";
  }
  return v;
}

absl::StatusOr<ClosureResult> CkaoClosure(const Term& e, const std::vector<std::string>& omega,
                                          const DecideOptions& options) {
  absl::StatusOr<std::vector<std::string>> om = ResolveOmega({e}, omega);
  if (!om.ok()) return om.status();
  absl::StatusOr<PomsetLanguage> l =
      BoundedObservationClosure(Reify(e, *om), options.bound, options.budget);
  if (!l.ok()) {
    if (absl::IsResourceExhausted(l.status())) {
      return ClosureResult{{}, ClosureStatus::kTruncated, std::string(l.status().message())};
    }
    return l.status();
  }
  return ClosureResult{*std::move(l), ClosureStatus::kComplete, ""};
}

absl::StatusOr<ClosureResult> ClosureOf(const Term& e, const HypothesisSet& h,
                                        const DecideOptions& options) {
  if (e.ContainsStar() && h.can_shrink()) {
    return absl::FailedPreconditionError(
        "ContainsStar: bounded closure of a starred term needs hypotheses that never shrink");
  }
  absl::StatusOr<PomsetLanguage> l =
      e.ContainsStar() ? SemanticsBounded(e, {options.bound}) : SemanticsStarFree(e);
  if (!l.ok()) return l.status();
  absl::StatusOr<ClosureResult> c = CloseUnder(*l, h, options.budget);
  if (!c.ok()) return c;
  if (e.ContainsStar()) c->language = LangSizeFilter(c->language, options.bound);
  return c;
}

}  // namespace ckah
