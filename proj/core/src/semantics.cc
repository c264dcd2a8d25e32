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

#include "ckah/semantics.h"

#include <limits>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace ckah {
namespace {

absl::StatusOr<PomsetLanguage> Evaluate(const Term& e, int max_nodes) {
  switch (e.kind()) {
    case Term::Kind::kZero:
      return PomsetLanguage();
    case Term::Kind::kOne:
      return PomsetLanguage{Pomset()};
    case Term::Kind::kAct:
      if (max_nodes < 1) return PomsetLanguage();
      return PomsetLanguage{Pomset::Prim(e.label())};
    case Term::Kind::kHole:
      if (max_nodes < 1) return PomsetLanguage();
      return PomsetLanguage{Pomset::Hole()};
    case Term::Kind::kObs:
      return absl::FailedPreconditionError(absl::StrCat(
          "ContainsObs: '", e.ToString(), "' has an observation; reify it first"));
    case Term::Kind::kStar: {
      absl::StatusOr<PomsetLanguage> inner = Evaluate(e.left(), max_nodes);
      if (!inner.ok()) return inner;
      return LangStarBounded(*inner, max_nodes);
    }
    case Term::Kind::kPlus:
    case Term::Kind::kDot:
    case Term::Kind::kPar: {
      absl::StatusOr<PomsetLanguage> l = Evaluate(e.left(), max_nodes);
      if (!l.ok()) return l;
      absl::StatusOr<PomsetLanguage> k = Evaluate(e.right(), max_nodes);
      if (!k.ok()) return k;
      if (e.kind() == Term::Kind::kPlus) return LangUnion(*l, *k);
      if (e.kind() == Term::Kind::kDot) return LangSeqBounded(*l, *k, max_nodes);
      return LangParBounded(*l, *k, max_nodes);
    }
  }
  return PomsetLanguage();
}

}  // namespace

PomsetLanguage LangSeqBounded(const PomsetLanguage& l, const PomsetLanguage& k,
                              int max_nodes) {
  PomsetLanguage out;
  for (const Pomset& u : l) {
    for (const Pomset& v : k) {
      if (u.size() + v.size() > max_nodes) break;
      out.Insert(Seq(u, v));
    }
  }
  return out;
}

PomsetLanguage LangParBounded(const PomsetLanguage& l, const PomsetLanguage& k,
                              int max_nodes) {
  PomsetLanguage out;
  for (const Pomset& u : l) {
    for (const Pomset& v : k) {
      if (u.size() + v.size() > max_nodes) break;
      out.Insert(Par(u, v));
    }
  }
  return out;
}

PomsetLanguage LangStarBounded(const PomsetLanguage& l, int max_nodes) {
  // Each factor of a power other than 1 adds at least one event.
  PomsetLanguage factors;
  for (const Pomset& u : l) {
    if (!u.is_empty()) factors.Insert(u);
  }
  PomsetLanguage out{Pomset()};
  PomsetLanguage frontier = out;
  while (!frontier.empty()) {
    PomsetLanguage next;
    for (const Pomset& u : LangSeqBounded(factors, frontier, max_nodes)) {
      if (out.Insert(u)) next.Insert(u);
    }
    frontier = std::move(next);
  }
  return out;
}

absl::StatusOr<PomsetLanguage> SemanticsStarFree(const Term& e) {
  if (e.ContainsStar()) {
    return absl::FailedPreconditionError(
        absl::StrCat("ContainsStar: '", e.ToString(), "' is not star-free"));
  }
  return Evaluate(e, std::numeric_limits<int>::max());
}

absl::StatusOr<PomsetLanguage> SemanticsBounded(const Term& e, UnrollBudget budget) {
  return Evaluate(e, budget.max_nodes);
}

}  // namespace ckah
