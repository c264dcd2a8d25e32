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

#include "ckah/hypothesis.h"

#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "ckah/boolean.h"
#include "ckah/parser.h"
#include "ckah/semantics.h"

namespace ckah {
namespace {

bool HasParallel(const Term& e) {
  switch (e.kind()) {
    case Term::Kind::kPar:
      return true;
    case Term::Kind::kPlus:
    case Term::Kind::kDot:
      return HasParallel(e.left()) || HasParallel(e.right());
    case Term::Kind::kStar:
      return HasParallel(e.left());
    default:
      return false;
  }
}

}  // namespace

absl::StatusOr<HypothesisSet> HypothesisSet::Create(std::vector<Hypothesis> hypotheses,
                                                    bool includes_exch) {
  HypothesisSet out;
  out.includes_exch_ = includes_exch;
  for (Hypothesis& h : hypotheses) {
    for (const Term* side : {&h.lhs, &h.rhs}) {
      if (side->ContainsStar()) {
        return absl::FailedPreconditionError(absl::StrCat(
            "ContainsStar: hypothesis '", h.ToString(), "' must be star-free"));
      }
      if (side->ContainsObs()) {
        return absl::FailedPreconditionError(absl::StrCat(
            "ContainsObs: hypothesis '", h.ToString(), "' has observations; reify it"));
      }
    }
    absl::StatusOr<PomsetLanguage> lhs = SemanticsStarFree(h.lhs);
    if (!lhs.ok()) return lhs.status();
    absl::StatusOr<PomsetLanguage> rhs = SemanticsStarFree(h.rhs);
    if (!rhs.ok()) return rhs.status();
    const bool word = rhs->size() == 1 && !rhs->begin()->is_empty() && rhs->begin()->IsWord();
    out.grounded_ = out.grounded_ && word;
    out.lhs_languages_.push_back(*std::move(lhs));
    out.rhs_languages_.push_back(*std::move(rhs));
    out.hypotheses_.push_back(std::move(h));
  }
  return out;
}

HypothesisSet HypothesisSet::Exch() {
  HypothesisSet out;
  out.includes_exch_ = true;
  return out;
}

bool HypothesisSet::has_unit_or_letter_lhs() const {
  for (const Hypothesis& h : hypotheses_) {
    if (h.lhs.kind() != Term::Kind::kOne && h.lhs.kind() != Term::Kind::kAct) return false;
  }
  return true;
}

bool HypothesisSet::can_shrink() const {
  for (size_t i = 0; i < size(); ++i) {
    if (lhs_languages_[i].empty() || rhs_languages_[i].empty()) continue;
    if (lhs_languages_[i].begin()->size() < rhs_languages_[i].MaxSize()) return true;
  }
  return false;
}

bool HypothesisSet::has_parallel_side() const {
  for (const Hypothesis& h : hypotheses_) {
    if (HasParallel(h.lhs) || HasParallel(h.rhs)) return true;
  }
  return false;
}

HypothesisSet HypothesisSet::WithoutExch() const {
  HypothesisSet out = *this;
  out.includes_exch_ = false;
  return out;
}

HypothesisSet HypothesisSet::WithExch() const {
  HypothesisSet out = *this;
  out.includes_exch_ = true;
  return out;
}

HypothesisSet HypothesisSet::Union(const HypothesisSet& other) const {
  HypothesisSet out = *this;
  out.includes_exch_ = includes_exch_ || other.includes_exch_;
  out.grounded_ = grounded_ && other.grounded_;
  for (size_t i = 0; i < other.size(); ++i) {
    out.hypotheses_.push_back(other.hypotheses_[i]);
    out.lhs_languages_.push_back(other.lhs_languages_[i]);
    out.rhs_languages_.push_back(other.rhs_languages_[i]);
  }
  return out;
}

std::string HypothesisSet::ToString() const {
  std::vector<std::string> lines;
  if (includes_exch_) lines.push_back("exch");
  for (const Hypothesis& h : hypotheses_) lines.push_back(h.ToString());
  return absl::StrJoin(lines, "\n");
}

absl::StatusOr<HypothesisSet> ParseHypotheses(std::string_view text) {
  std::vector<Hypothesis> hypotheses;
  bool exch = false;
  int line_number = 0;
  for (absl::string_view piece :
       absl::StrSplit(absl::string_view(text.data(), text.size()), '\n')) {
    std::string_view line(piece.data(), piece.size());
    ++line_number;
    if (size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    piece = absl::StripAsciiWhitespace(absl::string_view(line.data(), line.size()));
    line = std::string_view(piece.data(), piece.size());
    if (line.empty()) continue;
    if (line == "exch") {
      exch = true;
      continue;
    }
    bool both = false;
    size_t op = line.find("<=");
    if (op == std::string_view::npos) {
      op = line.find("==");
      both = true;
    }
    if (op == std::string_view::npos) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_number, ": expected 'lhs <= rhs' or 'lhs == rhs'"));
    }
    absl::StatusOr<Term> lhs = ParseTerm(line.substr(0, op));
    absl::StatusOr<Term> rhs = ParseTerm(line.substr(op + 2));
    for (const absl::StatusOr<Term>* side : {&lhs, &rhs}) {
      if (!side->ok()) {
        return absl::InvalidArgumentError(
            absl::StrCat("line ", line_number, ": ", side->status().message()));
      }
    }
    hypotheses.push_back({*lhs, *rhs});
    if (both) hypotheses.push_back({*rhs, *lhs});
  }
  return HypothesisSet::Create(std::move(hypotheses), exch);
}

namespace {

HypothesisSet ContractionPack(const std::vector<std::string>& omega) {
  std::vector<Hypothesis> hypotheses;
  for (const Atom& a : AllAtoms(omega)) {
    const Term alpha = Term::Act(AtomLabel(a));
    hypotheses.push_back({alpha, Term::Dot(alpha, alpha)});
  }
  return *HypothesisSet::Create(std::move(hypotheses));
}

// (e;bake;f) || (g;bake;h) == (e;bake || g);(f || bake;h) + (e || g;bake);(bake;f || h)
// for e, f, g, h ranging over {1, mix}.
HypothesisSet BakePack() {
  std::vector<Hypothesis> hypotheses;
  const Term bake = Term::Act("bake");
  const Term choices[] = {Term::One(), Term::Act("mix")};
  for (const Term& e : choices) {
    for (const Term& f : choices) {
      for (const Term& g : choices) {
        for (const Term& h : choices) {
          const Term lhs = Term::Par(Term::Dot(Term::Dot(e, bake), f),
                                     Term::Dot(Term::Dot(g, bake), h));
          const Term rhs = Term::Plus(
              Term::Dot(Term::Par(Term::Dot(e, bake), g),
                        Term::Par(f, Term::Dot(bake, h))),
              Term::Dot(Term::Par(e, Term::Dot(g, bake)),
                        Term::Par(Term::Dot(bake, f), h)));
          hypotheses.push_back({lhs, rhs});
          hypotheses.push_back({rhs, lhs});
        }
      }
    }
  }
  return *HypothesisSet::Create(std::move(hypotheses));
}

}  // namespace

absl::StatusOr<HypothesisSet> BuiltinPack(std::string_view name,
                                          const std::vector<std::string>& omega) {
  if (name == "none") return HypothesisSet();
  if (name == "exch") return HypothesisSet::Exch();
  if (name == "obs") return ContractionPack(omega).WithExch();
  if (name == "contr-atoms") return ContractionPack(omega);
  if (name == "demo-bake") return BakePack();
  if (name == "demo-print") {
    return ParseHypotheses("incr_x || print == incr_x;print + print;incr_x\n");
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown hypothesis pack '", std::string(name), "'; expected one of: ",
      absl::StrJoin(std::vector<std::string>(std::begin(kBuiltinPackNames), std::end(kBuiltinPackNames)), ", ")));
}

}  // namespace ckah
