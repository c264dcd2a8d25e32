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

// Abstract syntax of CKA terms and of Boolean observation terms.
//
// Concrete syntax, loosest to tightest:
//
//   e ::= e + e | e || e | e ; e | e* | ( e ) | 0 | 1 | a | {p}
//   p ::= p | p | p & p | !p | ( p ) | T | F | o
//
// `.` is accepted for `;`. Binary operators associate to the left.

#ifndef CKAH_TERM_H_
#define CKAH_TERM_H_

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ckah/label.h"

namespace ckah {

class BoolTerm {
 public:
  enum class Kind { kBot, kTop, kPrim, kOr, kAnd, kNot };

  static BoolTerm Bot();
  static BoolTerm Top();
  static BoolTerm Prim(std::string observation);
  static BoolTerm Or(BoolTerm p, BoolTerm q);
  static BoolTerm And(BoolTerm p, BoolTerm q);
  static BoolTerm Not(BoolTerm p);

  Kind kind() const;
  // kPrim only.
  const std::string& name() const;
  // kOr / kAnd: both; kNot: left() only.
  const BoolTerm& left() const;
  const BoolTerm& right() const;

  // Truth value when exactly the observations in `holding` are true.
  bool Evaluate(const std::set<std::string>& holding) const;
  void CollectObservations(std::set<std::string>& out) const;

  // Without the surrounding braces.
  std::string ToString() const;

  friend bool operator==(const BoolTerm& a, const BoolTerm& b);

 private:
  struct Node;
  explicit BoolTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

class Term {
 public:
  enum class Kind { kZero, kOne, kAct, kObs, kPlus, kDot, kPar, kStar, kHole };

  static Term Zero();
  static Term One();
  static Term Act(Label label);
  static Term Act(std::string name) { return Act(Label(std::move(name))); }
  static Term Obs(BoolTerm p);
  static Term Plus(Term e, Term f);
  static Term Dot(Term e, Term f);
  static Term Par(Term e, Term f);
  static Term Star(Term e);
  // Only produced when parsing contexts.
  static Term Hole();

  Kind kind() const;
  const Label& label() const;
  const BoolTerm& obs() const;
  // Binary nodes: both; kStar: left() only.
  const Term& left() const;
  const Term& right() const;

  bool ContainsStar() const;
  bool ContainsObs() const;
  bool ContainsHole() const;
  // Number of leaves (constants, letters and observations).
  int LeafCount() const;
  // Identity of the shared node; equal for copies of the same term.
  const void* id() const { return node_.get(); }
  void CollectActions(std::set<std::string>& out) const;
  void CollectObservations(std::set<std::string>& out) const;

  // Minimal parentheses; re-parses to an equal term.
  std::string ToString() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Term Compose(Kind kind, Term e, std::optional<Term> f);
  std::shared_ptr<const Node> node_;
};

// Sum of `terms`; 0 when empty.
Term SumOf(const std::vector<Term>& terms);

}  // namespace ckah

#endif  // CKAH_TERM_H_
