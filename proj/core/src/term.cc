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

#include "ckah/term.h"

#include <optional>
#include <utility>

namespace ckah {

struct BoolTerm::Node {
  Kind kind;
  std::string name;
  std::optional<BoolTerm> left, right;
};

BoolTerm BoolTerm::Bot() { return BoolTerm(std::make_shared<Node>(Node{Kind::kBot, "", std::nullopt, std::nullopt})); }
BoolTerm BoolTerm::Top() { return BoolTerm(std::make_shared<Node>(Node{Kind::kTop, "", std::nullopt, std::nullopt})); }
BoolTerm BoolTerm::Prim(std::string observation) {
  return BoolTerm(std::make_shared<Node>(Node{Kind::kPrim, std::move(observation), std::nullopt, std::nullopt}));
}
BoolTerm BoolTerm::Or(BoolTerm p, BoolTerm q) {
  return BoolTerm(std::make_shared<Node>(Node{Kind::kOr, "", std::move(p), std::move(q)}));
}
BoolTerm BoolTerm::And(BoolTerm p, BoolTerm q) {
  return BoolTerm(
      std::make_shared<Node>(Node{Kind::kAnd, "", std::move(p), std::move(q)}));
}
BoolTerm BoolTerm::Not(BoolTerm p) {
  return BoolTerm(std::make_shared<Node>(Node{Kind::kNot, "", std::move(p), std::nullopt}));
}

BoolTerm::Kind BoolTerm::kind() const { return node_->kind; }
const std::string& BoolTerm::name() const { return node_->name; }
const BoolTerm& BoolTerm::left() const { return *node_->left; }
const BoolTerm& BoolTerm::right() const { return *node_->right; }

bool BoolTerm::Evaluate(const std::set<std::string>& holding) const {
  switch (kind()) {
    case Kind::kBot:
      return false;
    case Kind::kTop:
      return true;
    case Kind::kPrim:
      return holding.contains(name());
    case Kind::kOr:
      return left().Evaluate(holding) || right().Evaluate(holding);
    case Kind::kAnd:
      return left().Evaluate(holding) && right().Evaluate(holding);
    case Kind::kNot:
      return !left().Evaluate(holding);
  }
  return false;
}

void BoolTerm::CollectObservations(std::set<std::string>& out) const {
  switch (kind()) {
    case Kind::kPrim:
      out.insert(name());
      return;
    case Kind::kOr:
    case Kind::kAnd:
      left().CollectObservations(out);
      right().CollectObservations(out);
      return;
    case Kind::kNot:
      left().CollectObservations(out);
      return;
    default:
      return;
  }
}

namespace {

int Precedence(BoolTerm::Kind k) {
  switch (k) {
    case BoolTerm::Kind::kOr:
      return 0;
    case BoolTerm::Kind::kAnd:
      return 1;
    case BoolTerm::Kind::kNot:
      return 2;
    default:
      return 3;
  }
}

int Precedence(Term::Kind k) {
  switch (k) {
    case Term::Kind::kPlus:
      return 0;
    case Term::Kind::kPar:
      return 1;
    case Term::Kind::kDot:
      return 2;
    case Term::Kind::kStar:
      return 3;
    default:
      return 4;
  }
}

template <typename T>
std::string Wrap(const T& t, bool parens) {
  return parens ? "(" + t.ToString() + ")" : t.ToString();
}

}  // namespace

std::string BoolTerm::ToString() const {
  const int prec = Precedence(kind());
  switch (kind()) {
    case Kind::kBot:
      return "F";
    case Kind::kTop:
      return "T";
    case Kind::kPrim:
      return name();
    case Kind::kNot:
      return "!" + Wrap(left(), Precedence(left().kind()) < prec);
    case Kind::kOr:
    case Kind::kAnd:
      return Wrap(left(), Precedence(left().kind()) < prec) +
             (kind() == Kind::kOr ? " | " : " & ") +
             Wrap(right(), Precedence(right().kind()) <= prec);
  }
  return "";
}

bool operator==(const BoolTerm& a, const BoolTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case BoolTerm::Kind::kBot:
    case BoolTerm::Kind::kTop:
      return true;
    case BoolTerm::Kind::kPrim:
      return a.name() == b.name();
    case BoolTerm::Kind::kNot:
      return a.left() == b.left();
    default:
      return a.left() == b.left() && a.right() == b.right();
  }
}

struct Term::Node {
  Kind kind;
  std::optional<Label> label;
  std::optional<BoolTerm> obs;
  std::optional<Term> left, right;
  bool star = false, has_obs = false, hole = false;
  int leaves = 0;
};

namespace {

template <typename N>
std::shared_ptr<N> Leaf(typename Term::Kind kind) {
  auto n = std::make_shared<N>();
  n->kind = kind;
  n->leaves = 1;
  return n;
}

}  // namespace

Term Term::Zero() { return Term(Leaf<Node>(Kind::kZero)); }
Term Term::One() { return Term(Leaf<Node>(Kind::kOne)); }
Term Term::Act(Label label) {
  auto n = Leaf<Node>(Kind::kAct);
  n->label = std::move(label);
  return Term(std::move(n));
}
Term Term::Obs(BoolTerm p) {
  auto n = Leaf<Node>(Kind::kObs);
  n->obs = std::move(p);
  n->has_obs = true;
  return Term(std::move(n));
}
Term Term::Hole() {
  auto n = Leaf<Node>(Kind::kHole);
  n->hole = true;
  return Term(std::move(n));
}

Term Term::Compose(Kind kind, Term e, std::optional<Term> f) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->star = kind == Kind::kStar || e.ContainsStar() || (f && f->ContainsStar());
  n->has_obs = e.ContainsObs() || (f && f->ContainsObs());
  n->hole = e.ContainsHole() || (f && f->ContainsHole());
  n->leaves = e.LeafCount() + (f ? f->LeafCount() : 0);
  n->left = std::move(e);
  n->right = std::move(f);
  return Term(std::move(n));
}

Term Term::Plus(Term e, Term f) {
  return Compose(Kind::kPlus, std::move(e), std::move(f));
}
Term Term::Dot(Term e, Term f) {
  return Compose(Kind::kDot, std::move(e), std::move(f));
}
Term Term::Par(Term e, Term f) {
  return Compose(Kind::kPar, std::move(e), std::move(f));
}
Term Term::Star(Term e) {
  return Compose(Kind::kStar, std::move(e), std::nullopt);
}

Term::Kind Term::kind() const { return node_->kind; }
const Label& Term::label() const { return *node_->label; }
const BoolTerm& Term::obs() const { return *node_->obs; }
const Term& Term::left() const { return *node_->left; }
const Term& Term::right() const { return *node_->right; }
bool Term::ContainsStar() const { return node_->star; }
bool Term::ContainsObs() const { return node_->has_obs; }
bool Term::ContainsHole() const { return node_->hole; }
int Term::LeafCount() const { return node_->leaves; }

void Term::CollectActions(std::set<std::string>& out) const {
  switch (kind()) {
    case Kind::kAct:
      out.insert(label().name());
      return;
    case Kind::kPlus:
    case Kind::kDot:
    case Kind::kPar:
      left().CollectActions(out);
      right().CollectActions(out);
      return;
    case Kind::kStar:
      left().CollectActions(out);
      return;
    default:
      return;
  }
}

void Term::CollectObservations(std::set<std::string>& out) const {
  switch (kind()) {
    case Kind::kObs:
      obs().CollectObservations(out);
      return;
    case Kind::kPlus:
    case Kind::kDot:
    case Kind::kPar:
      left().CollectObservations(out);
      right().CollectObservations(out);
      return;
    case Kind::kStar:
      left().CollectObservations(out);
      return;
    default:
      return;
  }
}

std::string Term::ToString() const {
  const int prec = Precedence(kind());
  switch (kind()) {
    case Kind::kZero:
      return "0";
    case Kind::kOne:
      return "1";
    case Kind::kAct:
      return label().name();
    case Kind::kObs:
      return "{" + obs().ToString() + "}";
    case Kind::kHole:
      return "*";
    case Kind::kStar:
      return Wrap(left(), Precedence(left().kind()) < prec) + "*";
    case Kind::kPlus:
    case Kind::kDot:
    case Kind::kPar: {
      const char* op = kind() == Kind::kPlus ? " + " : kind() == Kind::kPar ? " || " : ";";
      return Wrap(left(), Precedence(left().kind()) < prec) + op +
             Wrap(right(), Precedence(right().kind()) <= prec);
    }
  }
  return "";
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::kZero:
    case Term::Kind::kOne:
    case Term::Kind::kHole:
      return true;
    case Term::Kind::kAct:
      return a.label() == b.label();
    case Term::Kind::kObs:
      return a.obs() == b.obs();
    case Term::Kind::kStar:
      return a.left() == b.left();
    default:
      return a.left() == b.left() && a.right() == b.right();
  }
}

Term SumOf(const std::vector<Term>& terms) {
  if (terms.empty()) return Term::Zero();
  Term out = terms.front();
  for (size_t i = 1; i < terms.size(); ++i) out = Term::Plus(out, terms[i]);
  return out;
}

}  // namespace ckah
