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

#include "ckah/parser.h"

#include <cctype>
#include <string>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace ckah {
namespace {

bool IsIdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Parser {
 public:
  Parser(std::string_view text, ParseOptions options) : text_(text), options_(options) {}

  absl::StatusOr<Term> ParseWholeTerm() {
    absl::StatusOr<Term> e = ParsePlus();
    if (!e.ok()) return e;
    SkipSpace();
    if (pos_ != text_.size()) return Error("unexpected trailing input");
    return e;
  }

  absl::StatusOr<BoolTerm> ParseWholeBool() {
    absl::StatusOr<BoolTerm> p = ParseOr();
    if (!p.ok()) return p;
    SkipSpace();
    if (pos_ != text_.size()) return Error("unexpected trailing input");
    return p;
  }

 private:
  absl::Status Error(std::string_view what) const {
    std::string near = pos_ < text_.size() ? absl::StrCat(" near '", std::string(text_.substr(pos_, 8)), "'")
                                           : std::string(" at end of input");
    return absl::InvalidArgumentError(
        absl::StrCat("SyntaxError at byte ", pos_, ": ", std::string(what), near));
  }

  void SkipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool Peek(std::string_view token) {
    SkipSpace();
    return text_.substr(pos_).starts_with(token);
  }

  bool Accept(std::string_view token) {
    if (!Peek(token)) return false;
    pos_ += token.size();
    return true;
  }

  absl::StatusOr<Term> ParsePlus() {
    absl::StatusOr<Term> e = ParsePar();
    while (e.ok() && Accept("+")) {
      absl::StatusOr<Term> f = ParsePar();
      if (!f.ok()) return f;
      e = Term::Plus(*std::move(e), *std::move(f));
    }
    return e;
  }

  absl::StatusOr<Term> ParsePar() {
    absl::StatusOr<Term> e = ParseDot();
    while (e.ok() && Accept("||")) {
      absl::StatusOr<Term> f = ParseDot();
      if (!f.ok()) return f;
      e = Term::Par(*std::move(e), *std::move(f));
    }
    return e;
  }

  absl::StatusOr<Term> ParseDot() {
    absl::StatusOr<Term> e = ParseStar();
    while (e.ok() && (Accept(";") || Accept("."))) {
      absl::StatusOr<Term> f = ParseStar();
      if (!f.ok()) return f;
      e = Term::Dot(*std::move(e), *std::move(f));
    }
    return e;
  }

  absl::StatusOr<Term> ParseStar() {
    absl::StatusOr<Term> e = ParsePrimary();
    while (e.ok() && Accept("*")) e = Term::Star(*std::move(e));
    return e;
  }

  absl::StatusOr<Term> ParsePrimary() {
    SkipSpace();
    if (pos_ >= text_.size()) return Error("expected a term");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      absl::StatusOr<Term> e = ParsePlus();
      if (!e.ok()) return e;
      if (!Accept(")")) return Error("expected ')'");
      return e;
    }
    if (c == '0' || c == '1') {
      ++pos_;
      if (pos_ < text_.size() && IsIdentChar(text_[pos_])) {
        --pos_;
        return Error("identifiers must not start with a digit");
      }
      return c == '0' ? Term::Zero() : Term::One();
    }
    if (c == '*' && options_.allow_hole) {
      ++pos_;
      return Term::Hole();
    }
    if (c == '{') {
      ++pos_;
      absl::StatusOr<BoolTerm> p = ParseOr();
      if (!p.ok()) return p.status();
      if (!Accept("}")) return Error("expected '}'");
      return Term::Obs(*std::move(p));
    }
    if (c == '@') return ParseAtomLetter();
    if (IsIdentStart(c)) return Term::Act(Label(ReadIdentifier()));
    return Error("expected a term");
  }

  absl::StatusOr<Term> ParseAtomLetter() {
    const size_t start = pos_;
    ++pos_;
    if (pos_ >= text_.size() || text_[pos_] != '{') return Error("expected '{' after '@'");
    std::string name = "@{";
    ++pos_;
    while (pos_ < text_.size() && text_[pos_] != '}') {
      const char c = text_[pos_];
      if (IsIdentChar(c) || c == ',') {
        name.push_back(c);
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        return Error("unexpected character in atom letter");
      }
      ++pos_;
    }
    if (pos_ >= text_.size()) {
      pos_ = start;
      return Error("unterminated atom letter");
    }
    ++pos_;
    name.push_back('}');
    return Term::Act(Label(std::move(name)));
  }

  std::string ReadIdentifier() {
    const size_t start = pos_;
    while (pos_ < text_.size() && IsIdentChar(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  absl::StatusOr<BoolTerm> ParseOr() {
    absl::StatusOr<BoolTerm> p = ParseAnd();
    while (p.ok() && Accept("|")) {
      absl::StatusOr<BoolTerm> q = ParseAnd();
      if (!q.ok()) return q;
      p = BoolTerm::Or(*std::move(p), *std::move(q));
    }
    return p;
  }

  absl::StatusOr<BoolTerm> ParseAnd() {
    absl::StatusOr<BoolTerm> p = ParseNot();
    while (p.ok() && Accept("&")) {
      absl::StatusOr<BoolTerm> q = ParseNot();
      if (!q.ok()) return q;
      p = BoolTerm::And(*std::move(p), *std::move(q));
    }
    return p;
  }

  absl::StatusOr<BoolTerm> ParseNot() {
    if (Accept("!")) {
      absl::StatusOr<BoolTerm> p = ParseNot();
      if (!p.ok()) return p;
      return BoolTerm::Not(*std::move(p));
    }
    SkipSpace();
    if (pos_ >= text_.size()) return Error("expected an observation");
    if (Accept("(")) {
      absl::StatusOr<BoolTerm> p = ParseOr();
      if (!p.ok()) return p;
      if (!Accept(")")) return Error("expected ')'");
      return p;
    }
    if (!IsIdentStart(text_[pos_])) return Error("expected an observation");
    std::string name = ReadIdentifier();
    if (name == "T") return BoolTerm::Top();
    if (name == "F") return BoolTerm::Bot();
    return BoolTerm::Prim(std::move(name));
  }

  std::string_view text_;
  ParseOptions options_;
  size_t pos_ = 0;
};

}  // namespace

absl::StatusOr<Term> ParseTerm(std::string_view text, ParseOptions options) {
  return Parser(text, options).ParseWholeTerm();
}

absl::StatusOr<BoolTerm> ParseBoolTerm(std::string_view text) {
  return Parser(text, {}).ParseWholeBool();
}

absl::StatusOr<Pomset> TermToPomset(const Term& e) {
  switch (e.kind()) {
    case Term::Kind::kOne:
      return Pomset();
    case Term::Kind::kAct:
      return Pomset::Prim(e.label());
    case Term::Kind::kHole:
      return Pomset::Hole();
    case Term::Kind::kDot:
    case Term::Kind::kPar: {
      absl::StatusOr<Pomset> u = TermToPomset(e.left());
      if (!u.ok()) return u;
      absl::StatusOr<Pomset> v = TermToPomset(e.right());
      if (!v.ok()) return v;
      return e.kind() == Term::Kind::kDot ? Seq(*u, *v) : Par(*u, *v);
    }
    default:
      return absl::InvalidArgumentError(
          absl::StrCat("'", e.ToString(), "' does not denote a single pomset"));
  }
}

absl::StatusOr<Pomset> ParsePomset(std::string_view text) {
  absl::StatusOr<Term> e = ParseTerm(text);
  if (!e.ok()) return e.status();
  return TermToPomset(*e);
}

absl::StatusOr<SpContext> ParseContext(std::string_view text) {
  absl::StatusOr<Term> e = ParseTerm(text, {.allow_hole = true});
  if (!e.ok()) return e.status();
  absl::StatusOr<Pomset> p = TermToPomset(*e);
  if (!p.ok()) return p.status();
  return SpContext::Create(*std::move(p));
}

}  // namespace ckah
