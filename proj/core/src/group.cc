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


#include "ckah/group.h"

#include <cctype>
#include <optional>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "ckah/ckao.h"

namespace ckah {

struct GroupTerm::Node {
  Kind kind = Kind::kUnit;
  std::string name;
  std::vector<GroupTerm> children;
  int size = 1;
};

GroupTerm GroupTerm::Unit() { return GroupTerm(std::make_shared<Node>()); }

GroupTerm GroupTerm::Gen(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kGen;
  n->name = std::move(name);
  return GroupTerm(std::move(n));
}

GroupTerm GroupTerm::Compose(GroupTerm g, GroupTerm h) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kCompose;
  n->size = g.size() + h.size() + 1;
  n->children = {std::move(g), std::move(h)};
  return GroupTerm(std::move(n));
}

GroupTerm GroupTerm::Inverse(GroupTerm g) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kInverse;
  n->size = g.size() + 1;
  n->children = {std::move(g)};
  return GroupTerm(std::move(n));
}

GroupTerm::Kind GroupTerm::kind() const { return node_->kind; }
const std::string& GroupTerm::name() const { return node_->name; }
const GroupTerm& GroupTerm::left() const { return node_->children[0]; }
const GroupTerm& GroupTerm::right() const { return node_->children[1]; }
int GroupTerm::size() const { return node_->size; }

std::string GroupTerm::ToString() const {
  switch (kind()) {
    case Kind::kUnit:
      return "u";
    case Kind::kGen:
      return name();
    case Kind::kCompose:
      return left().ToString() + "." + right().ToString();
    case Kind::kInverse: {
      const std::string inner = left().ToString();
      return left().kind() == Kind::kCompose ? "(" + inner + ")^" : inner + "^";
    }
  }
  return "u";
}

namespace {

class GroupParser {
 public:
  explicit GroupParser(std::string_view text) : text_(text) {}

  absl::StatusOr<GroupTerm> Parse() {
    absl::StatusOr<GroupTerm> g = Compose();
    if (!g.ok()) return g;
    Skip();
    if (pos_ != text_.size()) return Error("unexpected input");
    return g;
  }

 private:
  absl::StatusOr<GroupTerm> Compose() {
    absl::StatusOr<GroupTerm> g = Postfix();
    if (!g.ok()) return g;
    while (Skip(), pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      absl::StatusOr<GroupTerm> h = Postfix();
      if (!h.ok()) return h;
      g = GroupTerm::Compose(*g, *h);
    }
    return g;
  }

  absl::StatusOr<GroupTerm> Postfix() {
    absl::StatusOr<GroupTerm> g = Primary();
    if (!g.ok()) return g;
    while (Skip(), pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      g = GroupTerm::Inverse(*g);
    }
    return g;
  }

  absl::StatusOr<GroupTerm> Primary() {
    Skip();
    if (pos_ == text_.size()) return Error("unexpected end of input");
    if (text_[pos_] == '(') {
      ++pos_;
      absl::StatusOr<GroupTerm> g = Compose();
      if (!g.ok()) return g;
      Skip();
      if (pos_ == text_.size() || text_[pos_] != ')') return Error("expected ')'");
      ++pos_;
      return g;
    }
    const size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_ || std::isdigit(static_cast<unsigned char>(text_[start]))) {
      return Error("expected a generator, 'u' or '('");
    }
    std::string name(text_.substr(start, pos_ - start));
    return name == "u" ? GroupTerm::Unit() : GroupTerm::Gen(std::move(name));
  }

  void Skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  absl::Status Error(std::string_view what) const {
    return absl::InvalidArgumentError(absl::StrCat("SyntaxError at byte ", pos_, ": ",
                                                   std::string(what), " near '",
                                                   std::string(text_.substr(pos_, 8)), "'"));
  }

  std::string_view text_;
  size_t pos_ = 0;
};

void AppendReduced(GroupWord& word, std::pair<std::string, bool> letter) {
  if (!word.empty() && word.back().first == letter.first &&
      word.back().second != letter.second) {
    word.pop_back();
  } else {
    word.push_back(std::move(letter));
  }
}

void Collect(const GroupTerm& g, bool inverted, GroupWord& word) {
  switch (g.kind()) {
    case GroupTerm::Kind::kUnit:
      return;
    case GroupTerm::Kind::kGen:
      AppendReduced(word, {g.name(), inverted});
      return;
    case GroupTerm::Kind::kCompose:
      // (g.h)^ = h^.g^
      Collect(inverted ? g.right() : g.left(), inverted, word);
      Collect(inverted ? g.left() : g.right(), inverted, word);
      return;
    case GroupTerm::Kind::kInverse:
      Collect(g.left(), !inverted, word);
      return;
  }
}

}  // namespace

absl::StatusOr<GroupTerm> ParseGroupTerm(std::string_view text) {
  return GroupParser(text).Parse();
}

GroupWord ReducedWord(const GroupTerm& g) {
  GroupWord word;
  Collect(g, false, word);
  return word;
}

GroupTerm GroupReduce(const GroupTerm& g) {
  const GroupWord word = ReducedWord(g);
  const int n = static_cast<int>(word.size());
  if (n == 0) return GroupTerm::Unit();
  // pos[i][j] spells word[i..j), neg[i][j] its inverse. Only terms whose
  // flattening is the reduced word are considered; grouping a run under one
  // inverse is what makes them differ in size.
  std::vector<std::vector<std::optional<GroupTerm>>> pos(
      n, std::vector<std::optional<GroupTerm>>(n + 1)),
      neg = pos;
  auto better = [](std::optional<GroupTerm>& slot, GroupTerm t) {
    if (!slot || t.size() < slot->size()) slot = std::move(t);
  };
  for (int i = 0; i < n; ++i) {
    const GroupTerm gen = GroupTerm::Gen(word[i].first);
    pos[i][i + 1] = word[i].second ? GroupTerm::Inverse(gen) : gen;
    neg[i][i + 1] = word[i].second ? gen : GroupTerm::Inverse(gen);
  }
  for (int len = 2; len <= n; ++len) {
    for (int i = 0; i + len <= n; ++i) {
      const int j = i + len;
      std::optional<GroupTerm> p, q;
      for (int k = i + 1; k < j; ++k) {
        better(p, GroupTerm::Compose(*pos[i][k], *pos[k][j]));
        better(q, GroupTerm::Compose(*neg[k][j], *neg[i][k]));
      }
      pos[i][j] = p;
      neg[i][j] = q;
      better(pos[i][j], GroupTerm::Inverse(*q));
      better(neg[i][j], GroupTerm::Inverse(*p));
    }
  }
  return *pos[0][n];
}

bool GroupEquiv(const GroupTerm& g, const GroupTerm& h) { return ReducedWord(g) == ReducedWord(h); }

Term ReduceGroupLetters(const Term& e, const std::map<std::string, GroupTerm>& letters) {
  std::map<std::string, Term> sigma;
  for (const auto& [letter, g] : letters) sigma.emplace(letter, Term::Act(GroupReduce(g).ToString()));
  return SubstituteLetters(e, sigma);
}

}  // namespace ckah
