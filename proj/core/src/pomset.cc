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

#include "ckah/pomset.h"

#include <algorithm>
#include <optional>
#include <utility>

#include "absl/strings/str_join.h"

namespace ckah {

struct Pomset::Node {
  Kind kind = Kind::kEmpty;
  std::optional<Label> label;
  std::vector<Pomset> children;
  int size = 0;
  int holes = 0;
  std::string key;
};

const std::shared_ptr<const Pomset::Node>& Pomset::EmptyNode() {
  static const auto* const node = [] {
    auto n = std::make_shared<Node>();
    n->key = "1";
    return new std::shared_ptr<const Node>(std::move(n));
  }();
  return *node;
}

Pomset::Pomset() : node_(EmptyNode()) {}

Pomset::Pomset(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Pomset Pomset::Prim(Label label) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kPrim;
  n->size = 1;
  n->holes = label.is_hole() ? 1 : 0;
  n->key = label.name();
  n->label = std::move(label);
  return Pomset(std::move(n));
}

Pomset::Kind Pomset::kind() const { return node_->kind; }

const Label& Pomset::label() const { return *node_->label; }

std::span<const Pomset> Pomset::children() const { return node_->children; }

int Pomset::size() const { return node_->size; }

int Pomset::hole_count() const { return node_->holes; }

const std::string& Pomset::key() const { return node_->key; }

std::vector<Pomset> Pomset::SeqComponents() const {
  switch (kind()) {
    case Kind::kEmpty:
      return {};
    case Kind::kSeq:
      return node_->children;
    default:
      return {*this};
  }
}

std::vector<Pomset> Pomset::ParComponents() const {
  switch (kind()) {
    case Kind::kEmpty:
      return {};
    case Kind::kPar:
      return node_->children;
    default:
      return {*this};
  }
}

bool Pomset::IsWord() const {
  switch (kind()) {
    case Kind::kEmpty:
    case Kind::kPrim:
      return true;
    case Kind::kSeq:
      return std::all_of(node_->children.begin(), node_->children.end(),
                         [](const Pomset& c) { return c.kind() == Kind::kPrim; });
    case Kind::kPar:
      return false;
  }
  return false;
}

std::vector<Label> Pomset::Leaves() const {
  std::vector<Label> out;
  out.reserve(size());
  std::vector<const Pomset*> stack = {this};
  while (!stack.empty()) {
    const Pomset* p = stack.back();
    stack.pop_back();
    if (p->kind() == Kind::kPrim) {
      out.push_back(p->label());
      continue;
    }
    for (auto it = p->node_->children.rbegin(); it != p->node_->children.rend();
         ++it) {
      stack.push_back(&*it);
    }
  }
  return out;
}

bool operator==(const Pomset& a, const Pomset& b) {
  return a.node_ == b.node_ || a.key() == b.key();
}

std::strong_ordering operator<=>(const Pomset& a, const Pomset& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.key() <=> b.key();
}

Pomset SeqAll(std::span<const Pomset> parts) {
  std::vector<Pomset> flat;
  for (const Pomset& p : parts) {
    switch (p.kind()) {
      case Pomset::Kind::kEmpty:
        break;
      case Pomset::Kind::kSeq:
        flat.insert(flat.end(), p.children().begin(), p.children().end());
        break;
      default:
        flat.push_back(p);
    }
  }
  if (flat.empty()) return Pomset();
  if (flat.size() == 1) return flat.front();
  auto n = std::make_shared<Pomset::Node>();
  n->kind = Pomset::Kind::kSeq;
  std::vector<std::string> keys;
  keys.reserve(flat.size());
  for (const Pomset& c : flat) {
    n->size += c.size();
    n->holes += c.hole_count();
    keys.push_back(c.kind() == Pomset::Kind::kPar ? "(" + c.key() + ")" : c.key());
  }
  n->key = absl::StrJoin(keys, ";");
  n->children = std::move(flat);
  return Pomset(std::move(n));
}

Pomset ParAll(std::span<const Pomset> parts) {
  std::vector<Pomset> flat;
  for (const Pomset& p : parts) {
    switch (p.kind()) {
      case Pomset::Kind::kEmpty:
        break;
      case Pomset::Kind::kPar:
        flat.insert(flat.end(), p.children().begin(), p.children().end());
        break;
      default:
        flat.push_back(p);
    }
  }
  if (flat.empty()) return Pomset();
  if (flat.size() == 1) return flat.front();
  std::sort(flat.begin(), flat.end());
  auto n = std::make_shared<Pomset::Node>();
  n->kind = Pomset::Kind::kPar;
  std::vector<absl::string_view> keys;
  keys.reserve(flat.size());
  for (const Pomset& c : flat) {
    n->size += c.size();
    n->holes += c.hole_count();
    keys.push_back(absl::string_view(c.key()));
  }
  n->key = absl::StrJoin(keys, "||");
  n->children = std::move(flat);
  return Pomset(std::move(n));
}

Pomset Seq(const Pomset& u, const Pomset& v) { return SeqAll({u, v}); }

Pomset Par(const Pomset& u, const Pomset& v) { return ParAll({u, v}); }

bool PomsetLanguage::IsSubsetOf(const PomsetLanguage& other) const {
  if (size() > other.size()) return false;
  return std::includes(other.begin(), other.end(), begin(), end());
}

int PomsetLanguage::MaxSize() const {
  // Members are ordered by size first.
  return members_.empty() ? -1 : members_.rbegin()->size();
}

std::string PomsetLanguage::ToString() const {
  return absl::StrJoin(members_, "\n",
                       [](std::string* out, const Pomset& p) { out->append(p.key()); });
}

PomsetLanguage LangSeq(const PomsetLanguage& l, const PomsetLanguage& k) {
  PomsetLanguage out;
  for (const Pomset& u : l) {
    for (const Pomset& v : k) out.Insert(Seq(u, v));
  }
  return out;
}

PomsetLanguage LangPar(const PomsetLanguage& l, const PomsetLanguage& k) {
  PomsetLanguage out;
  for (const Pomset& u : l) {
    for (const Pomset& v : k) out.Insert(Par(u, v));
  }
  return out;
}

PomsetLanguage LangUnion(const PomsetLanguage& l, const PomsetLanguage& k) {
  PomsetLanguage out = l;
  out.InsertAll(k);
  return out;
}

PomsetLanguage LangSizeFilter(const PomsetLanguage& l, int max_size) {
  PomsetLanguage out;
  for (const Pomset& u : l) {
    if (u.size() > max_size) break;
    out.Insert(u);
  }
  return out;
}

}  // namespace ckah
