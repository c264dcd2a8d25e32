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


// Group terms over a finite alphabet and their free-group reduced forms.
//
//   g, h ::= u | a | g.h | g^ | (g)
//
// `.` is composition, postfix `^` is inverse and `u` is the unit.

#ifndef CKAH_GROUP_H_
#define CKAH_GROUP_H_

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "ckah/term.h"

namespace ckah {

class GroupTerm {
 public:
  enum class Kind { kUnit, kGen, kCompose, kInverse };

  static GroupTerm Unit();
  static GroupTerm Gen(std::string name);
  static GroupTerm Compose(GroupTerm g, GroupTerm h);
  static GroupTerm Inverse(GroupTerm g);

  Kind kind() const;
  const std::string& name() const;
  const GroupTerm& left() const;
  const GroupTerm& right() const;
  int size() const;

  std::string ToString() const;

 private:
  struct Node;
  explicit GroupTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

absl::StatusOr<GroupTerm> ParseGroupTerm(std::string_view text);

// A reduced word: generators with an inverse flag, no adjacent x x^ or x^ x.
using GroupWord = std::vector<std::pair<std::string, bool>>;

GroupWord ReducedWord(const GroupTerm& g);
// The smallest group term spelling the reduced word, with runs grouped
// under one inverse where that is shorter: (b.a)^ rather than a^.b^.
GroupTerm GroupReduce(const GroupTerm& g);
bool GroupEquiv(const GroupTerm& g, const GroupTerm& h);

// Replaces every letter of `e` named in `letters` by the letter spelling the
// reduced form of its group term.
Term ReduceGroupLetters(const Term& e, const std::map<std::string, GroupTerm>& letters);

}  // namespace ckah

#endif  // CKAH_GROUP_H_
