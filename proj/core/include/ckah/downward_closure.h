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

// Downward closure under sp-subsumption, i.e. the exchange-law closure of a
// single pomset, and a generative (enumeration-free) subsumption test.

#ifndef CKAH_DOWNWARD_CLOSURE_H_
#define CKAH_DOWNWARD_CLOSURE_H_

#include <string>
#include <unordered_map>
#include <vector>

#include "ckah/pomset.h"
#include "ckah/poset.h"

namespace ckah {

// A down-set A of a pomset u, presented as (u|A, u|complement).
struct DownSetSplit {
  Pomset lower;
  Pomset upper;
};

// All down-sets of `u` up to isomorphism of the pair, including the empty
// and the full one.
std::vector<DownSetSplit> DownSetSplits(const Pomset& u);

// Memoising generator for downward closures. Reuse one instance across calls
// that share sub-pomsets (e.g. when closing a whole language).
class DownwardClosureCache {
 public:
  // { u : u ⊑ v }.
  const PomsetLanguage& Closure(const Pomset& v);

  // u ⊑ v by structural recursion on the two canonical terms.
  bool Subsumes(const Pomset& v, const Pomset& u);

 private:
  PomsetLanguage ParClosure(const Pomset& v);
  PomsetLanguage SequentialPart(const Pomset& v);

  std::unordered_map<std::string, PomsetLanguage> closures_;
  std::unordered_map<std::string, std::vector<DownSetSplit>> splits_;
  std::unordered_map<std::string, bool> subsumes_;

  const std::vector<DownSetSplit>& Splits(const Pomset& v);
};

PomsetLanguage DownwardClosure(const Pomset& v);

// { u sp : u ⊑ p } for an arbitrary (possibly N-shaped) poset.
PomsetLanguage SpDownwardClosure(const LabelledPoset& p);

// Generative counterpart of the poset bijection search.
bool SubsumesStructural(const Pomset& v, const Pomset& u);

// Sorted label names of the leaves.
std::vector<std::string> LabelMultiset(const Pomset& u);

}  // namespace ckah

#endif  // CKAH_DOWNWARD_CLOSURE_H_
