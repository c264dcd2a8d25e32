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

#include "ckah/closure.h"

#include <cstdlib>
#include <deque>
#include <map>
#include <set>

#include "absl/status/status.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "ckah/context.h"
#include "ckah/downward_closure.h"

namespace ckah {
namespace {

absl::Status Precondition(std::string_view what) {
  return absl::FailedPreconditionError(absl::StrCat("PreconditionViolated: ", std::string(what)));
}

std::map<std::string, int> LabelCounts(const Pomset& u) {
  std::map<std::string, int> out;
  for (const Label& l : u.Leaves()) ++out[l.name()];
  return out;
}

bool ContainsLabels(const std::map<std::string, int>& big,
                    const std::map<std::string, int>& small) {
  for (const auto& [name, count] : small) {
    auto it = big.find(name);
    if (it == big.end() || it->second < count) return false;
  }
  return true;
}

ClosureResult Truncated(PomsetLanguage language, std::string reason) {
  return {std::move(language), ClosureStatus::kTruncated, std::move(reason)};
}

ClosureResult RunEngine(const PomsetLanguage& l, const HypothesisSet& h,
                        const Budget& budget, bool sequential_only) {
  PomsetLanguage s = l;
  for (size_t i = 0; i < h.size(); ++i) {
    if (h.rhs_language(i).empty() && !h.lhs_language(i).empty()) {
      return Truncated(std::move(s), absl::StrCat("hypothesis '", h.hypotheses()[i].ToString(),
                                                  "' has an empty right-hand side, so "
                                                  "every context fires"));
    }
  }
  std::vector<std::vector<std::map<std::string, int>>> rhs_labels(h.size());
  for (size_t i = 0; i < h.size(); ++i) {
    for (const Pomset& v : h.rhs_language(i)) rhs_labels[i].push_back(LabelCounts(v));
  }

  std::deque<Pomset> work(l.begin(), l.end());
  int iterations = 0;
  while (!work.empty()) {
    if (++iterations > budget.max_iterations) {
      return Truncated(std::move(s), absl::StrCat("more than ", budget.max_iterations,
                                                  " worklist iterations"));
    }
    const Pomset w = work.front();
    work.pop_front();
    const std::map<std::string, int> w_labels = LabelCounts(w);
    for (size_t i = 0; i < h.size(); ++i) {
      const PomsetLanguage& f = h.rhs_language(i);
      std::set<SpContext> tried;
      size_t j = 0;
      for (auto v = f.begin(); v != f.end(); ++v, ++j) {
        if (v->size() > w.size() || !ContainsLabels(w_labels, rhs_labels[i][j])) continue;
        for (const SpContext& c : Occurrences(w, *v)) {
          if (sequential_only && !IsSequential(c)) continue;
          if (!tried.insert(c).second) continue;
          bool premise = true;
          for (const Pomset& other : f) {
            if (!s.Contains(Plug(c, other))) {
              premise = false;
              break;
            }
          }
          if (!premise) continue;
          for (const Pomset& u : h.lhs_language(i)) {
            Pomset added = Plug(c, u);
            if (added.size() > budget.max_leaf_count) {
              return Truncated(std::move(s),
                               absl::StrCat("a member exceeds ", budget.max_leaf_count,
                                            " events"));
            }
            if (!s.Insert(added)) continue;
            work.push_back(std::move(added));
            if (static_cast<int>(s.size()) > budget.max_language_size) {
              return Truncated(std::move(s),
                               absl::StrCat("language exceeds ", budget.max_language_size,
                                            " members"));
            }
          }
        }
      }
    }
  }
  return {std::move(s), ClosureStatus::kComplete, ""};
}

}  // namespace

absl::StatusOr<ClosureResult> Close(const PomsetLanguage& l, const HypothesisSet& h,
                                    const Budget& budget) {
  if (h.includes_exch()) {
    return Precondition("the generic engine does not instantiate exch");
  }
  return RunEngine(l, h, budget, /*sequential_only=*/false);
}

PomsetLanguage CloseExch(const PomsetLanguage& l) {
  DownwardClosureCache cache;
  PomsetLanguage out;
  for (const Pomset& v : l) out.InsertAll(cache.Closure(v));
  return out;
}

absl::StatusOr<ClosureResult> CloseSeq(const PomsetLanguage& l, const HypothesisSet& h,
                                       const Budget& budget) {
  for (const Pomset& u : l) {
    if (!u.IsWord()) return Precondition(absl::StrCat("'", u.key(), "' is not a word"));
  }
  if (h.includes_exch() || !h.grounded() || h.has_parallel_side()) {
    return Precondition("sequential closure needs grounded, parallel-free hypotheses");
  }
  return RunEngine(l, h, budget, /*sequential_only=*/true);
}

absl::StatusOr<ClosureResult> CloseFactorized(const PomsetLanguage& l,
                                              const HypothesisSet& h,
                                              const Budget& budget) {
  if (!h.has_unit_or_letter_lhs()) {
    return Precondition("every left-hand side must be 1 or a single letter");
  }
  return RunEngine(CloseExch(l), h.WithoutExch(), budget, /*sequential_only=*/false);
}

absl::StatusOr<ClosureResult> CloseJoint(const PomsetLanguage& l, const HypothesisSet& h,
                                         const Budget& budget) {
  const HypothesisSet rest = h.WithoutExch();
  PomsetLanguage s = l;
  while (true) {
    if (h.includes_exch()) s = CloseExch(s);
    if (static_cast<int>(s.size()) > budget.max_language_size) {
      return Truncated(std::move(s), absl::StrCat("language exceeds ",
                                                  budget.max_language_size, " members"));
    }
    ClosureResult r = RunEngine(s, rest, budget, /*sequential_only=*/false);
    if (!r.complete() || !h.includes_exch() || r.language.size() == s.size()) return r;
    s = std::move(r.language);
  }
}

absl::StatusOr<ClosureResult> CloseUnder(const PomsetLanguage& l, const HypothesisSet& h,
                                         const Budget& budget) {
  if (!h.includes_exch()) return Close(l, h, budget);
  if (h.has_unit_or_letter_lhs()) return CloseFactorized(l, h, budget);
  return CloseJoint(l, h, budget);
}

LanguageComparison LanguageEqual(const PomsetLanguage& l, const PomsetLanguage& k) {
  LanguageComparison out;
  auto a = l.begin();
  auto b = k.begin();
  while (a != l.end() || b != k.end()) {
    if (b == k.end() || (a != l.end() && *a < *b)) {
      out = {false, *a, true};
      return out;
    }
    if (a == l.end() || *b < *a) {
      out = {false, *b, false};
      return out;
    }
    ++a;
    ++b;
  }
  return out;
}

absl::StatusOr<bool> LeqSemantic(const Term& e, const Term& f, const HypothesisSet& h,
                                 const Budget& budget, UnrollBudget unroll) {
  absl::StatusOr<PomsetLanguage> le = SemanticsBounded(e, unroll);
  if (!le.ok()) return le.status();
  absl::StatusOr<PomsetLanguage> lf = SemanticsBounded(f, unroll);
  if (!lf.ok()) return lf.status();
  absl::StatusOr<ClosureResult> ce = CloseUnder(*le, h, budget);
  if (!ce.ok()) return ce.status();
  absl::StatusOr<ClosureResult> cf = CloseUnder(*lf, h, budget);
  if (!cf.ok()) return cf.status();
  for (const ClosureResult* r : {&*ce, &*cf}) {
    if (!r->complete()) return absl::ResourceExhaustedError(r->reason);
  }
  return ce->language.IsSubsetOf(cf->language);
}

Budget BudgetFromEnvironment(Budget defaults) {
  auto read = [](const char* name, int& field) {
    const char* value = std::getenv(name);
    int parsed = 0;
    if (value != nullptr && absl::SimpleAtoi(value, &parsed) && parsed > 0) field = parsed;
  };
  read("CKAH_MAX_LANGUAGE", defaults.max_language_size);
  read("CKAH_MAX_ITERATIONS", defaults.max_iterations);
  return defaults;
}

}  // namespace ckah
