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


#include "ckah/observation_closure.h"

#include "ckah/ckao.h"
#include "ckah/closure.h"
#include "ckah/hypothesis.h"
#include "ckah/parser.h"
#include "ckah/semantics.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace ckah {
namespace {

using ::testing::ElementsAre;

Pomset P(std::string_view text) { return *ParsePomset(text); }
Term T(std::string_view text) { return *ParseTerm(text); }

std::vector<std::string> Keys(const PomsetLanguage& l) {
  std::vector<std::string> out;
  for (const Pomset& u : l) out.push_back(u.key());
  return out;
}

// Atom letters of Ω = {o} plus one action.
const std::vector<std::string> kLetters = {"@{o}", "@{}", "a"};

PomsetLanguage ObsClose(const PomsetLanguage& l) {
  return CloseFactorized(l, *BuiltinPack("obs", {"o"}))->language;
}

TEST(ContractionCheckerTest, Examples) {
  ContractionChecker c;
  EXPECT_TRUE(c.Below(P("@{o};@{o}"), P("@{o}")));
  EXPECT_FALSE(c.Below(P("@{o}"), P("@{o};@{o}")));
  EXPECT_TRUE(c.Below(P("@{o}||a"), P("@{o};a")));
  // The lone atom is scheduled next to its twin and then contracted.
  EXPECT_TRUE(c.Below(P("a;@{o};a || @{o}"), P("a;@{o};a")));
  EXPECT_FALSE(c.Below(P("a;@{o};a || @{}"), P("a;@{o};a")));
  // Actions never contract.
  EXPECT_FALSE(c.Below(P("a;a"), P("a")));
  EXPECT_TRUE(c.InClosure(PomsetLanguage{P("a"), P("@{};@{}")}, P("@{}")));
}

TEST(ClosureMembershipTest, Examples) {
  ClosureMembership m(T("@{o};a;@{o} || @{o}"));
  EXPECT_TRUE(m.Contains(P("@{o};a;@{o}")));
  EXPECT_TRUE(m.Contains(P("@{o};a;@{o};@{o}")));
  EXPECT_FALSE(m.Contains(P("a;@{o}")));
  EXPECT_FALSE(m.Contains(P("@{o};a;a;@{o}")));

  ClosureMembership star(T("(@{o};a)*"));
  EXPECT_TRUE(star.Contains(Pomset()));
  EXPECT_TRUE(star.Contains(P("@{o};a;@{o};a")));
  EXPECT_FALSE(star.Contains(P("a;@{o}")));

  ClosureMembership merge(T("a;@{o}"));
  EXPECT_FALSE(merge.Contains(P("a")));
  ClosureMembership glue(T("(a;@{o});(@{o};a)"));
  EXPECT_TRUE(glue.Contains(P("a;@{o};a")));
}

TEST(MergeTest, Examples) {
  const PomsetLanguage alpha = {P("@{o}")};
  EXPECT_THAT(Keys(SeqMerge(alpha, alpha, 4)), ElementsAre("@{o}", "@{o};@{o}"));
  EXPECT_THAT(Keys(SeqMerge(alpha, alpha, 1)), ElementsAre("@{o}"));
  absl::StatusOr<PomsetLanguage> par = ParMerge(alpha, alpha, 4);
  ASSERT_TRUE(par.ok());
  EXPECT_THAT(Keys(*par), ElementsAre("@{o}", "@{o};@{o}", "@{o}||@{o}"));
  EXPECT_EQ(*par, ObsClose({P("@{o}||@{o}")}));
}

TEST(BoundedObservationClosureTest, Examples) {
  absl::StatusOr<PomsetLanguage> l = BoundedObservationClosure(T("@{o};@{o}"), 4);
  ASSERT_TRUE(l.ok());
  EXPECT_THAT(Keys(*l), ElementsAre("@{o}", "@{o};@{o}"));
  l = BoundedObservationClosure(T("@{o}*"), 2);
  EXPECT_THAT(Keys(*l), ElementsAre("1", "@{o}", "@{o};@{o}"));
  absl::StatusOr<PomsetLanguage> obs = BoundedObservationClosure(T("{o}"), 2);
  EXPECT_FALSE(obs.ok());
}

TEST(ObservationClosurePropertyTest, MembershipAgreesWithClosure) {
  testing::Rng rng(41);
  testing::TermShape shape;
  shape.actions = kLetters;
  for (int i = 0; i < 150; ++i) {
    const Term e = testing::RandomTerm(rng, 1 + i % 5, shape);
    const PomsetLanguage sem = *SemanticsStarFree(e);
    const PomsetLanguage closed = ObsClose(sem);
    ClosureMembership m(e);
    ContractionChecker c;
    const int n = std::max(1, sem.MaxSize());
    PomsetLanguage candidates = testing::AllSpUpTo(n, kLetters);
    candidates.Insert(Pomset());
    for (const Pomset& v : candidates) {
      const bool want = closed.Contains(v);
      EXPECT_EQ(m.Contains(v), want) << e.ToString() << " / " << v.key();
      EXPECT_EQ(c.InClosure(sem, v), want) << e.ToString() << " / " << v.key();
    }
    EXPECT_EQ(*BoundedObservationClosure(e, n), closed) << e.ToString();
  }
}

TEST(ObservationClosurePropertyTest, BoundedClosureWithStars) {
  testing::Rng rng(42);
  testing::TermShape shape;
  shape.actions = kLetters;
  shape.star = true;
  for (int i = 0; i < 100; ++i) {
    const Term e = testing::RandomTerm(rng, 1 + i % 4, shape);
    const int k = 2 + i % 3;
    absl::StatusOr<PomsetLanguage> tk = BoundedObservationClosure(e, k);
    ASSERT_TRUE(tk.ok()) << e.ToString();
    EXPECT_LE(tk->MaxSize(), k);
    // Contains the closure of a deeper unrolling, cut at k...
    const PomsetLanguage deeper = LangSizeFilter(ObsClose(*SemanticsBounded(e, {k + 2})), k);
    EXPECT_TRUE(deeper.IsSubsetOf(*tk)) << e.ToString();
    // ...and nothing outside the closure.
    ClosureMembership m(e);
    for (const Pomset& v : *tk) EXPECT_TRUE(m.Contains(v)) << e.ToString() << " / " << v.key();
  }
}

TEST(RawObservationTest, PackShape) {
  absl::StatusOr<HypothesisSet> pack = RawObservationPack({"o"});
  ASSERT_TRUE(pack.ok());
  EXPECT_TRUE(pack->includes_exch());
  EXPECT_FALSE(pack->grounded());
  const std::map<std::string, Term> r = ClassReification({"o"});
  EXPECT_EQ(r.size(), 3u);
  EXPECT_EQ(ObservationClassLetters(T("{o};a;{!o}"), {"o"}), T("@{o};a;@{}"));
  EXPECT_EQ(ObservationClassLetters(T("{o & !o}"), {"o"}), T("0"));
}

TEST(RawObservationTest, AgreesWithReducedPackOnSmallTerms) {
  for (std::string_view text : {"{o};{o}", "{o} || a", "{T};a", "({o} + {!o});a"}) {
    const Term e = T(text);
    const PomsetLanguage sem = *SemanticsStarFree(ObservationClassLetters(e, {"o"}));
    Budget budget;
    budget.max_language_size = 5000;
    budget.max_leaf_count = 4;
    absl::StatusOr<ClosureResult> raw = RawObservationClosure(sem, {"o"}, budget);
    ASSERT_TRUE(raw.ok()) << text;
    const PomsetLanguage reduced = ObsClose(*SemanticsStarFree(Reify(e, {"o"})));
    // The raw pack may run past the leaf cap; compare below it.
    EXPECT_EQ(LangSizeFilter(raw->language, 3), LangSizeFilter(reduced, 3)) << text;
  }
}

}  // namespace
}  // namespace ckah
