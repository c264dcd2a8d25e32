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


#include <fstream>
#include <string>

#include "absl/strings/str_split.h"
#include "ckah/closure.h"
#include "ckah/parser.h"
#include "ckah/semantics.h"
#include "ckah/term.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace ckah {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;

Term T(std::string_view text) { return *ParseTerm(text); }
Pomset P(std::string_view text) { return *ParsePomset(text); }

std::vector<std::string> Keys(const PomsetLanguage& l) {
  std::vector<std::string> out;
  for (const Pomset& u : l) out.push_back(u.key());
  return out;
}

TEST(ParserTest, Structure) {
  const Term e = T("a;(b||c)*");
  ASSERT_EQ(e.kind(), Term::Kind::kDot);
  EXPECT_EQ(e.left(), Term::Act("a"));
  ASSERT_EQ(e.right().kind(), Term::Kind::kStar);
  EXPECT_EQ(e.right().left(), Term::Par(Term::Act("b"), Term::Act("c")));

  const Term obs = T("{o & !o}");
  ASSERT_EQ(obs.kind(), Term::Kind::kObs);
  EXPECT_EQ(obs.obs(), BoolTerm::And(BoolTerm::Prim("o"), BoolTerm::Not(BoolTerm::Prim("o"))));

  EXPECT_EQ(T("a||b;c"), Term::Par(Term::Act("a"), Term::Dot(Term::Act("b"), Term::Act("c"))));
  EXPECT_EQ(T("a+b||c"), Term::Plus(Term::Act("a"), Term::Par(Term::Act("b"), Term::Act("c"))));
  EXPECT_EQ(T("a.b"), T("a;b"));
}

TEST(ParserTest, ErrorsCarryOffsets) {
  absl::StatusOr<Term> r = ParseTerm("a;(b");
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.status().code(), absl::StatusCode::kInvalidArgument);
  EXPECT_THAT(std::string(r.status().message()), HasSubstr("SyntaxError at byte 4"));
  EXPECT_FALSE(ParseTerm("").ok());
  EXPECT_FALSE(ParseTerm("a;*").ok());
  EXPECT_TRUE(ParseTerm("a;*", {.allow_hole = true}).ok());
}

TEST(ParserTest, GoldenCorpus) {
  std::ifstream in(std::string(CKAH_GOLDEN_DIR) + "/terms.tsv");
  ASSERT_TRUE(in.good());
  std::string line;
  int cases = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> parts = absl::StrSplit(line, '\t');
    ASSERT_EQ(parts.size(), 2u) << line;
    absl::StatusOr<Term> t = ParseTerm(parts[0]);
    const std::string got = t.ok() ? t->ToString() : "error: " + std::string(t.status().message());
    EXPECT_EQ(got, parts[1]) << parts[0];
    if (t.ok()) EXPECT_EQ(*ParseTerm(got), *t) << "printer round trip of " << parts[0];
    ++cases;
  }
  EXPECT_GE(cases, 30);
}

TEST(ParserTest, RandomRoundTrip) {
  testing::Rng rng(21);
  testing::TermShape shape;
  shape.observations = {"o", "p"};
  shape.star = true;
  for (int i = 0; i < 500; ++i) {
    const Term e = testing::RandomTerm(rng, 1 + i % 9, shape);
    absl::StatusOr<Term> back = ParseTerm(e.ToString());
    ASSERT_TRUE(back.ok()) << e.ToString() << ": " << back.status();
    EXPECT_EQ(*back, e) << e.ToString();
  }
}

TEST(SemanticsTest, StarFree) {
  EXPECT_TRUE(SemanticsStarFree(T("0"))->empty());
  EXPECT_THAT(Keys(*SemanticsStarFree(T("1"))), ElementsAre("1"));
  EXPECT_THAT(Keys(*SemanticsStarFree(T("(a+b);c"))), ElementsAre("a;c", "b;c"));

  absl::StatusOr<PomsetLanguage> star = SemanticsStarFree(T("a*"));
  ASSERT_FALSE(star.ok());
  EXPECT_THAT(std::string(star.status().message()), HasSubstr("ContainsStar"));
  absl::StatusOr<PomsetLanguage> obs = SemanticsStarFree(T("{o}"));
  ASSERT_FALSE(obs.ok());
  EXPECT_THAT(std::string(obs.status().message()), HasSubstr("ContainsObs"));
}

TEST(SemanticsTest, Bounded) {
  EXPECT_THAT(Keys(*SemanticsBounded(T("a*"), {2})), ElementsAre("1", "a", "a;a"));
  EXPECT_THAT(Keys(*SemanticsBounded(T("1*"), {5})), ElementsAre("1"));
  EXPECT_THAT(Keys(*SemanticsBounded(T("(a||b)*"), {2})), ElementsAre("1", "a||b"));
  EXPECT_FALSE(SemanticsBounded(T("{o}*"), {3}).ok());
}

TEST(SemanticsPropertyTest, BoundedIsMonotoneAndExact) {
  testing::Rng rng(22);
  testing::TermShape shape;
  shape.star = true;
  for (int i = 0; i < 200; ++i) {
    const Term e = testing::RandomTerm(rng, 1 + i % 6, shape);
    PomsetLanguage previous;
    for (int k = 0; k <= 5; ++k) {
      const PomsetLanguage l = *SemanticsBounded(e, {k});
      EXPECT_TRUE(previous.IsSubsetOf(l)) << e.ToString() << " k=" << k;
      EXPECT_LE(l.MaxSize(), k);
      previous = l;
    }
    if (!e.ContainsStar()) {
      EXPECT_EQ(*SemanticsBounded(e, {e.LeafCount()}), *SemanticsStarFree(e)) << e.ToString();
    }
  }
}

TEST(SemanticsPropertyTest, AxiomRewritesPreserveSemantics) {
  testing::Rng rng(23);
  testing::TermShape shape;
  const HypothesisSet exch = HypothesisSet::Exch();
  for (int i = 0; i < 500; ++i) {
    const Term e = testing::RandomTerm(rng, 1 + i % 6, shape);
    const Term f = testing::RewriteByAxiom(rng, e);
    const PomsetLanguage le = *SemanticsStarFree(e), lf = *SemanticsStarFree(f);
    EXPECT_EQ(le, lf) << e.ToString() << " vs " << f.ToString();
    EXPECT_EQ(CloseExch(le), CloseExch(lf));
  }
}

TEST(LeqSemanticTest, Examples) {
  EXPECT_TRUE(*LeqSemantic(T("a"), T("a+b"), HypothesisSet()));
  EXPECT_FALSE(*LeqSemantic(T("a+b"), T("a"), HypothesisSet()));
  EXPECT_TRUE(*LeqSemantic(T("(a||b);(c||d)"), T("a;c||b;d"), HypothesisSet::Exch()));
  EXPECT_FALSE(*LeqSemantic(T("a;c||b;d"), T("(a||b);(c||d)"), HypothesisSet::Exch()));
}

TEST(BoolTermTest, EvaluateAndPrint) {
  const BoolTerm p = *ParseBoolTerm("o | p & !q");
  EXPECT_TRUE(p.Evaluate({"o"}));
  EXPECT_TRUE(p.Evaluate({"p"}));
  EXPECT_FALSE(p.Evaluate({"p", "q"}));
  EXPECT_EQ(p.ToString(), "o | p & !q");
  EXPECT_EQ(ParseBoolTerm("(o | p) & q")->ToString(), "(o | p) & q");
}

}  // namespace
}  // namespace ckah
