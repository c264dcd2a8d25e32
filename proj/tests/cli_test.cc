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


#include "cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "absl/strings/str_split.h"
#include "ckah/parser.h"
#include "ckah/poset.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace ckah::cli {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;
using ::testing::Not;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result RunArgs(std::vector<std::string> args) {
  args.insert(args.begin(), "ckah");
  std::vector<char*> argv;
  for (std::string& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = Run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// Report lines that are not part of the "# ..." header.
std::vector<std::string> Body(const std::string& report) {
  std::vector<std::string> out;
  for (absl::string_view line : absl::StrSplit(report, '\n', absl::SkipEmpty())) {
    if (!line.empty() && line[0] != '#') out.emplace_back(line);
  }
  return out;
}

std::filesystem::path TempDir(const std::string& name) {
  const std::filesystem::path dir = std::filesystem::path(::testing::TempDir()) / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

TEST(CheckTest, CollapseRegression) {
  const Result r = RunArgs({"check", "{o};a;{!o}", "0", "--hyp", "obs"});
  EXPECT_EQ(r.code, kExitDifferent);
  EXPECT_THAT(r.out, HasSubstr("\nDIFFERENT\n"));
  EXPECT_THAT(r.out, HasSubstr("witness: @{o};a;@{} (only in the left closure)"));
  EXPECT_THAT(r.out, HasSubstr("# hypotheses: obs\n# omega: {o}\n# bound: 12\n"));
}

TEST(CheckTest, Trivial) {
  const Result r = RunArgs({"check", "a", "a", "--hyp", "none"});
  EXPECT_EQ(r.code, kExitEquivalent);
  EXPECT_THAT(Body(r.out), ElementsAre("left: a", "right: a", "EQUIVALENT", "left <= right: true",
                                       "right <= left: true"));
}

TEST(CheckTest, ExchangeDirection) {
  const Result r = RunArgs({"check", "(a||b);(c||d)", "(a;c)||(b;d)", "--hyp", "exch"});
  EXPECT_EQ(r.code, kExitDifferent);
  EXPECT_THAT(r.out, HasSubstr("left <= right: true\nright <= left: false\n"));
}

TEST(CheckTest, DefaultPackFollowsObservations) {
  EXPECT_THAT(RunArgs({"check", "{o}", "{o}"}).out, HasSubstr("# hypotheses: obs\n"));
  EXPECT_THAT(RunArgs({"check", "a", "a"}).out, HasSubstr("# hypotheses: none\n"));
}

TEST(CheckTest, StarsAndBounds) {
  Result r = RunArgs({"check", "a*", "1 + a;a*", "--bound", "5"});
  EXPECT_EQ(r.code, kExitEquivalent);
  EXPECT_THAT(r.out, HasSubstr("EQUIVALENT-UP-TO 5"));
  r = RunArgs({"check", "print;incr_x;incr_x;print", "(incr_x||print)*", "--hyp", "demo-print",
               "--bound", "4"});
  EXPECT_EQ(r.code, kExitDifferent);
  EXPECT_THAT(r.out, HasSubstr("left <= right: true"));
}

TEST(CheckTest, Inconclusive) {
  const std::filesystem::path dir = TempDir("inconclusive");
  std::ofstream(dir / "h.txt") << "# erasing a\n1 <= a\n";
  const Result r = RunArgs({"check", "a*", "a*", "--hyp-file", (dir / "h.txt").string()});
  EXPECT_EQ(r.code, kExitInconclusive);
  EXPECT_THAT(r.out, HasSubstr("INCONCLUSIVE\nreason: "));
}

TEST(CheckTest, BudgetFromEnvironment) {
  setenv("CKAH_MAX_LANGUAGE", "3", 1);
  const Result r = RunArgs({"check", "a||b||c", "a;b;c", "--hyp", "exch"});
  unsetenv("CKAH_MAX_LANGUAGE");
  EXPECT_THAT(r.out, HasSubstr("# budget: 3 members"));
}

TEST(CheckTest, HypothesisFile) {
  const std::filesystem::path dir = TempDir("hypfile");
  std::ofstream(dir / "bake.txt") << "exch\n";
  const Result r = RunArgs({"closure", "bake || bake;mix", "--hyp", "demo-bake", "--hyp-file",
                            (dir / "bake.txt").string()});
  EXPECT_EQ(r.code, kExitEquivalent);
  EXPECT_THAT(Body(r.out), ::testing::Contains("bake;mix;bake"));
  EXPECT_THAT(Body(r.out), ::testing::Contains("bake;bake;mix"));
  EXPECT_THAT(Body(r.out), Not(::testing::Contains("mix;bake;bake")));
}

TEST(CheckTest, Errors) {
  Result r = RunArgs({"check", "a;", "a"});
  EXPECT_EQ(r.code, kExitParseError);
  EXPECT_THAT(r.err, HasSubstr("SyntaxError at byte 2"));
  EXPECT_EQ(RunArgs({"check", "a", "a", "--hyp", "nope"}).code, kExitParseError);
  EXPECT_EQ(RunArgs({"check", "a"}).code, kExitParseError);
  EXPECT_EQ(RunArgs({"frobnicate"}).code, kExitParseError);
  EXPECT_EQ(RunArgs({"check", "a", "a", "--hyp-file", "/nonexistent/h.txt"}).code, kExitError);
  EXPECT_EQ(RunArgs({"check", "{o};{p}", "1", "--omega", "o"}).code, kExitParseError);
  EXPECT_EQ(RunArgs({"--help"}).code, 0);
  EXPECT_EQ(RunArgs({"check", "--help"}).code, 0);
}

TEST(CheckTest, WitnessDot) {
  const std::filesystem::path dir = TempDir("witness");
  const Result r =
      RunArgs({"check", "a||b", "a;b", "--witness", "--dot", dir.string()});
  EXPECT_EQ(r.code, kExitDifferent);
  EXPECT_THAT(r.out, HasSubstr("digraph witness {"));
  std::ifstream in(dir / "witness.dot");
  std::stringstream text;
  text << in.rdbuf();
  absl::StatusOr<LabelledPoset> p = testing::ParseDot(text.str());
  ASSERT_TRUE(p.ok()) << p.status();
  EXPECT_THAT(r.out, HasSubstr("witness: a;b (only in the right closure)"));
  EXPECT_TRUE(Isomorphic(*p, ToPoset(*ParsePomset("a;b"))));
}

TEST(CheckTest, CrossCheckLine) {
  const Result r = RunArgs({"check", "{o}+{!o}", "{T}", "--cross-check"});
  EXPECT_EQ(r.code, kExitEquivalent);
  EXPECT_THAT(r.out, HasSubstr("cross-check: closure engine agrees"));
}

TEST(ClosureTest, Examples) {
  EXPECT_THAT(Body(RunArgs({"closure", "a||b", "--hyp", "exch"}).out),
              ElementsAre("a;b", "a||b", "b;a"));
  EXPECT_THAT(Body(RunArgs({"closure", "1", "--hyp", "obs"}).out), ElementsAre("1"));
  EXPECT_THAT(Body(RunArgs({"closure", "{o};{o}", "--hyp", "obs", "--omega", "o"}).out),
              ElementsAre("@{o}", "@{o};@{o}"));
  EXPECT_THAT(Body(RunArgs({"closure", "incr_x || print", "--hyp", "demo-print"}).out),
              ElementsAre("incr_x;print", "incr_x||print", "print;incr_x"));
  EXPECT_THAT(Body(RunArgs({"closure", "a*", "--bound", "2"}).out), ElementsAre("1", "a", "a;a"));
}

TEST(ClosureTest, DotPerMember) {
  const std::filesystem::path dir = TempDir("members");
  EXPECT_EQ(RunArgs({"closure", "a||b", "--hyp", "exch", "--dot", dir.string()}).code, 0);
  EXPECT_TRUE(std::filesystem::exists(dir / "member_0000.dot"));
  EXPECT_TRUE(std::filesystem::exists(dir / "member_0002.dot"));
  EXPECT_FALSE(std::filesystem::exists(dir / "member_0003.dot"));
}

TEST(ExportDotTest, Examples) {
  EXPECT_EQ(ExportDot(*ParsePomset("a;b")), "digraph pomset {\n  n0 [label=\"a\"];\n"
                                             "  n1 [label=\"b\"];\n  n0 -> n1;\n}\n");
  EXPECT_THAT(ExportDot(*ParsePomset("a||b")), Not(HasSubstr("->")));
  const std::string three = ExportDot(*ParsePomset("(a||b);c"));
  EXPECT_THAT(three, HasSubstr("n0 -> n2;"));
  EXPECT_THAT(three, HasSubstr("n1 -> n2;"));
  EXPECT_THAT(three, Not(HasSubstr("n0 -> n1;")));
}

TEST(ExportDotTest, RoundTrip) {
  testing::Rng rng(61);
  for (int i = 0; i < 300; ++i) {
    const Pomset p = testing::RandomPomset(rng, 1 + i % 7, {"a", "b", "c"});
    absl::StatusOr<LabelledPoset> back = testing::ParseDot(ExportDot(p));
    ASSERT_TRUE(back.ok()) << back.status();
    EXPECT_TRUE(Isomorphic(*back, ToPoset(p))) << p.key();
    EXPECT_EQ(*FromPoset(*back), p);
  }
}

TEST(DeterminismTest, IdenticalReports) {
  const std::vector<std::vector<std::string>> requests = {
      {"check", "{o};a || {p};b", "({o};a || {p};b);{!o}"},
      {"check", "(a||b)*", "a*", "--hyp", "exch", "--bound", "4", "--witness"},
      {"closure", "bake || bake;mix", "--hyp", "demo-bake"}};
  for (const auto& req : requests) {
    const Result a = RunArgs(req), b = RunArgs(req);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.err, b.err);
  }
}

}  // namespace
}  // namespace ckah::cli
