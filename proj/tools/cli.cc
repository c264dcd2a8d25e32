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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "ckah/ckao.h"
#include "ckah/closure.h"
#include "ckah/decision.h"
#include "ckah/hypothesis.h"
#include "ckah/parser.h"
#include "ckah/poset.h"

namespace ckah::cli {
namespace {

int ExitFor(const absl::Status& status) {
  switch (status.code()) {
    case absl::StatusCode::kInvalidArgument:
      return kExitParseError;
    case absl::StatusCode::kResourceExhausted:
      return kExitInconclusive;
    default:
      return kExitError;
  }
}

int Fail(const absl::Status& status, std::ostream& err) {
  err << "error: " << status.message() << "\n";
  return ExitFor(status);
}

struct Setup {
  std::vector<Term> terms;
  std::string pack;
  bool obs = false;
  HypothesisSet hypotheses;
  std::vector<std::string> omega;
  DecideOptions options;
};

absl::StatusOr<Setup> Prepare(const Request& r, const std::vector<std::string>& texts) {
  Setup s;
  for (const std::string& text : texts) {
    absl::StatusOr<Term> t = ParseTerm(text);
    if (!t.ok()) {
      return absl::InvalidArgumentError(absl::StrCat("in '", text, "': ", t.status().message()));
    }
    s.terms.push_back(*std::move(t));
  }
  bool has_obs = false;
  for (const Term& t : s.terms) has_obs = has_obs || t.ContainsObs();
  s.pack = r.hyp.empty() ? (r.hyp_file ? "none" : (has_obs ? "obs" : "none")) : r.hyp;
  s.obs = s.pack == "obs";
  if (s.obs && r.hyp_file) {
    return absl::InvalidArgumentError("--hyp obs cannot be combined with --hyp-file");
  }
  if (r.bound < 0) return absl::InvalidArgumentError("--bound must be non-negative");
  if (!s.obs && has_obs) {
    return absl::FailedPreconditionError(
        "ContainsObs: observation leaves need --hyp obs");
  }
  absl::StatusOr<std::vector<std::string>> omega = InferOmega(s.terms, r.omega);
  if (!omega.ok()) return omega.status();
  s.omega = *std::move(omega);
  absl::StatusOr<HypothesisSet> h = BuiltinPack(s.pack, s.omega);
  if (!h.ok()) return h.status();
  s.hypotheses = *std::move(h);
  if (r.hyp_file) {
    std::ifstream in(*r.hyp_file);
    if (!in) return absl::NotFoundError(absl::StrCat("cannot read ", *r.hyp_file));
    std::stringstream buffer;
    buffer << in.rdbuf();
    absl::StatusOr<HypothesisSet> file = ParseHypotheses(buffer.str());
    if (!file.ok()) {
      return absl::Status(file.status().code(),
                          absl::StrCat(*r.hyp_file, ": ", file.status().message()));
    }
    s.hypotheses = s.hypotheses.Union(*file);
  }
  s.options.bound = r.bound;
  s.options.budget = BudgetFromEnvironment();
  s.options.cross_check = r.cross_check;
  return s;
}

void Header(const std::string& command, const Request& r, const Setup& s, std::ostream& out) {
  out << "# ckah " << command << "\n";
  out << "# hypotheses: " << s.pack << (r.hyp_file ? " + " + *r.hyp_file : "") << "\n";
  if (s.obs) out << "# omega: {" << absl::StrJoin(s.omega, ",") << "}\n";
  out << "# bound: " << r.bound << "\n";
  out << "# budget: " << s.options.budget.max_language_size << " members, "
      << s.options.budget.max_iterations << " iterations\n";
}

std::string Inclusion(const std::optional<bool>& b) {
  if (!b.has_value()) return "unknown";
  return *b ? "true" : "false";
}

absl::Status EnsureDir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return absl::InternalError(absl::StrCat("cannot create ", dir, ": ", ec.message()));
  return absl::OkStatus();
}

}  // namespace

std::string ExportDot(const Pomset& p, const std::string& name) {
  const LabelledPoset g = ToPoset(p);
  std::string out = absl::StrCat("digraph ", name, " {\n");
  for (int i = 0; i < g.size(); ++i) {
    absl::StrAppend(&out, "  n", i, " [label=\"", g.label(i).name(), "\"];\n");
  }
  for (const auto& [a, b] : g.CoveringPairs()) absl::StrAppend(&out, "  n", a, " -> n", b, ";\n");
  out += "}\n";
  return out;
}

absl::Status WriteDot(const Pomset& p, const std::string& path) {
  std::ofstream file(path);
  if (!file) return absl::InternalError(absl::StrCat("cannot write ", path));
  file << ExportDot(p);
  if (!file) return absl::InternalError(absl::StrCat("write failed: ", path));
  return absl::OkStatus();
}

int CmdCheck(const Request& r, std::ostream& out, std::ostream& err) {
  absl::StatusOr<Setup> s = Prepare(r, {r.left, r.right});
  if (!s.ok()) return Fail(s.status(), err);
  absl::StatusOr<Verdict> v =
      s->obs ? DecideCkao(s->terms[0], s->terms[1], s->omega, s->options)
             : Decide(s->terms[0], s->terms[1], s->hypotheses, s->options);
  if (!v.ok()) return Fail(v.status(), err);
  Header("check", r, *s, out);
  out << "left: " << s->terms[0].ToString() << "\n";
  out << "right: " << s->terms[1].ToString() << "\n";
  switch (v->kind) {
    case VerdictKind::kEquivalent:
      out << "EQUIVALENT\n";
      break;
    case VerdictKind::kEquivalentUpTo:
      out << "EQUIVALENT-UP-TO " << v->bound << "\n";
      break;
    case VerdictKind::kDifferent:
      out << "DIFFERENT\n";
      out << "witness: " << v->witness->ToString() << " (only in the "
          << (v->witness_in_left ? "left" : "right") << " closure)\n";
      break;
    case VerdictKind::kInconclusive:
      out << "INCONCLUSIVE\n";
      out << "reason: " << v->reason << "\n";
      break;
  }
  out << "left <= right: " << Inclusion(v->left_leq_right) << "\n";
  out << "right <= left: " << Inclusion(v->right_leq_left) << "\n";
  if (!v->cross_check.empty()) out << "cross-check: " << v->cross_check << "\n";
  if (v->witness && r.witness) out << ExportDot(*v->witness, "witness");
  if (v->witness && r.dot_dir) {
    absl::Status st = EnsureDir(*r.dot_dir);
    if (st.ok()) st = WriteDot(*v->witness, *r.dot_dir + "/witness.dot");
    if (!st.ok()) return Fail(st, err);
  }
  switch (v->kind) {
    case VerdictKind::kEquivalent:
    case VerdictKind::kEquivalentUpTo:
      return kExitEquivalent;
    case VerdictKind::kDifferent:
      return kExitDifferent;
    case VerdictKind::kInconclusive:
      return kExitInconclusive;
  }
  return kExitError;
}

int CmdClosure(const Request& r, std::ostream& out, std::ostream& err) {
  absl::StatusOr<Setup> s = Prepare(r, {r.left});
  if (!s.ok()) return Fail(s.status(), err);
  absl::StatusOr<ClosureResult> c = s->obs ? CkaoClosure(s->terms[0], s->omega, s->options)
                                           : ClosureOf(s->terms[0], s->hypotheses, s->options);
  if (!c.ok()) return Fail(c.status(), err);
  Header("closure", r, *s, out);
  if (!c->complete()) {
    out << "INCONCLUSIVE\nreason: " << c->reason << "\n";
    return kExitInconclusive;
  }
  if (r.dot_dir) {
    if (absl::Status st = EnsureDir(*r.dot_dir); !st.ok()) return Fail(st, err);
  }
  int index = 0;
  for (const Pomset& u : c->language) {
    out << u.ToString() << "\n";
    if (r.dot_dir) {
      absl::Status st =
          WriteDot(u, absl::StrFormat("%s/member_%04d.dot", *r.dot_dir, index++));
      if (!st.ok()) return Fail(st, err);
    }
  }
  return kExitEquivalent;
}

int Run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivalence and closure for concurrent Kleene algebra with hypotheses."};
  app.require_subcommand(1);
  Request request;
  std::string omega;
  auto common = [&](CLI::App* sub) {
    std::string packs = absl::StrJoin(
        std::vector<std::string>(std::begin(kBuiltinPackNames), std::end(kBuiltinPackNames)),
        "|");
    sub->add_option("--hyp", request.hyp,
                    absl::StrCat("Hypothesis pack: ", packs,
                                 " (default: obs if a term has {..} leaves, else none)"));
    sub->add_option("--hyp-file", request.hyp_file,
                    "Hypothesis file: `lhs <= rhs`, `lhs == rhs`, `exch`, `#` comments");
    sub->add_option("--omega", omega,
                    "Comma-separated observations (default: those in the terms)");
    sub->add_option("--bound", request.bound, "Size bound in events for starred terms")
        ->capture_default_str();
    sub->add_option("--dot", request.dot_dir, "Write DOT files into this directory");
    sub->add_flag("--cross-check", request.cross_check,
                  "Recompute through an independent closure path and report agreement");
  };
  CLI::App* check = app.add_subcommand("check", "Decide whether two terms are equivalent");
  check->add_option("left", request.left, "Left term")->required();
  check->add_option("right", request.right, "Right term")->required();
  check->add_flag("--witness", request.witness, "Also print the witness as DOT");
  common(check);
  CLI::App* closure = app.add_subcommand("closure", "Print the closure of a term");
  closure->add_option("term", request.left, "Term")->required();
  common(closure);
  app.footer(
      "Exit codes: 0 equivalent (or up to the bound), 1 different, 2 inconclusive,\n"
      "3 parse or usage error, 4 other errors.\n"
      "Environment: CKAH_MAX_LANGUAGE and CKAH_MAX_ITERATIONS override the budget.");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help requests exit 0 and print the help of the subcommand concerned.
    return app.exit(e, out, err) == 0 ? 0 : kExitParseError;
  }
  if (!omega.empty()) {
    for (absl::string_view o : absl::StrSplit(absl::string_view(omega.data(), omega.size()), ',',
                                              absl::SkipWhitespace())) {
      request.omega.emplace_back(o);
    }
  }
  if (check->parsed()) return CmdCheck(request, out, err);
  return CmdClosure(request, out, err);
}

}  // namespace ckah::cli
