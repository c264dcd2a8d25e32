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

// Parser for the term grammar of term.h. Errors are InvalidArgument with a
// message of the form "SyntaxError at byte N: ...".
//
// Letters are identifiers ([A-Za-z_][A-Za-z0-9_']*) or atom letters
// `@{o1,o2}` as produced by reification.

#ifndef CKAH_PARSER_H_
#define CKAH_PARSER_H_

#include <string_view>

#include "absl/status/statusor.h"
#include "ckah/context.h"
#include "ckah/pomset.h"
#include "ckah/term.h"

namespace ckah {

struct ParseOptions {
  // Accept `*` in operand position as the context hole.
  bool allow_hole = false;
};

absl::StatusOr<Term> ParseTerm(std::string_view text, ParseOptions options = {});
absl::StatusOr<BoolTerm> ParseBoolTerm(std::string_view text);

// A single pomset written with `1`, letters, `;` and `||` only.
absl::StatusOr<Pomset> ParsePomset(std::string_view text);
// As ParsePomset, with exactly one `*`.
absl::StatusOr<SpContext> ParseContext(std::string_view text);

// The pomset denoted by a term built from 1, letters, holes, `;` and `||`.
absl::StatusOr<Pomset> TermToPomset(const Term& e);

}  // namespace ckah

#endif  // CKAH_PARSER_H_
