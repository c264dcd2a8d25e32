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


// The ckah command line: `check` and `closure`.

#ifndef CKAH_TOOLS_CLI_H_
#define CKAH_TOOLS_CLI_H_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "ckah/pomset.h"

namespace ckah::cli {

inline constexpr int kExitEquivalent = 0;
inline constexpr int kExitDifferent = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitParseError = 3;
inline constexpr int kExitError = 4;

struct Request {
  std::string left;
  std::string right;  // unused by `closure`
  // Pack name; empty picks obs when a term has observations and none otherwise.
  std::string hyp;
  std::optional<std::string> hyp_file;
  std::vector<std::string> omega;
  int bound = 12;
  bool witness = false;
  std::optional<std::string> dot_dir;
  bool cross_check = false;
};

int CmdCheck(const Request& request, std::ostream& out, std::ostream& err);
int CmdClosure(const Request& request, std::ostream& out, std::ostream& err);

// Hasse diagram of `p`: one node per event in leaf order, one edge per
// covering pair.
std::string ExportDot(const Pomset& p, const std::string& name = "pomset");
absl::Status WriteDot(const Pomset& p, const std::string& path);

int Run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace ckah::cli

#endif  // CKAH_TOOLS_CLI_H_
