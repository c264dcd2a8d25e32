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

#include "ckah/label.h"

#include <stdexcept>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace ckah {

absl::StatusOr<Label> Label::Create(std::string name) {
  if (name.empty()) return absl::InvalidArgumentError("empty label");
  if (name == kHoleName) {
    return absl::InvalidArgumentError(
        absl::StrCat("'", std::string(kHoleName), "' is reserved for the context hole"));
  }
  return Label(std::move(name));
}

Label Label::Hole() { return Label(HoleTag{}); }

Label::Label(std::string name) : name_(std::move(name)) {
  if (name_.empty() || name_ == kHoleName) {
    throw std::invalid_argument("invalid label '" + name_ + "'");
  }
}

Label::Label(HoleTag) : name_(kHoleName) {}

}  // namespace ckah
