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

#ifndef CKAH_LABEL_H_
#define CKAH_LABEL_H_

#include <compare>
#include <string>
#include <string_view>

#include "absl/status/statusor.h"

namespace ckah {

// The reserved hole marker of pomset contexts.
inline constexpr std::string_view kHoleName = "*";

// Prefix reserved for atom letters introduced by reification, e.g. `@{o1,o3}`.
inline constexpr std::string_view kAtomPrefix = "@";

// A letter of the ambient alphabet, or the context hole. Labels are opaque
// non-empty strings; the only interpretation attached to them is whether they
// denote the hole or an atom.
class Label {
 public:
  // Validates `name`: it must be non-empty and must not be the hole marker.
  static absl::StatusOr<Label> Create(std::string name);

  static Label Hole();

  // Unchecked convenience constructor; throws std::invalid_argument on an
  // empty name or the hole marker.
  explicit Label(std::string name);

  const std::string& name() const { return name_; }
  bool is_hole() const { return name_ == kHoleName; }
  bool is_atom() const { return name_.starts_with(kAtomPrefix); }

  friend bool operator==(const Label&, const Label&) = default;
  friend std::strong_ordering operator<=>(const Label& a, const Label& b) {
    return a.name_ <=> b.name_;
  }

  template <typename H>
  friend H AbslHashValue(H h, const Label& label) {
    return H::combine(std::move(h), label.name_);
  }

 private:
  struct HoleTag {};
  explicit Label(HoleTag);

  std::string name_;
};

}  // namespace ckah

#endif  // CKAH_LABEL_H_
