// Copyright 2026 The biprod Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biprod/ids.hpp"

namespace biprod {

class FinCat;

/// Evidence that an equation fails. `lhs` and `rhs` are composition chains
/// read right to left (`{a, b, c}` means a∘b∘c) whose composites differ.
/// Non-equational failures leave both chains empty and list the relevant
/// morphisms in `involved`.
struct Counterexample {
  std::string law;
  std::vector<MorId> involved;
  std::vector<MorId> lhs;
  std::vector<MorId> rhs;

  bool is_equational() const { return !lhs.empty() && !rhs.empty(); }
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

/// Result of a check. On failure `clause` names the first violated clause.
struct Verdict {
  bool pass = true;
  bool vacuous = false;
  std::string clause;
  std::string detail;
  std::optional<Counterexample> counterexample;

  static Verdict ok(std::string detail = {}) {
    Verdict v;
    v.detail = std::move(detail);
    return v;
  }
  static Verdict vacuously(std::string detail) {
    Verdict v;
    v.vacuous = true;
    v.detail = std::move(detail);
    return v;
  }
  static Verdict fail(std::string clause, std::string detail,
                      std::optional<Counterexample> ce = std::nullopt) {
    Verdict v;
    v.pass = false;
    v.clause = std::move(clause);
    v.detail = std::move(detail);
    v.counterexample = std::move(ce);
    return v;
  }

  explicit operator bool() const { return pass; }
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Replays an equational counterexample in `cat`: true iff both chains
/// compose and yield different morphisms. Non-equational counterexamples
/// replay when every involved morphism exists.
bool replays(const FinCat& cat, const Counterexample& ce);

}  // namespace biprod
