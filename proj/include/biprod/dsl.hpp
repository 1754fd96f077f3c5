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
#include <string_view>
#include <vector>

#include "biprod/biproduct.hpp"
#include "biprod/fincat.hpp"

namespace biprod::dsl {

struct NamedWitness {
  std::string name;
  BiproductWitness witness;
  ObjId a;
  ObjId b;
  friend bool operator==(const NamedWitness&, const NamedWitness&) = default;
};

/// A parsed category description. The composition table and any sum tables
/// are fully resolved: entries implied by the unit laws (and, for sums, by
/// commutativity and the zero) are filled in.
struct CatDoc {
  std::string name;
  FinCat category;
  std::vector<NamedWitness> witnesses;
  /// Present iff the document has cmon blocks; then it covers every
  /// non-empty homset.
  std::optional<CMonStructure> cmon;

  const NamedWitness* find_witness(std::string_view name) const;
};

bool operator==(const CatDoc& a, const CatDoc& b);

struct ParseOptions {
  /// Derive missing composites when every derivation (unit laws,
  /// associativity through known factorizations, singleton homsets) agrees.
  bool free_compose = false;
};

/// Throws ParseError with a 1-based line and column.
CatDoc parse(std::string_view text, const ParseOptions& options = {});

/// Canonical text. Composition entries implied by the unit laws are
/// omitted, as are sum entries implied by the zero or by commutativity.
std::string render(const CatDoc& doc);
std::string render(const FinCat& cat, const std::string& name);

/// FNV-1a 64-bit hash of the canonical rendering of the category alone, as
/// 16 hex digits.
std::string fingerprint(const FinCat& cat);

}  // namespace biprod::dsl
