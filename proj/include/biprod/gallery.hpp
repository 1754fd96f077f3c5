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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "biprod/biproduct.hpp"
#include "biprod/fincat.hpp"

namespace biprod::gallery {

/// Default bound on the number of morphisms any builder may produce.
inline constexpr std::size_t kDefaultMorphismLimit = 5000;

// ---------------------------------------------------------------- preorders

struct PreorderSpec {
  std::vector<std::string> elements;
  /// (x, y) means x ≤ y. Must be reflexive and transitive.
  std::vector<std::pair<std::size_t, std::size_t>> relation;
};

PreorderSpec chain(std::size_t n);
PreorderSpec discrete(std::size_t n);
PreorderSpec indiscrete(std::size_t n);
/// bot ≤ a, b ≤ top.
PreorderSpec diamond();

/// Thin category with one morphism per related pair. Throws
/// InvalidStructure for non-reflexive or non-transitive relations.
FinCat build_preorder(const PreorderSpec& spec);

// -------------------------------------------------------------------- sets

/// One object per listed cardinality (named by it), all functions between
/// them. Sizes must be distinct.
FinCat build_finset(const std::vector<std::size_t>& sizes,
                    std::size_t morphism_limit = kDefaultMorphismLimit);

/// Objects 0..max_size, all functions between them.
FinCat build_finset_skeleton(std::size_t max_size,
                             std::size_t morphism_limit = kDefaultMorphismLimit);

/// Pointed sets P1..P<max_size> (basepoint 0) with basepoint-preserving maps.
FinCat build_pointed_sets(std::size_t max_size,
                          std::size_t morphism_limit = kDefaultMorphismLimit);

// ---------------------------------------------------------- abelian groups

/// Z/n_1 × ... × Z/n_k; an empty list is the trivial group.
struct AbGroupSpec {
  std::string name;
  std::vector<std::uint32_t> cyclic_orders;
};

struct AbFragmentSpec {
  std::vector<AbGroupSpec> groups;
};

struct AbFragment {
  FinCat category;
  CMonStructure cmon;
};

/// Full subcategory of Ab on the listed groups, with every homomorphism and
/// the pointwise-sum CMon structure.
AbFragment build_ab_fragment(const AbFragmentSpec& spec,
                             std::size_t morphism_limit = kDefaultMorphismLimit);

/// Conventional name such as "Z2xZ2"; the trivial group is "Z1".
AbGroupSpec ab_group(std::vector<std::uint32_t> cyclic_orders);

// ------------------------------------------------- commutative inverse semigroups

struct InverseSemigroupSpec {
  std::string name;
  std::size_t size = 0;
  /// table[x * size + y] = x·y
  std::vector<std::size_t> table;
};

/// Throws InvalidStructure unless the table is closed, commutative,
/// associative and every x has exactly one y with xyx = x and yxy = y.
void validate(const InverseSemigroupSpec& spec);
std::optional<std::size_t> neutral_element(const InverseSemigroupSpec& spec);
InverseSemigroupSpec cyclic_group_semigroup(std::uint32_t n);
/// {0, a_1, ..., a_k} with x·x = x and x·y = 0 otherwise.
InverseSemigroupSpec flat_semilattice(std::size_t atoms);
InverseSemigroupSpec direct_product(const InverseSemigroupSpec& s, const InverseSemigroupSpec& t);
/// Brute-force search for an isomorphism of multiplication tables.
bool isomorphic(const InverseSemigroupSpec& s, const InverseSemigroupSpec& t);

/// Objects are the given semigroups; morphisms are unital homomorphisms:
/// multiplicative maps sending every neutral element of the source to a
/// neutral element of the target.
FinCat build_inverse_semigroup_category(const std::vector<InverseSemigroupSpec>& specs,
                                        std::size_t morphism_limit = kDefaultMorphismLimit);

// ------------------------------------------------------- contractive systems

/// Exact non-negative rational num/den with den > 0.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
};
inline bool operator<(Rational a, Rational b) { return a.num * b.den < b.num * a.den; }
inline bool operator<=(Rational a, Rational b) { return a.num * b.den <= b.num * a.den; }
inline bool operator==(Rational a, Rational b) { return a.num * b.den == b.num * a.den; }

struct ContractiveSystemSpec {
  std::string name;
  std::size_t size = 0;
  /// distance[x * size + y]
  std::vector<Rational> distance;
  std::vector<std::size_t> endo;
};

/// Throws InvalidStructure unless `distance` is a metric and `endo` is a
/// strict contraction (d(fx, fy) < d(x, y) for x != y).
void validate(const ContractiveSystemSpec& spec);
std::vector<std::size_t> fixed_points(const ContractiveSystemSpec& spec);
/// The terminal system ! on one point.
ContractiveSystemSpec terminal_system();
/// Points at the given positions on the number line.
ContractiveSystemSpec line_system(std::string name, std::vector<std::int64_t> positions,
                                  std::vector<std::size_t> endo);

/// Objects are the given systems plus the terminal system "!" (appended
/// when no one-point system named "!" is present); morphisms are
/// non-expansive equivariant maps.
FinCat build_con_fragment(const std::vector<ContractiveSystemSpec>& specs,
                          std::size_t morphism_limit = kDefaultMorphismLimit);

// ------------------------------------------------------------------ random

struct RandomBounds {
  std::size_t max_objects = 3;
  std::size_t max_carrier = 2;
  std::size_t max_generators = 4;
  std::size_t max_morphisms = 12;
  std::size_t max_attempts = 200;
};

/// Draws finite carriers and random generating functions between them,
/// composes paths freely and identifies paths that act the same way on the
/// carriers, then tabulates. Deterministic in `seed`. Throws ResourceLimit
/// when no draw fits `bounds` within max_attempts.
FinCat build_random_category(std::uint64_t seed, const RandomBounds& bounds = {});

// ----------------------------------------------------------------- catalog

/// What the example is expected to show, stated independently of the
/// search: pairs claimed to have / lack a biproduct within the fragment.
struct PairExpectation {
  ObjId a;
  ObjId b;
  bool has_biproduct;
};

struct GalleryEntry {
  std::string name;
  FinCat category;
  std::optional<CMonStructure> cmon;
  std::vector<PairExpectation> expectations;
  /// Every pair has a biproduct, so the zero-morphism corollary is
  /// non-vacuous.
  bool closed_under_biproducts = false;
  std::optional<bool> has_zero_structure;
};

/// The named example categories used by the acceptance suite and the CLI.
std::vector<GalleryEntry> standard_gallery();

/// Builds one catalog entry by name, or nullopt if unknown.
std::optional<GalleryEntry> gallery_entry(const std::string& name);
std::vector<std::string> gallery_names();

}  // namespace biprod::gallery
