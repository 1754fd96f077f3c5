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

#include <doctest.h>

#include "biprod/biproduct.hpp"
#include "biprod/error.hpp"
#include "biprod/gallery.hpp"
#include "support.hpp"

using namespace biprod;
using namespace biprod::gallery;
using namespace biprod::testing;

namespace {

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

TEST_CASE("finite sets") {
  CHECK(build_finset_skeleton(0).morphism_count() == 1);
  for (std::size_t n = 0; n <= 3; ++n) {
    std::size_t expected = 0;
    for (std::size_t a = 0; a <= n; ++a) {
      for (std::size_t b = 0; b <= n; ++b) expected += power(b, a);
    }
    const FinCat c = build_finset_skeleton(n);
    CHECK(c.morphism_count() == expected);
    CHECK(validate_category(c).pass);
  }
  CHECK(build_finset_skeleton(2).morphism_count() == 11);
  CHECK_THROWS_AS(build_finset_skeleton(4, 100), ResourceLimit);
  CHECK_THROWS_AS(build_finset({2, 2}), InvalidStructure);

  const FinCat sets = build_finset({1, 3});
  CHECK(sets.hom(obj(sets, "3"), obj(sets, "3")).size() == 27);
}

TEST_CASE("preorders") {
  const FinCat d = build_preorder(diamond());
  CHECK(d.morphism_count() == 9);
  CHECK(validate_category(d).pass);
  CHECK(build_preorder(indiscrete(3)).morphism_count() == 9);
  CHECK(build_preorder(discrete(3)).morphism_count() == 3);
  CHECK(build_preorder(chain(3)).morphism_count() == 6);

  PreorderSpec not_reflexive{{"x", "y"}, {{0, 0}, {0, 1}}};
  CHECK_THROWS_AS(build_preorder(not_reflexive), InvalidStructure);
  PreorderSpec not_transitive{{"x", "y", "z"}, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}}};
  CHECK_THROWS_AS(build_preorder(not_transitive), InvalidStructure);
}

TEST_CASE("pointed sets") {
  const FinCat p = build_pointed_sets(3);
  CHECK(p.object_count() == 3);
  // Basepoint-preserving maps P_a -> P_b: b^(a-1).
  std::size_t expected = 0;
  for (std::size_t a = 1; a <= 3; ++a) {
    for (std::size_t b = 1; b <= 3; ++b) expected += power(b, a - 1);
  }
  CHECK(p.morphism_count() == expected);
  CHECK(validate_category(p).pass);
  CHECK(find_zero_structure(p).structure);
}

TEST_CASE("abelian groups") {
  const auto frag = build_ab_fragment({{ab_group({2}), ab_group({3}), ab_group({2, 2}), ab_group({})}});
  const FinCat& c = frag.category;
  CHECK(validate_category(c).pass);
  CHECK(validate_cmon(c, frag.cmon).pass);
  const ObjId z2 = obj(c, "Z2"), z3 = obj(c, "Z3"), v = obj(c, "Z2xZ2"), z1 = obj(c, "Z1");
  CHECK(c.hom(z2, z3).size() == 1);
  CHECK(c.hom(z3, z3).size() == 3);
  CHECK(c.hom(v, v).size() == 16);
  CHECK(c.hom(z2, v).size() == 4);
  CHECK(c.hom(z1, v).size() == 1);
  CHECK(ab_group({}).name == "Z1");
  CHECK(ab_group({2, 2}).name == "Z2xZ2");
}

TEST_CASE("inverse semigroups") {
  const auto z2 = cyclic_group_semigroup(2);
  CHECK_NOTHROW(validate(z2));
  CHECK(neutral_element(z2));
  const auto flat = flat_semilattice(2);
  CHECK_NOTHROW(validate(flat));
  CHECK(flat.size == 3);
  CHECK_FALSE(neutral_element(flat));
  const auto prod = direct_product(z2, flat);
  CHECK_NOTHROW(validate(prod));
  CHECK(prod.size == 6);
  CHECK(isomorphic(direct_product(z2, flat), direct_product(flat, z2)));
  CHECK_FALSE(isomorphic(z2, flat_semilattice(1)));

  InverseSemigroupSpec bad{"bad", 2, {0, 1, 0, 1}};  // not commutative
  CHECK_THROWS_AS(validate(bad), InvalidStructure);

  const FinCat c = build_inverse_semigroup_category({z2, flat});
  CHECK(validate_category(c).pass);
}

TEST_CASE("contractive systems") {
  const auto pair = line_system("pair", {0, 1}, {0, 0});
  CHECK_NOTHROW(validate(pair));
  CHECK(fixed_points(pair) == std::vector<std::size_t>{0});
  const auto swap = line_system("swap", {0, 1}, {1, 0});
  CHECK_THROWS_AS(validate(swap), InvalidStructure);
  ContractiveSystemSpec not_metric{"nm", 2, {{0, 1}, {1, 1}, {2, 1}, {0, 1}}, {0, 0}};
  CHECK_THROWS_AS(validate(not_metric), InvalidStructure);

  const FinCat c = build_con_fragment({pair});
  CHECK(c.object_count() == 2);
  CHECK(c.find_object("!"));
  CHECK(validate_category(c).pass);
}

TEST_CASE("random categories") {
  RandomBounds bounds;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    CAPTURE(seed);
    const FinCat a = build_random_category(seed, bounds);
    CHECK(a == build_random_category(seed, bounds));
    CHECK(a.morphism_count() <= bounds.max_morphisms);
    CHECK(validate_category(a).pass);
  }
  RandomBounds tight;
  tight.max_morphisms = 0;
  tight.max_attempts = 5;
  CHECK_THROWS_AS(build_random_category(1, tight), ResourceLimit);
}

TEST_CASE("catalog entries validate and meet their expectations") {
  CHECK(gallery_names().size() == standard_gallery().size());
  CHECK_FALSE(gallery_entry("no-such-entry"));
  for (const auto& e : standard_gallery()) {
    CAPTURE(e.name);
    CHECK(validate_category(e.category).pass);
    if (e.cmon) CHECK(validate_cmon(e.category, *e.cmon).pass);
    if (e.has_zero_structure) {
      CHECK(find_zero_structure(e.category).structure.has_value() == *e.has_zero_structure);
    }
    for (const auto& x : e.expectations) {
      CHECK(!find_biproducts(e.category, x.a, x.b).empty() == x.has_biproduct);
    }
    if (e.closed_under_biproducts) CHECK(canonical_assignment(e.category).assignment);
  }
}
