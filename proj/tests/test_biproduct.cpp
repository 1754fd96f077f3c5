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

#include <algorithm>

#include "biprod/biproduct.hpp"
#include "biprod/error.hpp"
#include "biprod/oracle.hpp"
#include "support.hpp"

using namespace biprod;
using namespace biprod::testing;

namespace {

std::vector<BiproductWitness> all_well_typed(const FinCat& cat, ObjId a, ObjId b) {
  std::vector<BiproductWitness> out;
  for (ObjId c : cat.objects()) {
    for (MorId pa : cat.hom(c, a)) {
      for (MorId pb : cat.hom(c, b)) {
        for (MorId ia : cat.hom(a, c)) {
          for (MorId ib : cat.hom(b, c)) out.push_back({c, pa, pb, ia, ib});
        }
      }
    }
  }
  return out;
}

BiproductWitness identity_witness(const FinCat& cat, ObjId z) {
  const MorId id = cat.identity(z);
  return {z, id, id, id, id};
}

}  // namespace

TEST_CASE("check_biproduct examples") {
  const FinCat sets = gallery_category("finset-2");
  const ObjId empty = obj(sets, "0");
  CHECK(check_biproduct(sets, identity_witness(sets, empty), empty, empty).pass);

  const FinCat pointed = gallery_category("pointed-3");
  const ObjId p1 = obj(pointed, "P1");
  CHECK(check_biproduct(pointed, identity_witness(pointed, p1), p1, p1).pass);

  const FinCat arrow = gallery_category("walking-arrow");
  const ObjId zero = obj(arrow, "0"), one = obj(arrow, "1");
  const auto candidates = all_well_typed(arrow, zero, one);
  for (const auto& w : candidates) CHECK_FALSE(check_biproduct(arrow, w, zero, one).pass);
}

TEST_CASE("clause order is reported") {
  const FinCat iso = gallery_category("indiscrete-3");
  const ObjId a = obj(iso, "A"), b = obj(iso, "B");
  const auto ws = find_biproducts(iso, a, b);
  REQUIRE_FALSE(ws.empty());
  const FinCat sets = gallery::build_finset({1, 2, 4});
  const ObjId two = obj(sets, "2"), four = obj(sets, "4");
  const auto ps = find_products(sets, two, two);
  REQUIRE_FALSE(ps.empty());
  const MorId into = sets.hom(two, four).front();
  const BiproductWitness w{four, ps[0].left, ps[0].right, into, into};
  const Verdict v = check_biproduct(sets, w, two, two);
  CHECK_FALSE(v.pass);
  CHECK(v.clause == "coproduct");
}

TEST_CASE("find_biproducts") {
  const FinCat iso = gallery_category("indiscrete-2");
  CHECK_FALSE(find_biproducts(iso, obj(iso, "A"), obj(iso, "B")).empty());
  const FinCat discrete = gallery_category("discrete-2");
  CHECK(find_biproducts(discrete, ObjId{0}, ObjId{1}).empty());

  // Groups inside Ab ⊔ Set have the same witnesses as in Ab alone.
  const FinCat ab = gallery_category("ab-small");
  const FinCat mixed = gallery_category("ab-set");
  for (ObjId a : ab.objects()) {
    for (ObjId b : ab.objects()) {
      auto named = [](const FinCat& c, const std::vector<BiproductWitness>& ws) {
        std::vector<std::vector<std::string>> out;
        for (const auto& w : ws) {
          out.push_back({c.name(w.carrier), c.name(w.p_a), c.name(w.p_b), c.name(w.i_a),
                         c.name(w.i_b)});
        }
        return out;
      };
      CHECK(named(ab, find_biproducts(ab, a, b)) ==
            named(mixed, find_biproducts(mixed, obj(mixed, ab.name(a)), obj(mixed, ab.name(b)))));
    }
  }
}

TEST_CASE("search agrees with the oracle") {
  for (const auto& name : small_gallery()) {
    CAPTURE(name);
    const FinCat c = gallery_category(name);
    if (c.morphism_count() > 40) continue;
    for (ObjId a : c.objects()) {
      for (ObjId b : c.objects()) {
        const auto ws = find_biproducts(c, a, b);
        CHECK(ws == oracle::all_biproducts(c, a, b));
        CHECK(std::is_sorted(ws.begin(), ws.end()));
        for (const auto& w : ws) CHECK(check_biproduct(c, w, a, b).pass);
      }
    }
  }
}

TEST_CASE("zero-morphism definition") {
  const FinCat pointed = gallery_category("pointed-3");
  const ZeroStructure zs = *find_zero_structure(pointed).structure;
  const ObjId p1 = obj(pointed, "P1"), p2 = obj(pointed, "P2");
  CHECK(check_zero_def_biproduct(pointed, zs, identity_witness(pointed, p1), p1, p1).pass);

  const std::vector<std::string> clauses{"product",      "coproduct",    "retraction-a",
                                         "retraction-b", "zero-b-after-i-a", "zero-a-after-i-b"};
  std::size_t failures = 0;
  for (const auto& w : all_well_typed(pointed, p2, p2)) {
    const Verdict fresh = check_biproduct(pointed, w, p2, p2);
    const Verdict zero = check_zero_def_biproduct(pointed, zs, w, p2, p2);
    CHECK(fresh.pass == zero.pass);
    if (zero.pass) continue;
    ++failures;
    CHECK(std::find(clauses.begin(), clauses.end(), zero.clause) != clauses.end());
  }
  CHECK(failures > 0);

  const FinCat iso = gallery_category("indiscrete-2");
  const ZeroStructure izs = *find_zero_structure(iso).structure;
  const ObjId a = obj(iso, "A");
  CHECK(check_zero_def_biproduct(iso, izs, identity_witness(iso, a), a, a).pass);
}

TEST_CASE("CMon definition") {
  const auto entry = *gallery::gallery_entry("ab-small");
  const FinCat& cat = entry.category;
  const CMonStructure& cm = *entry.cmon;
  CHECK(validate_cmon(cat, cm).pass);
  const ObjId z1 = obj(cat, "Z1"), z2 = obj(cat, "Z2");
  const auto ws = find_biproducts(cat, z2, z2);
  REQUIRE_FALSE(ws.empty());
  for (const auto& w : ws) {
    CHECK(cat.name(w.carrier) == "Z2xZ2");
    CHECK(check_cmon_biproduct(cat, cm, w, z2, z2).pass);
  }
  BiproductWitness broken = ws.front();
  broken.i_a = cm.zero(z2, broken.carrier);
  CHECK_FALSE(check_cmon_biproduct(cat, cm, broken, z2, z2).pass);
  CHECK_FALSE(check_biproduct(cat, broken, z2, z2).pass);

  CHECK(check_cmon_biproduct(cat, cm, identity_witness(cat, z1), z1, z1).pass);

  CMonStructure bad = cm;
  auto& mon = bad.monoid(z2, z2);
  std::swap(mon.sum[0 * 2 + 1], mon.sum[1 * 2 + 1]);
  CHECK_FALSE(validate_cmon(cat, bad).pass);
  CHECK_THROWS_AS(check_cmon_biproduct(cat, bad, ws.front(), z2, z2), InvalidStructure);
}

TEST_CASE("definitions agree") {
  const FinCat pointed = gallery_category("pointed-3");
  for (ObjId a : pointed.objects()) {
    for (ObjId b : pointed.objects()) {
      const auto pruned = definitions_agree_all(pointed, a, b);
      const auto full = definitions_agree_all(pointed, a, b, nullptr, Sweep::exhaustive);
      CHECK(pruned.verdict.pass);
      CHECK(full.verdict.pass);
      CHECK(full.witnesses_checked == count_well_typed_witnesses(pointed, a, b));
      CHECK(pruned.witnesses_checked + pruned.witnesses_pruned == full.witnesses_checked);
      CHECK(pruned.biproducts == full.biproducts);
      CHECK(full.biproducts == find_biproducts(pointed, a, b).size());
    }
  }

  const auto ab = *gallery::gallery_entry("ab-small");
  const auto s = definitions_agree_all_pairs(ab.category, &*ab.cmon, Sweep::exhaustive);
  CHECK(s.verdict.pass);

  const FinCat sets = gallery_category("finset-2");
  CHECK_THROWS_AS(definitions_agree_all(sets, ObjId{0}, ObjId{0}), ContractViolation);
  CHECK_THROWS_AS(
      definitions_agree(sets, identity_witness(sets, ObjId{0}), ObjId{0}, ObjId{0}),
      ContractViolation);
}

TEST_CASE("lemma") {
  const FinCat sets = gallery_category("finset-2");
  const ObjId empty = obj(sets, "0");
  CHECK(verify_lemma_zero(sets, identity_witness(sets, empty), empty, empty).pass);

  const FinCat iso = gallery_category("indiscrete-2");
  for (const auto& w : find_biproducts(iso, ObjId{0}, ObjId{1})) {
    CHECK(verify_lemma_zero(iso, w, ObjId{0}, ObjId{1}).pass);
  }

  const FinCat mixed = gallery_category("ab-set");
  const ObjId z2 = obj(mixed, "Z2");
  for (const auto& w : find_biproducts(mixed, z2, z2)) {
    CHECK(verify_lemma_zero(mixed, w, z2, z2).pass);
  }

  const FinCat arrow = gallery_category("walking-arrow");
  const ObjId one = obj(arrow, "1");
  const MorId u = mor(arrow, "0_1");
  CHECK_THROWS_AS(verify_lemma_zero(arrow, {one, arrow.identity(one), arrow.identity(one), u, u},
                                    obj(arrow, "0"), obj(arrow, "0")),
                  ContractViolation);
}

TEST_CASE("corollary") {
  const Verdict iso = verify_corollary_zeros(gallery_category("indiscrete-2"));
  CHECK(iso.pass);
  CHECK_FALSE(iso.vacuous);
  const Verdict sets = verify_corollary_zeros(gallery_category("finset-2"));
  CHECK(sets.pass);
  CHECK(sets.vacuous);
  const Verdict ab = verify_corollary_zeros(gallery_category("ab-trivial-2"));
  CHECK(ab.pass);
  CHECK_FALSE(ab.vacuous);
}

TEST_CASE("uniqueness") {
  const FinCat iso = gallery_category("indiscrete-3");
  const ObjId a = obj(iso, "A"), b = obj(iso, "B");
  const auto ws = find_biproducts(iso, a, b);
  CHECK(verify_uniqueness(iso, ws.front(), ws.front(), a, b).pass);
  bool distinct_carriers = false;
  for (const auto& w1 : ws) {
    for (const auto& w2 : ws) {
      CHECK(verify_uniqueness(iso, w1, w2, a, b).pass);
      distinct_carriers = distinct_carriers || w1.carrier != w2.carrier;
    }
  }
  CHECK(distinct_carriers);

  const auto ab = *gallery::gallery_entry("ab-small");
  const ObjId z2 = obj(ab.category, "Z2");
  const auto gs = find_biproducts(ab.category, z2, z2);
  REQUIRE(gs.size() >= 2);
  CHECK(verify_uniqueness(ab.category, gs[0], gs[1], z2, z2).pass);
  CHECK(verify_uniqueness(ab.category, gs[1], gs.back(), z2, z2).pass);
}

TEST_CASE("n-ary biproducts") {
  const FinCat iso = gallery_category("indiscrete-2");
  const ObjId a = obj(iso, "A");
  const MorId id = iso.identity(a);
  CHECK(check_nary_biproduct(iso, {a, {a}, {id}, {id}}).pass);

  for (const char* name : {"indiscrete-2", "pointed-3", "diamond"}) {
    CAPTURE(name);
    const FinCat c = gallery_category(name);
    for (ObjId x : c.objects()) {
      for (ObjId y : c.objects()) {
        for (const auto& w : all_well_typed(c, x, y)) {
          const NaryBiproductWitness n{w.carrier, {x, y}, {w.p_a, w.p_b}, {w.i_a, w.i_b}};
          CHECK(check_nary_biproduct(c, n).pass == check_biproduct(c, w, x, y).pass);
        }
      }
    }
  }

  const auto cube = *gallery::gallery_entry("ab-cube");
  const FinCat& cat = cube.category;
  const ObjId z2 = obj(cat, "Z2");
  const auto inner = find_biproducts(cat, z2, z2);
  REQUIRE_FALSE(inner.empty());
  const auto outer = find_biproducts(cat, inner.front().carrier, z2);
  REQUIRE_FALSE(outer.empty());
  const auto ternary = ternary_from_nested(cat, inner.front(), outer.front());
  CHECK(ternary.factors == std::vector<ObjId>{z2, z2, z2});
  CHECK(check_nary_biproduct(cat, ternary).pass);
  auto broken = ternary;
  std::swap(broken.injections[0], broken.injections[1]);
  broken.injections[0] = broken.injections[2];
  CHECK_FALSE(check_nary_biproduct(cat, broken).pass);
}

TEST_CASE("sum equals product of morphisms") {
  const FinCat iso = gallery_category("indiscrete-2");
  const ObjId a = obj(iso, "A"), b = obj(iso, "B");
  const auto ws = find_biproducts(iso, a, b);
  REQUIRE_FALSE(ws.empty());
  const auto r = check_sum_equals_product_of_morphisms(iso, ws[0], ws[0], iso.identity(a),
                                                       iso.identity(b));
  CHECK(r.verdict.pass);
  CHECK(r.sum == iso.identity(ws[0].carrier));
  CHECK(r.product == r.sum);

  const auto ab = *gallery::gallery_entry("ab-small");
  const FinCat& cat = ab.category;
  const ObjId z2 = obj(cat, "Z2");
  const auto gs = find_biproducts(cat, z2, z2);
  const MorId zero = ab.cmon->zero(z2, z2);
  const auto z = check_sum_equals_product_of_morphisms(cat, gs[0], gs[0], zero, zero);
  CHECK(z.verdict.pass);
  CHECK(z.sum == ab.cmon->zero(gs[0].carrier, gs[0].carrier));
  for (MorId f : cat.hom(z2, z2)) {
    for (MorId g : cat.hom(z2, z2)) {
      CHECK(check_sum_equals_product_of_morphisms(cat, gs[0], gs.back(), f, g).verdict.pass);
    }
  }
}

TEST_CASE("ambiadjunction") {
  for (const char* name : {"terminal", "indiscrete-2", "indiscrete-3", "ab-trivial-2"}) {
    CAPTURE(name);
    const FinCat c = gallery_category(name);
    const auto search = canonical_assignment(c);
    REQUIRE(search.assignment);
    const Verdict v = verify_ambiadjunction(c, *search.assignment);
    CHECK(v.pass);
  }
  const auto sets = canonical_assignment(gallery_category("finset-2"));
  CHECK_FALSE(sets.assignment);
  REQUIRE(sets.missing);
}

TEST_CASE("self-duality") {
  for (const auto& name : small_gallery()) {
    CAPTURE(name);
    const FinCat c = gallery_category(name);
    if (c.morphism_count() > 40) continue;
    const FinCat op = opposite(c);
    for (ObjId a : c.objects()) {
      for (ObjId b : c.objects()) {
        for (const auto& w : all_well_typed(c, a, b)) {
          CHECK(check_biproduct(c, w, a, b).pass == check_biproduct(op, w.swapped(), a, b).pass);
        }
      }
    }
  }
}

TEST_CASE("counterexamples replay") {
  const FinCat sets = gallery::build_finset({1, 2, 4});
  const ObjId two = obj(sets, "2");
  std::size_t equational = 0;
  for (const auto& w : all_well_typed(sets, two, two)) {
    const Verdict v = check_biproduct(sets, w, two, two);
    if (v.pass) continue;
    REQUIRE(v.counterexample);
    CHECK(replays(sets, *v.counterexample));
    equational += v.counterexample->is_equational() ? 1 : 0;
  }
  CHECK(equational > 0);
}
