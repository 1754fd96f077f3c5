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

#include "biprod/biproduct.hpp"

#include <functional>

#include "biprod/error.hpp"

namespace biprod {

namespace {

std::string pair_name(const FinCat& cat, ObjId a, ObjId b) {
  return "(" + cat.name(a) + ", " + cat.name(b) + ")";
}

Verdict nary_universality_failure(const FinCat& cat, const std::string& clause,
                                  const NaryUniversalityFailure& f) {
  std::string family;
  for (MorId m : f.family) family += (family.empty() ? "" : ", ") + cat.name(m);
  Counterexample ce{clause, f.family, {}, {}};
  if (f.kind == UniversalityFailure::missing_mediator) {
    ce.law += ":missing-mediator";
    return Verdict::fail(clause, "no mediator for (" + family + ") at " +
                                     cat.name(f.test_object), ce);
  }
  ce.law += ":duplicate-mediator";
  ce.involved.push_back(f.h1);
  ce.involved.push_back(f.h2);
  return Verdict::fail(clause, "two mediators " + cat.name(f.h1) + ", " + cat.name(f.h2) +
                                   " for (" + family + ") at " + cat.name(f.test_object),
                       ce);
}

Verdict equation_failure(const FinCat& cat, const std::string& clause, std::vector<MorId> lhs,
                         std::vector<MorId> rhs) {
  auto chain = [&](const std::vector<MorId>& c) {
    std::string s;
    for (MorId m : c) s += (s.empty() ? "" : " . ") + cat.name(m);
    return s;
  };
  std::string detail = chain(lhs) + " != " + chain(rhs);
  std::vector<MorId> involved = lhs;
  involved.insert(involved.end(), rhs.begin(), rhs.end());
  return Verdict::fail(clause, std::move(detail),
                       Counterexample{clause, std::move(involved), std::move(lhs), std::move(rhs)});
}

// Clauses shared by every definition: (co)product universality and the two
// retractions.
std::optional<Verdict> shared_clauses(const FinCat& cat, const BiproductWitness& w, ObjId a,
                                      ObjId b) {
  if (auto v = check_product(cat, w.product_span(), a, b); !v) {
    return universality_failure_verdict(cat, "product", *v.failure);
  }
  if (auto v = check_coproduct(cat, w.coproduct_cospan(), a, b); !v) {
    return universality_failure_verdict(cat, "coproduct", *v.failure);
  }
  if (cat.compose(w.p_a, w.i_a) != cat.identity(a)) {
    return equation_failure(cat, "retraction-a", {w.p_a, w.i_a}, {cat.identity(a)});
  }
  if (cat.compose(w.p_b, w.i_b) != cat.identity(b)) {
    return equation_failure(cat, "retraction-b", {w.p_b, w.i_b}, {cat.identity(b)});
  }
  return std::nullopt;
}

bool idempotents_commute(const FinCat& cat, const BiproductWitness& w) {
  const MorId e_a = cat.compose(w.i_a, w.p_a);
  const MorId e_b = cat.compose(w.i_b, w.p_b);
  return cat.compose(e_a, e_b) == cat.compose(e_b, e_a);
}

void require_well_typed(const FinCat& cat, const BiproductWitness& w, ObjId a, ObjId b,
                        const char* who) {
  if (!well_typed(cat, w, a, b)) {
    throw ContractViolation(std::string(who) + ": witness is not well typed for " +
                            pair_name(cat, a, b));
  }
}

// Visits certified witnesses in search order; the visitor returns false to
// stop.
void search_biproducts(const FinCat& cat, ObjId a, ObjId b,
                       const std::function<bool(const BiproductWitness&)>& visit) {
  const MorId id_a = cat.identity(a);
  const MorId id_b = cat.identity(b);
  for (const SpanWitness& s : find_products(cat, a, b)) {
    for (MorId i_a : cat.hom(a, s.apex)) {
      if (cat.compose(s.left, i_a) != id_a) continue;
      for (MorId i_b : cat.hom(b, s.apex)) {
        if (cat.compose(s.right, i_b) != id_b) continue;
        const BiproductWitness w{s.apex, s.left, s.right, i_a, i_b};
        if (!idempotents_commute(cat, w)) continue;
        if (!check_coproduct(cat, w.coproduct_cospan(), a, b)) continue;
        if (!visit(w)) return;
      }
    }
  }
}

Verdict zero_clauses(const FinCat& cat, MorId zero_ab, MorId zero_ba, const BiproductWitness& w,
                     const char* label) {
  const std::string clause_ab = std::string(label) + "-b-after-i-a";
  const std::string clause_ba = std::string(label) + "-a-after-i-b";
  if (cat.compose(w.p_b, w.i_a) != zero_ab) {
    return equation_failure(cat, clause_ab, {w.p_b, w.i_a}, {zero_ab});
  }
  if (cat.compose(w.p_a, w.i_b) != zero_ba) {
    return equation_failure(cat, clause_ba, {w.p_a, w.i_b}, {zero_ba});
  }
  return Verdict::ok();
}

Verdict cmon_equations(const FinCat& cat, const CMonStructure& cm, const BiproductWitness& w,
                       ObjId a, ObjId b) {
  if (cat.compose(w.p_a, w.i_a) != cat.identity(a)) {
    return equation_failure(cat, "retraction-a", {w.p_a, w.i_a}, {cat.identity(a)});
  }
  if (cat.compose(w.p_b, w.i_b) != cat.identity(b)) {
    return equation_failure(cat, "retraction-b", {w.p_b, w.i_b}, {cat.identity(b)});
  }
  if (auto v = zero_clauses(cat, cm.zero(a, b), cm.zero(b, a), w, "zero"); !v) return v;
  const MorId e_a = cat.compose(w.i_a, w.p_a);
  const MorId e_b = cat.compose(w.i_b, w.p_b);
  const MorId sum = cm.add(cat, e_a, e_b);
  if (sum != cat.identity(w.carrier)) {
    return Verdict::fail("sum-of-idempotents",
                         cat.name(e_a) + " + " + cat.name(e_b) + " = " + cat.name(sum) +
                             " != " + cat.name(cat.identity(w.carrier)),
                         Counterexample{"sum-of-idempotents", {e_a, e_b, sum}, {}, {}});
  }
  return Verdict::ok();
}

Verdict zero_def(const FinCat& cat, const ZeroStructure& zs, const BiproductWitness& w, ObjId a,
                 ObjId b) {
  if (auto v = shared_clauses(cat, w, a, b)) return *v;
  return zero_clauses(cat, zs.zero_of(a, b), zs.zero_of(b, a), w, "zero");
}

Verdict agree(const FinCat& cat, const ZeroStructure& zs, const CMonStructure* cm,
              const BiproductWitness& w, ObjId a, ObjId b, bool* fresh_pass = nullptr) {
  const Verdict fresh = check_biproduct(cat, w, a, b);
  if (fresh_pass != nullptr) *fresh_pass = fresh.pass;
  const Verdict zeros = zero_def(cat, zs, w, a, b);
  auto show = [](const Verdict& v) { return v.pass ? std::string("pass") : "fail(" + v.clause + ")"; };
  std::string detail = "commuting-idempotents: " + show(fresh) + ", zero-morphisms: " + show(zeros);
  bool same = fresh.pass == zeros.pass;
  if (cm != nullptr) {
    const Verdict sums = cmon_equations(cat, *cm, w, a, b);
    detail += ", cmon: " + show(sums);
    same = same && sums.pass == fresh.pass;
  }
  if (!same) {
    return Verdict::fail("definitions-disagree", detail,
                         Counterexample{"definitions-disagree", {w.p_a, w.p_b, w.i_a, w.i_b}, {}, {}});
  }
  return Verdict::ok(detail);
}

void require_certified(const FinCat& cat, const BiproductWitness& w, ObjId a, ObjId b,
                       const char* who) {
  require_well_typed(cat, w, a, b, who);
  if (auto v = check_biproduct(cat, w, a, b); !v) {
    throw ContractViolation(std::string(who) + ": witness is not a biproduct (" + v.clause + ")");
  }
}

void require_valid_cmon(const FinCat& cat, const CMonStructure* cm) {
  if (cm == nullptr) return;
  if (auto v = validate_cmon(cat, *cm); !v) {
    throw InvalidStructure("invalid CMon structure: " + v.clause + ": " + v.detail);
  }
}

ZeroStructure require_zero_structure(const FinCat& cat, const char* who) {
  auto search = find_zero_structure(cat);
  if (!search.structure) {
    throw ContractViolation(std::string(who) + ": category has no zero structure (" +
                            search.verdict.detail + ")");
  }
  return std::move(*search.structure);
}

}  // namespace

CMonStructure::CMonStructure(const FinCat& cat)
    : n_(cat.object_count()), monoids_(cat.object_count() * cat.object_count()) {
  for (ObjId a : cat.objects()) {
    for (ObjId b : cat.objects()) {
      const std::size_t k = cat.hom(a, b).size();
      monoid(a, b).sum.assign(k * k, kNoMorphism);
    }
  }
}

MorId CMonStructure::add(const FinCat& cat, MorId f, MorId g) const {
  if (cat.dom(f) != cat.dom(g) || cat.cod(f) != cat.cod(g)) {
    throw ContractViolation("CMonStructure::add: morphisms are not parallel");
  }
  const auto& mon = monoid(cat.dom(f), cat.cod(f));
  const std::size_t k = cat.hom(cat.dom(f), cat.cod(f)).size();
  return mon.sum[cat.hom_position(f) * k + cat.hom_position(g)];
}

bool well_typed(const FinCat& cat, const BiproductWitness& w, ObjId a, ObjId b) {
  return well_typed(cat, w.product_span(), a, b) && well_typed(cat, w.coproduct_cospan(), a, b);
}

Verdict check_biproduct(const FinCat& cat, const BiproductWitness& w, ObjId a, ObjId b) {
  require_well_typed(cat, w, a, b, "check_biproduct");
  if (auto v = shared_clauses(cat, w, a, b)) return *v;
  if (!idempotents_commute(cat, w)) {
    return equation_failure(cat, "idempotents-commute", {w.i_a, w.p_a, w.i_b, w.p_b},
                            {w.i_b, w.p_b, w.i_a, w.p_a});
  }
  return Verdict::ok();
}

std::vector<BiproductWitness> find_biproducts(const FinCat& cat, ObjId a, ObjId b) {
  std::vector<BiproductWitness> out;
  search_biproducts(cat, a, b, [&](const BiproductWitness& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

Verdict check_zero_def_biproduct(const FinCat& cat, const ZeroStructure& zs,
                                 const BiproductWitness& w, ObjId a, ObjId b) {
  require_well_typed(cat, w, a, b, "check_zero_def_biproduct");
  if (zs.object_count() != cat.object_count()) {
    throw ContractViolation("check_zero_def_biproduct: zero structure belongs to another category");
  }
  return zero_def(cat, zs, w, a, b);
}

Verdict validate_cmon(const FinCat& cat, const CMonStructure& cm) {
  if (cm.object_count() != cat.object_count()) {
    return Verdict::fail("cmon-shape", "structure is sized for another category");
  }
  for (ObjId a : cat.objects()) {
    for (ObjId b : cat.objects()) {
      const auto hom = cat.hom(a, b);
      const std::size_t k = hom.size();
      const auto& mon = cm.monoid(a, b);
      const std::string where = " in hom" + pair_name(cat, a, b);
      if (mon.sum.size() != k * k) return Verdict::fail("cmon-shape", "wrong table size" + where);
      if (k == 0) continue;
      if (mon.zero == kNoMorphism || mon.zero.index >= cat.morphism_count() ||
          cat.dom(mon.zero) != a || cat.cod(mon.zero) != b) {
        return Verdict::fail("cmon-zero-typing", "zero is not an element" + where);
      }
      for (MorId s : mon.sum) {
        if (s == kNoMorphism || s.index >= cat.morphism_count() || cat.dom(s) != a ||
            cat.cod(s) != b) {
          return Verdict::fail("cmon-closure", "sum table leaves the homset" + where);
        }
      }
      auto add = [&](MorId f, MorId g) {
        return mon.sum[cat.hom_position(f) * k + cat.hom_position(g)];
      };
      for (MorId f : hom) {
        if (add(f, mon.zero) != f) {
          return Verdict::fail("cmon-unit", cat.name(f) + " + 0 != " + cat.name(f) + where);
        }
        for (MorId g : hom) {
          if (add(f, g) != add(g, f)) {
            return Verdict::fail("cmon-commutative",
                                 cat.name(f) + " + " + cat.name(g) + " is not commutative" + where);
          }
          for (MorId h : hom) {
            if (add(add(f, g), h) != add(f, add(g, h))) {
              return Verdict::fail("cmon-associative", "sum of " + cat.name(f) + ", " +
                                                           cat.name(g) + ", " + cat.name(h) +
                                                           " is not associative" + where);
            }
          }
        }
      }
    }
  }
  // Bilinearity and absorption.
  for (ObjId a : cat.objects()) {
    for (ObjId b : cat.objects()) {
      const auto hom = cat.hom(a, b);
      if (hom.empty()) continue;
      const MorId zero_ab = cm.zero(a, b);
      for (ObjId c : cat.objects()) {
        for (MorId h : cat.hom(b, c)) {
          if (cat.compose(h, zero_ab) != cm.zero(a, c)) {
            return Verdict::fail("cmon-zero-absorbing",
                                 cat.name(h) + " . 0 != 0 for hom" + pair_name(cat, a, b));
          }
          for (MorId f : hom) {
            for (MorId g : hom) {
              if (cat.compose(h, cm.add(cat, f, g)) !=
                  cm.add(cat, cat.compose(h, f), cat.compose(h, g))) {
                return Verdict::fail("cmon-bilinear", "post-composition with " + cat.name(h) +
                                                          " does not distribute over " +
                                                          cat.name(f) + " + " + cat.name(g));
              }
            }
          }
        }
      }
      for (ObjId x : cat.objects()) {
        for (MorId k : cat.hom(x, a)) {
          if (cat.compose(zero_ab, k) != cm.zero(x, b)) {
            return Verdict::fail("cmon-zero-absorbing",
                                 "0 . " + cat.name(k) + " != 0 for hom" + pair_name(cat, a, b));
          }
          for (MorId f : hom) {
            for (MorId g : hom) {
              if (cat.compose(cm.add(cat, f, g), k) !=
                  cm.add(cat, cat.compose(f, k), cat.compose(g, k))) {
                return Verdict::fail("cmon-bilinear", "pre-composition with " + cat.name(k) +
                                                          " does not distribute over " +
                                                          cat.name(f) + " + " + cat.name(g));
              }
            }
          }
        }
      }
    }
  }
  return Verdict::ok();
}

Verdict check_cmon_biproduct(const FinCat& cat, const CMonStructure& cm,
                             const BiproductWitness& w, ObjId a, ObjId b) {
  require_well_typed(cat, w, a, b, "check_cmon_biproduct");
  if (auto v = validate_cmon(cat, cm); !v) {
    throw InvalidStructure("invalid CMon structure: " + v.clause + ": " + v.detail);
  }
  return cmon_equations(cat, cm, w, a, b);
}

Verdict definitions_agree(const FinCat& cat, const BiproductWitness& w, ObjId a, ObjId b,
                          const CMonStructure* cm) {
  require_well_typed(cat, w, a, b, "definitions_agree");
  const ZeroStructure zs = require_zero_structure(cat, "definitions_agree");
  require_valid_cmon(cat, cm);
  return agree(cat, zs, cm, w, a, b);
}

std::size_t count_well_typed_witnesses(const FinCat& cat, ObjId a, ObjId b) {
  std::size_t total = 0;
  for (ObjId c : cat.objects()) {
    total += cat.hom(c, a).size() * cat.hom(c, b).size() * cat.hom(a, c).size() *
             cat.hom(b, c).size();
  }
  return total;
}

namespace {

void sweep_pair(const FinCat& cat, const ZeroStructure& zs, const CMonStructure* cm, ObjId a,
                ObjId b, Sweep sweep, AgreementSummary& out) {
  const bool prune = sweep == Sweep::retraction_pruned;
  for (ObjId c : cat.objects()) {
    const auto into_c_from_b = cat.hom(b, c);
    for (MorId p_a : cat.hom(c, a)) {
      for (MorId p_b : cat.hom(c, b)) {
        std::vector<MorId> sections_b;
        for (MorId i_b : into_c_from_b) {
          if (!prune || cat.compose(p_b, i_b) == cat.identity(b)) sections_b.push_back(i_b);
        }
        for (MorId i_a : cat.hom(a, c)) {
          if (prune && cat.compose(p_a, i_a) != cat.identity(a)) {
            out.witnesses_pruned += into_c_from_b.size();
            continue;
          }
          out.witnesses_pruned += into_c_from_b.size() - sections_b.size();
          for (MorId i_b : sections_b) {
            const BiproductWitness w{c, p_a, p_b, i_a, i_b};
            ++out.witnesses_checked;
            bool is_biproduct = false;
            Verdict v = agree(cat, zs, cm, w, a, b, &is_biproduct);
            if (!v) {
              out.verdict = std::move(v);
              return;
            }
            if (is_biproduct) ++out.biproducts;
          }
        }
      }
    }
  }
}

std::string agreement_detail(const AgreementSummary& s) {
  return std::to_string(s.witnesses_checked) + " witnesses agree, " +
         std::to_string(s.witnesses_pruned) + " fail a retraction under every definition";
}

}  // namespace

AgreementSummary definitions_agree_all(const FinCat& cat, ObjId a, ObjId b,
                                       const CMonStructure* cm, Sweep sweep) {
  const ZeroStructure zs = require_zero_structure(cat, "definitions_agree_all");
  require_valid_cmon(cat, cm);
  AgreementSummary out;
  sweep_pair(cat, zs, cm, a, b, sweep, out);
  if (out.verdict) out.verdict = Verdict::ok(agreement_detail(out));
  return out;
}

AgreementSummary definitions_agree_all_pairs(const FinCat& cat, const CMonStructure* cm,
                                             Sweep sweep) {
  const ZeroStructure zs = require_zero_structure(cat, "definitions_agree_all_pairs");
  require_valid_cmon(cat, cm);
  AgreementSummary out;
  for (ObjId a : cat.objects()) {
    for (ObjId b : cat.objects()) {
      sweep_pair(cat, zs, cm, a, b, sweep, out);
      if (!out.verdict) {
        out.verdict.detail = "(" + cat.name(a) + ", " + cat.name(b) + "): " + out.verdict.detail;
        return out;
      }
    }
  }
  out.verdict = Verdict::ok(agreement_detail(out));
  return out;
}

Verdict verify_lemma_zero(const FinCat& cat, const BiproductWitness& w, ObjId a, ObjId b) {
  require_certified(cat, w, a, b, "verify_lemma_zero");
  const MorId pb_ia = cat.compose(w.p_b, w.i_a);
  const MorId pa_ib = cat.compose(w.p_a, w.i_b);
  const MorphismClass c1 = classify_morphism(cat, pb_ia);
  if (!c1.zero) {
    return Verdict::fail("lemma-zero", cat.name(w.p_b) + " . " + cat.name(w.i_a) + " = " +
                                           cat.name(pb_ia) + " is not a zero morphism" +
                                           (c1.constant ? " (not coconstant)" : " (not constant)"),
                         Counterexample{"lemma-zero", {w.p_b, w.i_a, pb_ia}, {}, {}});
  }
  const MorphismClass c2 = classify_morphism(cat, pa_ib);
  if (!c2.zero) {
    return Verdict::fail("lemma-zero", cat.name(w.p_a) + " . " + cat.name(w.i_b) + " = " +
                                           cat.name(pa_ib) + " is not a zero morphism" +
                                           (c2.constant ? " (not coconstant)" : " (not constant)"),
                         Counterexample{"lemma-zero", {w.p_a, w.i_b, pa_ib}, {}, {}});
  }
  return Verdict::ok(cat.name(pb_ia) + " and " + cat.name(pa_ib) + " are zero morphisms");
}

Verdict verify_corollary_zeros(const FinCat& cat) {
  for (ObjId a : cat.objects()) {
    for (ObjId b : cat.objects()) {
      bool found = false;
      search_biproducts(cat, a, b, [&](const BiproductWitness&) {
        found = true;
        return false;
      });
      if (!found) {
        return Verdict::vacuously("no biproduct in this fragment for " + pair_name(cat, a, b));
      }
    }
  }
  auto search = find_zero_structure(cat);
  if (!search.structure) {
    return Verdict::fail("corollary-zeros",
                         "all binary biproducts exist but " + search.verdict.detail);
  }
  return Verdict::ok("all binary biproducts exist and a zero structure was found");
}

Verdict verify_uniqueness(const FinCat& cat, const BiproductWitness& w1,
                          const BiproductWitness& w2, ObjId a, ObjId b) {
  require_certified(cat, w1, a, b, "verify_uniqueness");
  require_certified(cat, w2, a, b, "verify_uniqueness");
  const MorId f = mediate(cat, w2.product_span(), w1.p_a, w1.p_b);
  const MorId g = comediate(cat, w1.coproduct_cospan(), w2.i_a, w2.i_b);
  if (f != g) {
    return Verdict::fail("comparison-maps-coincide",
                         "product comparison " + cat.name(f) + " != coproduct comparison " +
                             cat.name(g),
                         Counterexample{"comparison-maps-coincide", {f, g}, {f}, {g}});
  }
  bool invertible = false;
  for (MorId back : cat.hom(w2.carrier, w1.carrier)) {
    if (cat.compose(back, f) == cat.identity(w1.carrier) &&
        cat.compose(f, back) == cat.identity(w2.carrier)) {
      invertible = true;
      break;
    }
  }
  if (!invertible) {
    return Verdict::fail("comparison-is-iso", cat.name(f) + " has no two-sided inverse",
                         Counterexample{"comparison-is-iso", {f}, {}, {}});
  }
  std::size_t compatible = 0;
  for (MorId h : cat.hom(w1.carrier, w2.carrier)) {
    if (cat.compose(w2.p_a, h) == w1.p_a && cat.compose(w2.p_b, h) == w1.p_b &&
        cat.compose(h, w1.i_a) == w2.i_a && cat.compose(h, w1.i_b) == w2.i_b) {
      ++compatible;
    }
  }
  if (compatible != 1) {
    return Verdict::fail("compatible-map-unique",
                         std::to_string(compatible) + " maps are compatible with both structures",
                         Counterexample{"compatible-map-unique", {f}, {}, {}});
  }
  return Verdict::ok("unique compatible isomorphism " + cat.name(f));
}

bool well_typed(const FinCat& cat, const NaryBiproductWitness& w) {
  const std::size_t n = w.factors.size();
  if (w.projections.size() != n || w.injections.size() != n) return false;
  if (w.carrier.index >= cat.object_count()) return false;
  for (std::size_t k = 0; k < n; ++k) {
    const MorId p = w.projections[k];
    const MorId i = w.injections[k];
    if (p.index >= cat.morphism_count() || i.index >= cat.morphism_count()) return false;
    if (w.factors[k].index >= cat.object_count()) return false;
    if (cat.dom(p) != w.carrier || cat.cod(p) != w.factors[k]) return false;
    if (cat.dom(i) != w.factors[k] || cat.cod(i) != w.carrier) return false;
  }
  return true;
}

Verdict check_nary_biproduct(const FinCat& cat, const NaryBiproductWitness& w) {
  if (!well_typed(cat, w)) throw ContractViolation("check_nary_biproduct: witness is not well typed");
  if (auto f = check_limit_cone(View(cat), w.carrier, w.projections)) {
    return nary_universality_failure(cat, "product", *f);
  }
  if (auto f = check_limit_cone(View(cat, true), w.carrier, w.injections)) {
    return nary_universality_failure(cat, "coproduct", *f);
  }
  const std::size_t n = w.factors.size();
  for (std::size_t k = 0; k < n; ++k) {
    const MorId id = cat.identity(w.factors[k]);
    if (cat.compose(w.projections[k], w.injections[k]) != id) {
      return equation_failure(cat, "retraction-" + std::to_string(k),
                              {w.projections[k], w.injections[k]}, {id});
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k + 1; l < n; ++l) {
      const MorId e_k = cat.compose(w.injections[k], w.projections[k]);
      const MorId e_l = cat.compose(w.injections[l], w.projections[l]);
      if (cat.compose(e_k, e_l) != cat.compose(e_l, e_k)) {
        return equation_failure(
            cat, "idempotents-commute-" + std::to_string(k) + "-" + std::to_string(l),
            {w.injections[k], w.projections[k], w.injections[l], w.projections[l]},
            {w.injections[l], w.projections[l], w.injections[k], w.projections[k]});
      }
    }
  }
  return Verdict::ok();
}

NaryBiproductWitness ternary_from_nested(const FinCat& cat, const BiproductWitness& ab,
                                         const BiproductWitness& ab_c) {
  if (cat.cod(ab_c.p_a) != ab.carrier) {
    throw ContractViolation("ternary_from_nested: outer witness is not over the inner carrier");
  }
  NaryBiproductWitness out;
  out.carrier = ab_c.carrier;
  out.factors = {cat.cod(ab.p_a), cat.cod(ab.p_b), cat.cod(ab_c.p_b)};
  out.projections = {cat.compose(ab.p_a, ab_c.p_a), cat.compose(ab.p_b, ab_c.p_a), ab_c.p_b};
  out.injections = {cat.compose(ab_c.i_a, ab.i_a), cat.compose(ab_c.i_a, ab.i_b), ab_c.i_b};
  return out;
}

SumProductComparison check_sum_equals_product_of_morphisms(const FinCat& cat,
                                                           const BiproductWitness& w_ab,
                                                           const BiproductWitness& w_cd, MorId f,
                                                           MorId g) {
  const ObjId a = cat.cod(w_ab.p_a), b = cat.cod(w_ab.p_b);
  const ObjId c = cat.cod(w_cd.p_a), d = cat.cod(w_cd.p_b);
  if (cat.dom(f) != a || cat.cod(f) != c || cat.dom(g) != b || cat.cod(g) != d) {
    throw ContractViolation("check_sum_equals_product_of_morphisms: f or g has the wrong type");
  }
  SumProductComparison out;
  out.sum = comediate(cat, w_ab.coproduct_cospan(), cat.compose(w_cd.i_a, f),
                      cat.compose(w_cd.i_b, g));
  out.product = mediate(cat, w_cd.product_span(), cat.compose(f, w_ab.p_a),
                        cat.compose(g, w_ab.p_b));
  if (out.sum != out.product) {
    out.verdict = Verdict::fail("sum-equals-product",
                                "[i . f, i . g] = " + cat.name(out.sum) + " but <f . p, g . p> = " +
                                    cat.name(out.product),
                                Counterexample{"sum-equals-product", {f, g}, {out.sum}, {out.product}});
  } else {
    out.verdict = Verdict::ok("f+g = f*g = " + cat.name(out.sum));
  }
  return out;
}

AssignmentSearch canonical_assignment(const FinCat& cat) {
  const std::size_t n = cat.object_count();
  std::vector<BiproductWitness> table(n * n);
  for (ObjId a : cat.objects()) {
    for (ObjId b : cat.objects()) {
      bool found = false;
      search_biproducts(cat, a, b, [&](const BiproductWitness& w) {
        table[a.index * n + b.index] = w;
        found = true;
        return false;
      });
      if (!found) return {std::nullopt, std::make_pair(a, b)};
    }
  }
  return {BiproductAssignment(n, std::move(table)), std::nullopt};
}

namespace {

// Action of ⊕ on morphisms, via the product of the targets.
class SumFunctor {
 public:
  SumFunctor(const FinCat& cat, const BiproductAssignment& ba) : cat_(cat), ba_(ba) {}

  MorId on_objects(ObjId a, ObjId b) const { return cat_.identity(ba_.at(a, b).carrier); }
  ObjId carrier(ObjId a, ObjId b) const { return ba_.at(a, b).carrier; }

  MorId via_product(MorId f, MorId g) const {
    const auto& src = ba_.at(cat_.dom(f), cat_.dom(g));
    const auto& dst = ba_.at(cat_.cod(f), cat_.cod(g));
    return mediate(cat_, dst.product_span(), cat_.compose(f, src.p_a), cat_.compose(g, src.p_b));
  }
  MorId via_coproduct(MorId f, MorId g) const {
    const auto& src = ba_.at(cat_.dom(f), cat_.dom(g));
    const auto& dst = ba_.at(cat_.cod(f), cat_.cod(g));
    return comediate(cat_, src.coproduct_cospan(), cat_.compose(dst.i_a, f),
                     cat_.compose(dst.i_b, g));
  }

 private:
  const FinCat& cat_;
  const BiproductAssignment& ba_;
};

}  // namespace

Verdict verify_ambiadjunction(const FinCat& cat, const BiproductAssignment& ba) {
  if (ba.object_count() != cat.object_count()) {
    return Verdict::fail("precondition", "assignment is sized for another category");
  }
  for (ObjId a : cat.objects()) {
    for (ObjId b : cat.objects()) {
      const auto& w = ba.at(a, b);
      if (!well_typed(cat, w, a, b)) {
        return Verdict::fail("precondition", "assignment entry " + pair_name(cat, a, b) +
                                                 " is not well typed");
      }
      if (auto v = check_biproduct(cat, w, a, b); !v) {
        return Verdict::fail("precondition", "assignment entry " + pair_name(cat, a, b) +
                                                 " is not a biproduct: " + v.clause);
      }
    }
  }

  const SumFunctor sum(cat, ba);
  const std::size_t m = cat.morphism_count();
  std::vector<MorId> plus(m * m, kNoMorphism);
  auto plus_of = [&](MorId f, MorId g) { return plus[f.index * m + g.index]; };

  // (i) functoriality; the product and coproduct descriptions of f ⊕ g agree.
  for (std::uint32_t fi = 0; fi < m; ++fi) {
    for (std::uint32_t gi = 0; gi < m; ++gi) {
      const MorId f{fi}, g{gi};
      const MorId p = sum.via_product(f, g);
      const MorId q = sum.via_coproduct(f, g);
      if (p != q) {
        return Verdict::fail("sum-equals-product",
                             cat.name(f) + " (+) " + cat.name(g) + ": tuple " + cat.name(p) +
                                 " != cotuple " + cat.name(q),
                             Counterexample{"sum-equals-product", {f, g}, {p}, {q}});
      }
      plus[fi * m + gi] = p;
    }
  }
  for (ObjId a : cat.objects()) {
    for (ObjId b : cat.objects()) {
      const MorId id_sum = plus_of(cat.identity(a), cat.identity(b));
      if (id_sum != sum.on_objects(a, b)) {
        return Verdict::fail("functor-identity",
                             "id (+) id on " + pair_name(cat, a, b) + " is " + cat.name(id_sum),
                             Counterexample{"functor-identity", {id_sum}, {id_sum},
                                            {sum.on_objects(a, b)}});
      }
    }
  }
  for (std::uint32_t fi = 0; fi < m; ++fi) {
    for (std::uint32_t gi = 0; gi < m; ++gi) {
      const MorId f{fi}, g{gi};
      for (ObjId x : cat.objects()) {
        for (MorId f2 : cat.hom(cat.cod(f), x)) {
          for (ObjId y : cat.objects()) {
            for (MorId g2 : cat.hom(cat.cod(g), y)) {
              const MorId lhs = plus_of(cat.compose(f2, f), cat.compose(g2, g));
              const MorId rhs = cat.compose(plus_of(f2, g2), plus_of(f, g));
              if (lhs != rhs) {
                return Verdict::fail(
                    "functor-composition",
                    "(" + cat.name(f2) + " . " + cat.name(f) + ") (+) (" + cat.name(g2) + " . " +
                        cat.name(g) + ") != composite of sums",
                    Counterexample{"functor-composition", {f2, f, g2, g}, {lhs},
                                   {plus_of(f2, g2), plus_of(f, g)}});
              }
            }
          }
        }
      }
    }
  }

  // (ii) Δ ⊣ ⊕: hom(X, A⊕B) ≅ hom(X,A) × hom(X,B) via h ↦ (p_a∘h, p_b∘h).
  for (ObjId a : cat.objects()) {
    for (ObjId b : cat.objects()) {
      const auto& w = ba.at(a, b);
      for (ObjId x : cat.objects()) {
        const auto into = cat.hom(x, w.carrier);
        const std::size_t kb = cat.hom(x, b).size();
        std::vector<bool> hit(cat.hom(x, a).size() * kb, false);
        for (MorId h : into) {
          const std::size_t key =
              cat.hom_position(cat.compose(w.p_a, h)) * kb + cat.hom_position(cat.compose(w.p_b, h));
          if (hit[key]) {
            return Verdict::fail("right-adjoint-bijection",
                                 "two maps " + cat.name(x) + " -> " + cat.name(w.carrier) +
                                     " have the same projections",
                                 Counterexample{"right-adjoint-bijection", {h}, {}, {}});
          }
          hit[key] = true;
        }
        if (into.size() != hit.size()) {
          return Verdict::fail("right-adjoint-bijection",
                               "hom(" + cat.name(x) + ", " + cat.name(w.carrier) +
                                   ") is not in bijection with pairs of maps into " +
                                   pair_name(cat, a, b));
        }
        // Naturality in X.
        for (MorId h : into) {
          for (ObjId x2 : cat.objects()) {
            for (MorId k : cat.hom(x2, x)) {
              if (cat.compose(w.p_a, cat.compose(h, k)) !=
                      cat.compose(cat.compose(w.p_a, h), k) ||
                  cat.compose(w.p_b, cat.compose(h, k)) != cat.compose(cat.compose(w.p_b, h), k)) {
                return Verdict::fail("right-adjoint-naturality", "naturality in X fails at " +
                                                                     cat.name(h) + ", " +
                                                                     cat.name(k));
              }
            }
          }
          // Naturality in (A,B): φ((f ⊕ g)∘h) = (f∘p_a∘h, g∘p_b∘h).
          for (ObjId a2 : cat.objects()) {
            for (MorId f : cat.hom(a, a2)) {
              for (ObjId b2 : cat.objects()) {
                const auto& w2 = ba.at(a2, b2);
                for (MorId g : cat.hom(b, b2)) {
                  const MorId moved = cat.compose(plus_of(f, g), h);
                  const MorId lhs_a = cat.compose(w2.p_a, moved);
                  const MorId lhs_b = cat.compose(w2.p_b, moved);
                  const MorId rhs_a = cat.compose(f, cat.compose(w.p_a, h));
                  const MorId rhs_b = cat.compose(g, cat.compose(w.p_b, h));
                  if (lhs_a != rhs_a) {
                    return Verdict::fail(
                        "right-adjoint-naturality", "counit square fails",
                        Counterexample{"right-adjoint-naturality", {f, g, h},
                                       {w2.p_a, plus_of(f, g), h}, {f, w.p_a, h}});
                  }
                  if (lhs_b != rhs_b) {
                    return Verdict::fail(
                        "right-adjoint-naturality", "counit square fails",
                        Counterexample{"right-adjoint-naturality", {f, g, h},
                                       {w2.p_b, plus_of(f, g), h}, {g, w.p_b, h}});
                  }
                }
              }
            }
          }
        }
      }
    }
  }

  // ⊕ ⊣ Δ: hom(A⊕B, X) ≅ hom(A,X) × hom(B,X) via h ↦ (h∘i_a, h∘i_b).
  for (ObjId a : cat.objects()) {
    for (ObjId b : cat.objects()) {
      const auto& w = ba.at(a, b);
      for (ObjId x : cat.objects()) {
        const auto out_of = cat.hom(w.carrier, x);
        const std::size_t kb = cat.hom(b, x).size();
        std::vector<bool> hit(cat.hom(a, x).size() * kb, false);
        for (MorId h : out_of) {
          const std::size_t key =
              cat.hom_position(cat.compose(h, w.i_a)) * kb + cat.hom_position(cat.compose(h, w.i_b));
          if (hit[key]) {
            return Verdict::fail("left-adjoint-bijection",
                                 "two maps " + cat.name(w.carrier) + " -> " + cat.name(x) +
                                     " have the same restrictions",
                                 Counterexample{"left-adjoint-bijection", {h}, {}, {}});
          }
          hit[key] = true;
        }
        if (out_of.size() != hit.size()) {
          return Verdict::fail("left-adjoint-bijection",
                               "hom(" + cat.name(w.carrier) + ", " + cat.name(x) +
                                   ") is not in bijection with pairs of maps out of " +
                                   pair_name(cat, a, b));
        }
        for (MorId h : out_of) {
          for (ObjId x2 : cat.objects()) {
            for (MorId k : cat.hom(x, x2)) {
              if (cat.compose(cat.compose(k, h), w.i_a) != cat.compose(k, cat.compose(h, w.i_a)) ||
                  cat.compose(cat.compose(k, h), w.i_b) != cat.compose(k, cat.compose(h, w.i_b))) {
                return Verdict::fail("left-adjoint-naturality", "naturality in X fails at " +
                                                                    cat.name(h) + ", " +
                                                                    cat.name(k));
              }
            }
          }
        }
      }
      // Naturality in (A,B): ψ(h∘(f ⊕ g)) = (h∘i_a'∘f, h∘i_b'∘g), i.e. the
      // unit squares (f ⊕ g)∘i_a = i_a'∘f and (f ⊕ g)∘i_b = i_b'∘g.
      for (ObjId a2 : cat.objects()) {
        for (MorId f : cat.hom(a, a2)) {
          for (ObjId b2 : cat.objects()) {
            const auto& w2 = ba.at(a2, b2);
            for (MorId g : cat.hom(b, b2)) {
              const MorId fg = plus_of(f, g);
              for (ObjId x : cat.objects()) {
                for (MorId h : cat.hom(w2.carrier, x)) {
                  const MorId moved = cat.compose(h, fg);
                  if (cat.compose(moved, w.i_a) != cat.compose(h, cat.compose(w2.i_a, f)) ||
                      cat.compose(moved, w.i_b) != cat.compose(h, cat.compose(w2.i_b, g))) {
                    return Verdict::fail(
                        "left-adjoint-naturality", "unit square fails",
                        Counterexample{"left-adjoint-naturality", {f, g, h}, {h, fg, w.i_a},
                                       {h, w2.i_a, f}});
                  }
                }
              }
            }
          }
        }
      }
    }
  }

  // The square from the characterization: for f: B→C,
  // p_c∘(id ⊕ f)∘i_a = f∘p_b∘i_a, split into its unit and counit halves.
  for (ObjId a : cat.objects()) {
    for (ObjId b : cat.objects()) {
      const auto& w = ba.at(a, b);
      for (ObjId c : cat.objects()) {
        const auto& w2 = ba.at(a, c);
        for (MorId f : cat.hom(b, c)) {
          const MorId id_f = plus_of(cat.identity(a), f);
          if (cat.compose(id_f, w.i_a) != w2.i_a) {
            return Verdict::fail("theorem-square", "(id (+) " + cat.name(f) + ") . i_a != i_a",
                                 Counterexample{"theorem-square", {f}, {id_f, w.i_a}, {w2.i_a}});
          }
          if (cat.compose(w2.p_b, id_f) != cat.compose(f, w.p_b)) {
            return Verdict::fail("theorem-square", "p_c . (id (+) " + cat.name(f) + ") != " +
                                                       cat.name(f) + " . p_b",
                                 Counterexample{"theorem-square", {f}, {w2.p_b, id_f}, {f, w.p_b}});
          }
          if (cat.compose(w2.p_b, cat.compose(id_f, w.i_a)) !=
              cat.compose(f, cat.compose(w.p_b, w.i_a))) {
            return Verdict::fail("theorem-square", "outer square fails for " + cat.name(f),
                                 Counterexample{"theorem-square", {f}, {w2.p_b, id_f, w.i_a},
                                                {f, w.p_b, w.i_a}});
          }
        }
      }
    }
  }

  // (iii) unit is a section of the counit.
  for (ObjId a : cat.objects()) {
    for (ObjId b : cat.objects()) {
      const auto& w = ba.at(a, b);
      if (cat.compose(w.p_a, w.i_a) != cat.identity(a)) {
        return equation_failure(cat, "section", {w.p_a, w.i_a}, {cat.identity(a)});
      }
      if (cat.compose(w.p_b, w.i_b) != cat.identity(b)) {
        return equation_failure(cat, "section", {w.p_b, w.i_b}, {cat.identity(b)});
      }
    }
  }
  return Verdict::ok("functorial, ambiadjoint to the diagonal, unit is a section of the counit");
}

}  // namespace biprod
