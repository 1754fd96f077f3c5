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
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "biprod/fincat.hpp"
#include "biprod/universal.hpp"

namespace biprod {

/// Candidate biproduct structure A <--p_a-- carrier --p_b--> B together with
/// A --i_a--> carrier <--i_b-- B.
struct BiproductWitness {
  ObjId carrier;
  MorId p_a;
  MorId p_b;
  MorId i_a;
  MorId i_b;

  SpanWitness product_span() const { return {carrier, p_a, p_b}; }
  CospanWitness coproduct_cospan() const { return {carrier, i_a, i_b}; }
  /// The same tuple read in C^op: projections and injections trade places.
  BiproductWitness swapped() const { return {carrier, i_a, i_b, p_a, p_b}; }

  friend auto operator<=>(const BiproductWitness&, const BiproductWitness&) = default;
};

struct NaryBiproductWitness {
  ObjId carrier;
  std::vector<ObjId> factors;
  std::vector<MorId> projections;
  std::vector<MorId> injections;
};

/// Commutative monoid on each homset plus the zero of each homset. The sum
/// table of hom(a,b) is indexed by hom positions.
class CMonStructure {
 public:
  struct HomMonoid {
    MorId zero = kNoMorphism;
    std::vector<MorId> sum;  // sum[i * k + j] = hom[i] + hom[j], k = |hom|
    friend bool operator==(const HomMonoid&, const HomMonoid&) = default;
  };

  explicit CMonStructure(const FinCat& cat);

  HomMonoid& monoid(ObjId a, ObjId b) { return monoids_[a.index * n_ + b.index]; }
  const HomMonoid& monoid(ObjId a, ObjId b) const { return monoids_[a.index * n_ + b.index]; }

  /// f + g for parallel f, g.
  MorId add(const FinCat& cat, MorId f, MorId g) const;
  MorId zero(ObjId a, ObjId b) const { return monoid(a, b).zero; }
  std::size_t object_count() const { return n_; }

  friend bool operator==(const CMonStructure&, const CMonStructure&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<HomMonoid> monoids_;
};

/// Total (A,B) → certified witness over every ordered pair of objects.
class BiproductAssignment {
 public:
  BiproductAssignment() = default;
  BiproductAssignment(std::size_t object_count, std::vector<BiproductWitness> table)
      : n_(object_count), table_(std::move(table)) {}

  const BiproductWitness& at(ObjId a, ObjId b) const { return table_[a.index * n_ + b.index]; }
  std::size_t object_count() const { return n_; }

 private:
  std::size_t n_ = 0;
  std::vector<BiproductWitness> table_;
};

bool well_typed(const FinCat& cat, const BiproductWitness& w, ObjId a, ObjId b);

/// The enrichment-free definition: product, coproduct, p_a∘i_a = id,
/// p_b∘i_b = id and the commuting-idempotents equation
/// i_a∘p_a∘i_b∘p_b = i_b∘p_b∘i_a∘p_a, checked in that order.
Verdict check_biproduct(const FinCat& cat, const BiproductWitness& w, ObjId a, ObjId b);

/// All witnesses over (a,b) in (carrier, p_a, p_b, i_a, i_b) lexicographic
/// order.
std::vector<BiproductWitness> find_biproducts(const FinCat& cat, ObjId a, ObjId b);

/// Definition relative to chosen zero morphisms: product, coproduct,
/// retractions, then p_b∘i_a = 0(A,B) and p_a∘i_b = 0(B,A).
Verdict check_zero_def_biproduct(const FinCat& cat, const ZeroStructure& zs,
                                 const BiproductWitness& w, ObjId a, ObjId b);

/// Commutativity, associativity, unit, closure, bilinearity of composition
/// and absorption by zeros.
Verdict validate_cmon(const FinCat& cat, const CMonStructure& cm);

/// The classical equational definition: retractions, p_b∘i_a = 0,
/// p_a∘i_b = 0 and i_a∘p_a + i_b∘p_b = id. Throws InvalidStructure if `cm`
/// does not validate.
Verdict check_cmon_biproduct(const FinCat& cat, const CMonStructure& cm,
                             const BiproductWitness& w, ObjId a, ObjId b);

/// Passes iff check_biproduct and check_zero_def_biproduct reach the same
/// pass/fail outcome (and check_cmon_biproduct too when `cm` is given).
/// Throws ContractViolation when the category has no zero structure.
Verdict definitions_agree(const FinCat& cat, const BiproductWitness& w, ObjId a, ObjId b,
                          const CMonStructure* cm = nullptr);

struct AgreementSummary {
  Verdict verdict;
  std::size_t witnesses_checked = 0;
  /// Witnesses failing a retraction. Every definition contains both
  /// retraction clauses, so these fail under all of them.
  std::size_t witnesses_pruned = 0;
  std::size_t biproducts = 0;
};

enum class Sweep {
  /// Run every definition on every well-typed witness.
  exhaustive,
  /// Run the definitions only where p_a∘i_a = id and p_b∘i_b = id.
  retraction_pruned,
};

/// definitions_agree over every well-typed witness of (a,b).
AgreementSummary definitions_agree_all(const FinCat& cat, ObjId a, ObjId b,
                                       const CMonStructure* cm = nullptr,
                                       Sweep sweep = Sweep::retraction_pruned);
/// The same over every ordered pair, validating the zero and CMon structures
/// once.
AgreementSummary definitions_agree_all_pairs(const FinCat& cat, const CMonStructure* cm = nullptr,
                                             Sweep sweep = Sweep::retraction_pruned);

/// Number of well-typed witnesses over (a,b).
std::size_t count_well_typed_witnesses(const FinCat& cat, ObjId a, ObjId b);

/// p_b∘i_a and p_a∘i_b are zero morphisms.
Verdict verify_lemma_zero(const FinCat& cat, const BiproductWitness& w, ObjId a, ObjId b);

/// If every pair of objects has a biproduct then a zero structure exists.
/// Vacuous when some pair lacks one.
Verdict verify_corollary_zeros(const FinCat& cat);

/// The product-compatible and coproduct-compatible comparison maps between
/// two certified witnesses coincide, are invertible, and are the only map
/// compatible with both structures.
Verdict verify_uniqueness(const FinCat& cat, const BiproductWitness& w1,
                          const BiproductWitness& w2, ObjId a, ObjId b);

bool well_typed(const FinCat& cat, const NaryBiproductWitness& w);
/// n-ary product and coproduct, p_k∘i_k = id for each k, and pairwise
/// commuting idempotents i_k∘p_k.
Verdict check_nary_biproduct(const FinCat& cat, const NaryBiproductWitness& w);

/// Builds the ternary witness on (A⊕B)⊕C from certified A⊕B and
/// (A⊕B)⊕C witnesses.
NaryBiproductWitness ternary_from_nested(const FinCat& cat, const BiproductWitness& ab,
                                         const BiproductWitness& ab_c);

/// f+g := [i_c∘f, i_d∘g] versus f×g := <f∘p_a, g∘p_b>, both A⊕B → C⊕D.
struct SumProductComparison {
  MorId sum = kNoMorphism;
  MorId product = kNoMorphism;
  Verdict verdict;
};
SumProductComparison check_sum_equals_product_of_morphisms(const FinCat& cat,
                                                           const BiproductWitness& w_ab,
                                                           const BiproductWitness& w_cd, MorId f,
                                                           MorId g);

/// First witness found for every ordered pair, or the first pair without
/// one.
struct AssignmentSearch {
  std::optional<BiproductAssignment> assignment;
  std::optional<std::pair<ObjId, ObjId>> missing;
};
AssignmentSearch canonical_assignment(const FinCat& cat);

/// Checks that the assignment extends to a functor ⊕ that is both right
/// and left adjoint to the diagonal, with the unit (i_a, i_b) of ⊕ ⊣ Δ a
/// section of the counit (p_a, p_b) of Δ ⊣ ⊕.
Verdict verify_ambiadjunction(const FinCat& cat, const BiproductAssignment& ba);

}  // namespace biprod
