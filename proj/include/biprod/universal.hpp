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
#include <span>
#include <string>
#include <vector>

#include "biprod/fincat.hpp"

namespace biprod {

/// apex --left--> A, apex --right--> B.
struct SpanWitness {
  ObjId apex;
  MorId left;
  MorId right;
  friend auto operator<=>(const SpanWitness&, const SpanWitness&) = default;
};

/// A --left--> nadir <--right-- B.
struct CospanWitness {
  ObjId nadir;
  MorId left;
  MorId right;
  friend auto operator<=>(const CospanWitness&, const CospanWitness&) = default;
};

enum class UniversalityFailure { missing_mediator, duplicate_mediator };

/// For products: the cone (f: X→A, g: X→B) over `test_object` X has no
/// mediator, or the two listed mediators h1 != h2. For coproducts every
/// arrow is reversed.
struct UniversalityCounterexample {
  UniversalityFailure kind;
  ObjId test_object;
  MorId f;
  MorId g;
  MorId h1 = kNoMorphism;
  MorId h2 = kNoMorphism;
  friend bool operator==(const UniversalityCounterexample&,
                         const UniversalityCounterexample&) = default;
};

struct UniversalityVerdict {
  std::optional<UniversalityCounterexample> failure;

  bool pass() const { return !failure.has_value(); }
  explicit operator bool() const { return pass(); }
};

/// Returns false unless dom(left) = dom(right) = apex, cod(left) = a and
/// cod(right) = b.
bool well_typed(const FinCat& cat, const SpanWitness& w, ObjId a, ObjId b);
bool well_typed(const FinCat& cat, const CospanWitness& w, ObjId a, ObjId b);

UniversalityVerdict check_product(const FinCat& cat, const SpanWitness& w, ObjId a, ObjId b);
/// Runs check_product on the opposite category.
UniversalityVerdict check_coproduct(const FinCat& cat, const CospanWitness& w, ObjId a, ObjId b);

/// Every span over (a,b) that is a product. Apexes are visited in object
/// order and leg pairs in MorId order.
std::vector<SpanWitness> find_products(const FinCat& cat, ObjId a, ObjId b);
std::vector<CospanWitness> find_coproducts(const FinCat& cat, ObjId a, ObjId b);

/// The unique h with left∘h = f and right∘h = g. Throws ContractViolation
/// when no such h exists or when it is not unique.
MorId mediate(const FinCat& cat, const SpanWitness& w, MorId f, MorId g);
/// The unique h with h∘left = f and h∘right = g (cotupling [f, g]).
MorId comediate(const FinCat& cat, const CospanWitness& w, MorId f, MorId g);

/// Checks the n-ary universal property of `legs` (all with domain `apex`
/// in `view`): every family f_k: X→cod(leg_k) factors through exactly one
/// h: X→apex. Families are enumerated in mixed-radix order over the legs'
/// homsets; throws ResourceLimit if one test object would need more than
/// 2^26 families.
struct NaryUniversalityFailure {
  UniversalityFailure kind;
  ObjId test_object;
  std::vector<MorId> family;
  MorId h1 = kNoMorphism;
  MorId h2 = kNoMorphism;
};
std::optional<NaryUniversalityFailure> check_limit_cone(const View& view, ObjId apex,
                                                        std::span<const MorId> legs);

/// Necessary condition for `apex` to carry a product of `targets` in `view`:
/// |hom(X, apex)| = Π_k |hom(X, target_k)| for every object X.
bool cardinality_admits_product(const View& view, ObjId apex, std::span<const ObjId> targets);

/// Failed verdict for a universality counterexample, tagged with `clause`.
Verdict universality_failure_verdict(const FinCat& cat, const std::string& clause,
                                     const UniversalityCounterexample& ce);

}  // namespace biprod
