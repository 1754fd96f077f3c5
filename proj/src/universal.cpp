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

#include "biprod/universal.hpp"

#include <cstdint>

#include "biprod/error.hpp"

namespace biprod {

namespace {

constexpr std::size_t kMaxFamilies = std::size_t{1} << 26;

UniversalityVerdict to_binary(const std::optional<NaryUniversalityFailure>& failure) {
  UniversalityVerdict out;
  if (failure) {
    out.failure = UniversalityCounterexample{failure->kind, failure->test_object,
                                             failure->family[0], failure->family[1], failure->h1,
                                             failure->h2};
  }
  return out;
}

std::vector<SpanWitness> products_in(const View& view, ObjId a, ObjId b) {
  std::vector<SpanWitness> out;
  const ObjId targets[] = {a, b};
  for (ObjId apex : view.objects()) {
    if (!cardinality_admits_product(view, apex, targets)) continue;
    for (MorId left : view.hom(apex, a)) {
      for (MorId right : view.hom(apex, b)) {
        const MorId legs[] = {left, right};
        if (!check_limit_cone(view, apex, legs)) out.push_back({apex, left, right});
      }
    }
  }
  return out;
}

MorId mediate_in(const View& view, ObjId apex, MorId left, MorId right, MorId f, MorId g) {
  if (view.dom(f) != view.dom(g) || view.cod(f) != view.cod(left) ||
      view.cod(g) != view.cod(right)) {
    throw ContractViolation("mediate: cone legs do not match the witness");
  }
  MorId found = kNoMorphism;
  for (MorId h : view.hom(view.dom(f), apex)) {
    if (view.compose(left, h) == f && view.compose(right, h) == g) {
      if (found != kNoMorphism) {
        throw ContractViolation("mediate: mediator is not unique; witness is not certified");
      }
      found = h;
    }
  }
  if (found == kNoMorphism) {
    throw ContractViolation("mediate: no mediator exists; witness is not certified");
  }
  return found;
}

}  // namespace

bool well_typed(const FinCat& cat, const SpanWitness& w, ObjId a, ObjId b) {
  const auto m = cat.morphism_count();
  if (w.left.index >= m || w.right.index >= m || w.apex.index >= cat.object_count()) return false;
  return cat.dom(w.left) == w.apex && cat.dom(w.right) == w.apex && cat.cod(w.left) == a &&
         cat.cod(w.right) == b;
}

bool well_typed(const FinCat& cat, const CospanWitness& w, ObjId a, ObjId b) {
  const auto m = cat.morphism_count();
  if (w.left.index >= m || w.right.index >= m || w.nadir.index >= cat.object_count()) {
    return false;
  }
  return cat.cod(w.left) == w.nadir && cat.cod(w.right) == w.nadir && cat.dom(w.left) == a &&
         cat.dom(w.right) == b;
}

bool cardinality_admits_product(const View& view, ObjId apex, std::span<const ObjId> targets) {
  for (ObjId x : view.objects()) {
    std::size_t needed = 1;
    for (ObjId t : targets) needed *= view.hom(x, t).size();
    if (view.hom(x, apex).size() != needed) return false;
  }
  return true;
}

std::optional<NaryUniversalityFailure> check_limit_cone(const View& view, ObjId apex,
                                                        std::span<const MorId> legs) {
  const std::size_t k = legs.size();
  std::vector<ObjId> targets(k);
  for (std::size_t i = 0; i < k; ++i) targets[i] = view.cod(legs[i]);

  std::vector<std::size_t> radix(k);
  std::vector<std::uint32_t> count;
  std::vector<MorId> first;
  std::vector<MorId> second;
  for (ObjId x : view.objects()) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
      radix[i] = view.hom(x, targets[i]).size();
      total *= radix[i];
      if (total > kMaxFamilies) {
        throw ResourceLimit("universality check needs more than 2^26 cones at one object");
      }
    }
    count.assign(total, 0);
    first.assign(total, kNoMorphism);
    second.assign(total, kNoMorphism);
    for (MorId h : view.hom(x, apex)) {
      std::size_t key = 0;
      for (std::size_t i = 0; i < k; ++i) {
        key = key * radix[i] + view.hom_position(view.compose(legs[i], h));
      }
      if (count[key] == 0) {
        first[key] = h;
      } else if (count[key] == 1) {
        second[key] = h;
      }
      ++count[key];
    }
    for (std::size_t key = 0; key < total; ++key) {
      if (count[key] == 1) continue;
      NaryUniversalityFailure failure;
      failure.kind = count[key] == 0 ? UniversalityFailure::missing_mediator
                                     : UniversalityFailure::duplicate_mediator;
      failure.test_object = x;
      failure.family.resize(k);
      std::size_t rest = key;
      for (std::size_t i = k; i-- > 0;) {
        failure.family[i] = view.hom(x, targets[i])[rest % radix[i]];
        rest /= radix[i];
      }
      failure.h1 = first[key];
      failure.h2 = second[key];
      return failure;
    }
  }
  return std::nullopt;
}

UniversalityVerdict check_product(const FinCat& cat, const SpanWitness& w, ObjId a, ObjId b) {
  if (!well_typed(cat, w, a, b)) throw ContractViolation("check_product: span is not well typed");
  const MorId legs[] = {w.left, w.right};
  return to_binary(check_limit_cone(View(cat), w.apex, legs));
}

UniversalityVerdict check_coproduct(const FinCat& cat, const CospanWitness& w, ObjId a,
                                    ObjId b) {
  if (!well_typed(cat, w, a, b)) {
    throw ContractViolation("check_coproduct: cospan is not well typed");
  }
  const MorId legs[] = {w.left, w.right};
  return to_binary(check_limit_cone(View(cat, true), w.nadir, legs));
}

std::vector<SpanWitness> find_products(const FinCat& cat, ObjId a, ObjId b) {
  return products_in(View(cat), a, b);
}

std::vector<CospanWitness> find_coproducts(const FinCat& cat, ObjId a, ObjId b) {
  std::vector<CospanWitness> out;
  for (const auto& s : products_in(View(cat, true), a, b)) out.push_back({s.apex, s.left, s.right});
  return out;
}

MorId mediate(const FinCat& cat, const SpanWitness& w, MorId f, MorId g) {
  return mediate_in(View(cat), w.apex, w.left, w.right, f, g);
}

MorId comediate(const FinCat& cat, const CospanWitness& w, MorId f, MorId g) {
  return mediate_in(View(cat, true), w.nadir, w.left, w.right, f, g);
}

Verdict universality_failure_verdict(const FinCat& cat, const std::string& clause,
                             const UniversalityCounterexample& ce) {
  const std::string x = cat.name(ce.test_object);
  if (ce.kind == UniversalityFailure::missing_mediator) {
    return Verdict::fail(clause,
                         "no mediator for (" + cat.name(ce.f) + ", " + cat.name(ce.g) + ") at " + x,
                         Counterexample{clause + ":missing-mediator", {ce.f, ce.g}, {}, {}});
  }
  return Verdict::fail(clause,
                       "two mediators " + cat.name(ce.h1) + ", " + cat.name(ce.h2) + " for (" +
                           cat.name(ce.f) + ", " + cat.name(ce.g) + ") at " + x,
                       Counterexample{clause + ":duplicate-mediator", {ce.f, ce.g, ce.h1, ce.h2},
                                      {}, {}});
}


}  // namespace biprod
