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

#include <vector>

#include "biprod/biproduct.hpp"
#include "biprod/fincat.hpp"

namespace biprod::oracle {

/// Tests every well-typed 5-tuple over (a,b) directly against the
/// definition, by naive quantification over cones. Shares no code with the
/// search in biproduct.cpp or universal.cpp; output order is
/// (carrier, p_a, p_b, i_a, i_b) lexicographic.
std::vector<BiproductWitness> all_biproducts(const FinCat& cat, ObjId a, ObjId b);

/// Naive product check: for each X, f, g count h by scanning hom(X, apex).
bool is_product(const FinCat& cat, ObjId apex, MorId left, MorId right);
/// Naive coproduct check, written out directly rather than via duality.
bool is_coproduct(const FinCat& cat, ObjId nadir, MorId left, MorId right);

}  // namespace biprod::oracle
