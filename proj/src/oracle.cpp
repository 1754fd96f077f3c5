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

#include "biprod/oracle.hpp"

namespace biprod::oracle {

bool is_product(const FinCat& cat, ObjId apex, MorId left, MorId right) {
  const ObjId a = cat.cod(left);
  const ObjId b = cat.cod(right);
  for (ObjId x : cat.objects()) {
    for (MorId f : cat.hom(x, a)) {
      for (MorId g : cat.hom(x, b)) {
        int mediators = 0;
        for (MorId h : cat.hom(x, apex)) {
          if (cat.compose(left, h) == f && cat.compose(right, h) == g) ++mediators;
        }
        if (mediators != 1) return false;
      }
    }
  }
  return true;
}

bool is_coproduct(const FinCat& cat, ObjId nadir, MorId left, MorId right) {
  const ObjId a = cat.dom(left);
  const ObjId b = cat.dom(right);
  for (ObjId y : cat.objects()) {
    for (MorId f : cat.hom(a, y)) {
      for (MorId g : cat.hom(b, y)) {
        int mediators = 0;
        for (MorId h : cat.hom(nadir, y)) {
          if (cat.compose(h, left) == f && cat.compose(h, right) == g) ++mediators;
        }
        if (mediators != 1) return false;
      }
    }
  }
  return true;
}

std::vector<BiproductWitness> all_biproducts(const FinCat& cat, ObjId a, ObjId b) {
  std::vector<BiproductWitness> out;
  for (ObjId c : cat.objects()) {
    for (MorId p_a : cat.hom(c, a)) {
      for (MorId p_b : cat.hom(c, b)) {
        for (MorId i_a : cat.hom(a, c)) {
          for (MorId i_b : cat.hom(b, c)) {
            if (cat.compose(p_a, i_a) != cat.identity(a)) continue;
            if (cat.compose(p_b, i_b) != cat.identity(b)) continue;
            const MorId lhs = cat.compose(i_a, cat.compose(p_a, cat.compose(i_b, p_b)));
            const MorId rhs = cat.compose(i_b, cat.compose(p_b, cat.compose(i_a, p_a)));
            if (lhs != rhs) continue;
            if (!is_product(cat, c, p_a, p_b)) continue;
            if (!is_coproduct(cat, c, i_a, i_b)) continue;
            out.push_back({c, p_a, p_b, i_a, i_b});
          }
        }
      }
    }
  }
  return out;
}

}  // namespace biprod::oracle
