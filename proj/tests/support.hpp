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

#include <string>
#include <vector>

#include "biprod/dsl.hpp"
#include "biprod/fincat.hpp"
#include "biprod/gallery.hpp"

namespace biprod::testing {

inline FinCat gallery_category(const std::string& name) {
  return gallery::gallery_entry(name)->category;
}

inline FinCat from_text(const std::string& text) { return dsl::parse(text).category; }

inline ObjId obj(const FinCat& cat, const std::string& name) { return *cat.find_object(name); }
inline MorId mor(const FinCat& cat, const std::string& name) { return *cat.find_morphism(name); }

/// Catalog entries small enough for exhaustive loops in unit tests.
inline std::vector<std::string> small_gallery() {
  return {"terminal",     "walking-arrow", "discrete-2", "chain-3",        "diamond",
          "indiscrete-2", "indiscrete-3",  "finset-2",   "preorder-mixed", "pointed-3",
          "ab-trivial-2", "ab-small",      "ab-coprime", "semigroups",     "con"};
}

/// h . (g . f) and (h . g) . f differ: x != y.
inline const char* kNonAssociative = R"(
category broken {
  objects: A, B, C, D;
  morphisms:
    iA: A -> A, iB: B -> B, iC: C -> C, iD: D -> D,
    f: A -> B, g: B -> C, h: C -> D,
    gf: A -> C, hg: B -> D, x: A -> D, y: A -> D;
  id A = iA; id B = iB; id C = iC; id D = iD;
  g . f = gf;
  h . g = hg;
  h . gf = x;
  hg . f = y;
}
)";

}  // namespace biprod::testing
