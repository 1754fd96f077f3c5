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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "biprod/ids.hpp"
#include "biprod/verdict.hpp"

namespace biprod {

struct MorphismDecl {
  std::string name;
  ObjId dom;
  ObjId cod;
  friend bool operator==(const MorphismDecl&, const MorphismDecl&) = default;
};

/// A finite category given by an explicit multiplication table.
///
/// Morphism equality is identity of MorId. The composition table is dense
/// and row-major: `composition[g * n + f]` holds g∘f, or kNoMorphism when
/// cod(f) != dom(g). Construction only checks that every index is in range
/// (throwing IndexOutOfBounds); the category axioms are checked by
/// validate_category.
class FinCat {
 public:
  FinCat() = default;
  FinCat(std::vector<std::string> object_names, std::vector<MorphismDecl> morphisms,
         std::vector<MorId> identities, std::vector<MorId> composition);

  std::size_t object_count() const { return object_names_.size(); }
  std::size_t morphism_count() const { return morphisms_.size(); }

  const std::vector<ObjId>& objects() const { return objects_; }

  const std::string& name(ObjId o) const { return object_names_[o.index]; }
  const std::string& name(MorId m) const { return morphisms_[m.index].name; }
  ObjId dom(MorId m) const { return morphisms_[m.index].dom; }
  ObjId cod(MorId m) const { return morphisms_[m.index].cod; }
  MorId identity(ObjId o) const { return identities_[o.index]; }
  bool is_identity(MorId m) const { return identity(dom(m)) == m; }

  /// g∘f, or kNoMorphism when the pair is not composable.
  MorId compose(MorId g, MorId f) const {
    return composition_[static_cast<std::size_t>(g.index) * morphisms_.size() + f.index];
  }
  /// chain[0]∘chain[1]∘...; kNoMorphism if some step is not composable.
  MorId compose_chain(std::span<const MorId> chain) const;

  /// Morphisms a→b in increasing MorId order.
  std::span<const MorId> hom(ObjId a, ObjId b) const {
    return homs_[static_cast<std::size_t>(a.index) * object_count() + b.index];
  }
  /// Position of m inside hom(dom m, cod m).
  std::size_t hom_position(MorId m) const { return hom_position_[m.index]; }

  std::optional<ObjId> find_object(std::string_view name) const;
  std::optional<MorId> find_morphism(std::string_view name) const;

  const std::vector<std::string>& object_names() const { return object_names_; }
  const std::vector<MorphismDecl>& morphisms() const { return morphisms_; }
  const std::vector<MorId>& identities() const { return identities_; }
  const std::vector<MorId>& composition_table() const { return composition_; }

  friend bool operator==(const FinCat& a, const FinCat& b) {
    return a.object_names_ == b.object_names_ && a.morphisms_ == b.morphisms_ &&
           a.identities_ == b.identities_ && a.composition_ == b.composition_;
  }

 private:
  std::vector<std::string> object_names_;
  std::vector<MorphismDecl> morphisms_;
  std::vector<MorId> identities_;
  std::vector<MorId> composition_;

  std::vector<ObjId> objects_;
  std::vector<std::vector<MorId>> homs_;
  std::vector<std::size_t> hom_position_;
};

/// Read-only access to a FinCat or to its opposite without materializing
/// C^op. Used by the dual checks so that "coproduct" literally runs the
/// product algorithm on the opposite category.
class View {
 public:
  explicit View(const FinCat& cat, bool opposite = false) : cat_(&cat), op_(opposite) {}

  const FinCat& base() const { return *cat_; }
  bool is_opposite() const { return op_; }
  View dual() const { return View(*cat_, !op_); }

  const std::vector<ObjId>& objects() const { return cat_->objects(); }
  ObjId dom(MorId m) const { return op_ ? cat_->cod(m) : cat_->dom(m); }
  ObjId cod(MorId m) const { return op_ ? cat_->dom(m) : cat_->cod(m); }
  MorId identity(ObjId o) const { return cat_->identity(o); }
  MorId compose(MorId g, MorId f) const { return op_ ? cat_->compose(f, g) : cat_->compose(g, f); }
  std::span<const MorId> hom(ObjId a, ObjId b) const {
    return op_ ? cat_->hom(b, a) : cat_->hom(a, b);
  }
  std::size_t hom_position(MorId m) const { return cat_->hom_position(m); }

 private:
  const FinCat* cat_;
  bool op_;
};

/// Checks identity typing, composition typing/totality, unit laws and
/// associativity, in that order. Reports the first violation.
Verdict validate_category(const FinCat& cat);

/// C^op: same objects and morphisms, dom/cod swapped, composition reversed.
FinCat opposite(const FinCat& cat);

/// Disjoint union C ⊔ D. Objects and morphisms of `c` keep their indices;
/// those of `d` follow. Names from `d` that collide with names in `c` get a
/// `_r` suffix.
FinCat coproduct_category(const FinCat& c, const FinCat& d);

struct MorphismClass {
  bool constant = false;
  bool coconstant = false;
  bool zero = false;
  friend bool operator==(const MorphismClass&, const MorphismClass&) = default;
};

/// Constant: m∘f = m∘g for every parallel pair f,g into dom(m).
/// Coconstant: f∘m = g∘m for every parallel pair out of cod(m).
MorphismClass classify_morphism(const FinCat& cat, MorId m);
MorphismClass classify_morphism(const View& view, MorId m);

/// A choice of zero morphism for every ordered pair of objects.
class ZeroStructure {
 public:
  ZeroStructure(std::size_t object_count, std::vector<MorId> table)
      : n_(object_count), table_(std::move(table)) {}

  MorId zero_of(ObjId a, ObjId b) const { return table_[a.index * n_ + b.index]; }
  std::size_t object_count() const { return n_; }

  friend bool operator==(const ZeroStructure&, const ZeroStructure&) = default;

 private:
  std::size_t n_;
  std::vector<MorId> table_;
};

struct ZeroSearch {
  std::optional<ZeroStructure> structure;
  Verdict verdict;
};

/// Searches every homset for a zero morphism. A negative verdict names the
/// first pair (A,B) without one. Throws InternalInconsistency if some homset
/// holds two zero morphisms.
ZeroSearch find_zero_structure(const FinCat& cat);

/// Exhaustively checks the absorbing law g∘0(A,B)∘f = 0(A',B') over every
/// f: A'→A and g: B→B'.
Verdict check_zero_structure(const FinCat& cat, const ZeroStructure& zs);

/// Every zero morphism in hom(a,b), in MorId order.
std::vector<MorId> zero_morphisms(const FinCat& cat, ObjId a, ObjId b);

/// "name(dom -> cod)" for diagnostics.
std::string describe(const FinCat& cat, MorId m);

}  // namespace biprod
