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

#include "biprod/fincat.hpp"

#include <algorithm>
#include <unordered_set>

#include "biprod/error.hpp"

namespace biprod {

namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

}  // namespace

FinCat::FinCat(std::vector<std::string> object_names, std::vector<MorphismDecl> morphisms,
               std::vector<MorId> identities, std::vector<MorId> composition)
    : object_names_(std::move(object_names)),
      morphisms_(std::move(morphisms)),
      identities_(std::move(identities)),
      composition_(std::move(composition)) {
  const std::size_t n = object_names_.size();
  const std::size_t m = morphisms_.size();
  if (identities_.size() != n) {
    throw IndexOutOfBounds("identity table has " + idx(identities_.size()) + " entries for " +
                           idx(n) + " objects");
  }
  if (composition_.size() != m * m) {
    throw IndexOutOfBounds("composition table has " + idx(composition_.size()) +
                           " entries, expected " + idx(m * m));
  }
  for (std::size_t i = 0; i < m; ++i) {
    const auto& d = morphisms_[i];
    if (d.dom.index >= n || d.cod.index >= n) {
      throw IndexOutOfBounds("morphism " + idx(i) + " has an endpoint outside the object list");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (identities_[i].index >= m) {
      throw IndexOutOfBounds("identity of object " + idx(i) + " is not a morphism index");
    }
  }
  for (std::size_t i = 0; i < composition_.size(); ++i) {
    if (composition_[i] != kNoMorphism && composition_[i].index >= m) {
      throw IndexOutOfBounds("composition entry (" + idx(i / m) + ", " + idx(i % m) +
                             ") is not a morphism index");
    }
  }

  objects_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) objects_.push_back(ObjId{static_cast<std::uint32_t>(i)});
  homs_.assign(n * n, {});
  hom_position_.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    auto& hom = homs_[morphisms_[i].dom.index * n + morphisms_[i].cod.index];
    hom_position_[i] = hom.size();
    hom.push_back(MorId{static_cast<std::uint32_t>(i)});
  }
}

MorId FinCat::compose_chain(std::span<const MorId> chain) const {
  if (chain.empty()) return kNoMorphism;
  MorId acc = chain.back();
  for (std::size_t k = chain.size() - 1; k-- > 0;) {
    acc = compose(chain[k], acc);
    if (acc == kNoMorphism) return kNoMorphism;
  }
  return acc;
}

std::optional<ObjId> FinCat::find_object(std::string_view name) const {
  for (std::size_t i = 0; i < object_names_.size(); ++i) {
    if (object_names_[i] == name) return ObjId{static_cast<std::uint32_t>(i)};
  }
  return std::nullopt;
}

std::optional<MorId> FinCat::find_morphism(std::string_view name) const {
  for (std::size_t i = 0; i < morphisms_.size(); ++i) {
    if (morphisms_[i].name == name) return MorId{static_cast<std::uint32_t>(i)};
  }
  return std::nullopt;
}

std::string describe(const FinCat& cat, MorId m) {
  if (m == kNoMorphism) return "<none>";
  return cat.name(m) + "(" + cat.name(cat.dom(m)) + " -> " + cat.name(cat.cod(m)) + ")";
}

bool replays(const FinCat& cat, const Counterexample& ce) {
  auto in_range = [&](MorId m) { return m.index < cat.morphism_count(); };
  if (!std::all_of(ce.involved.begin(), ce.involved.end(), in_range)) return false;
  if (!ce.is_equational()) return true;
  if (!std::all_of(ce.lhs.begin(), ce.lhs.end(), in_range) ||
      !std::all_of(ce.rhs.begin(), ce.rhs.end(), in_range)) {
    return false;
  }
  const MorId l = cat.compose_chain(ce.lhs);
  const MorId r = cat.compose_chain(ce.rhs);
  return l != kNoMorphism && r != kNoMorphism && l != r;
}

Verdict validate_category(const FinCat& cat) {
  for (ObjId a : cat.objects()) {
    const MorId id = cat.identity(a);
    if (cat.dom(id) != a || cat.cod(id) != a) {
      return Verdict::fail("identity-typing",
                           "identity of " + cat.name(a) + " is " + describe(cat, id),
                           Counterexample{"identity-typing", {id}, {}, {}});
    }
  }
  const std::size_t m = cat.morphism_count();
  for (std::uint32_t gi = 0; gi < m; ++gi) {
    for (std::uint32_t fi = 0; fi < m; ++fi) {
      const MorId g{gi}, f{fi};
      const MorId gf = cat.compose(g, f);
      const bool composable = cat.cod(f) == cat.dom(g);
      if (composable && gf == kNoMorphism) {
        return Verdict::fail("composition-total",
                             "no entry for " + cat.name(g) + " . " + cat.name(f),
                             Counterexample{"composition-total", {g, f}, {}, {}});
      }
      if (!composable && gf != kNoMorphism) {
        return Verdict::fail("composition-typing",
                             "entry for non-composable pair " + cat.name(g) + " . " + cat.name(f),
                             Counterexample{"composition-typing", {g, f}, {}, {}});
      }
      if (composable && (cat.dom(gf) != cat.dom(f) || cat.cod(gf) != cat.cod(g))) {
        return Verdict::fail("composition-typing",
                             cat.name(g) + " . " + cat.name(f) + " = " + describe(cat, gf) +
                                 " has the wrong type",
                             Counterexample{"composition-typing", {g, f, gf}, {}, {}});
      }
    }
  }
  for (std::uint32_t fi = 0; fi < m; ++fi) {
    const MorId f{fi};
    const MorId left_id = cat.identity(cat.cod(f));
    const MorId right_id = cat.identity(cat.dom(f));
    if (cat.compose(left_id, f) != f) {
      return Verdict::fail("left-unit", "id . " + cat.name(f) + " != " + cat.name(f),
                           Counterexample{"left-unit", {left_id, f}, {left_id, f}, {f}});
    }
    if (cat.compose(f, right_id) != f) {
      return Verdict::fail("right-unit", cat.name(f) + " . id != " + cat.name(f),
                           Counterexample{"right-unit", {f, right_id}, {f, right_id}, {f}});
    }
  }
  for (std::uint32_t hi = 0; hi < m; ++hi) {
    const MorId h{hi};
    for (std::uint32_t gi = 0; gi < m; ++gi) {
      const MorId g{gi};
      if (cat.cod(g) != cat.dom(h)) continue;
      const MorId hg = cat.compose(h, g);
      for (ObjId x : cat.objects()) {
        for (MorId f : cat.hom(x, cat.dom(g))) {
          const MorId gf = cat.compose(g, f);
          const MorId lhs = cat.compose(h, gf);
          const MorId rhs = cat.compose(hg, f);
          if (lhs != rhs) {
            return Verdict::fail(
                "associativity",
                cat.name(h) + " . (" + cat.name(g) + " . " + cat.name(f) + ") != (" +
                    cat.name(h) + " . " + cat.name(g) + ") . " + cat.name(f),
                Counterexample{"associativity", {h, g, f}, {h, gf}, {hg, f}});
          }
        }
      }
    }
  }
  return Verdict::ok();
}

FinCat opposite(const FinCat& cat) {
  const std::size_t m = cat.morphism_count();
  std::vector<MorphismDecl> mors;
  mors.reserve(m);
  for (const auto& d : cat.morphisms()) mors.push_back({d.name, d.cod, d.dom});
  std::vector<MorId> comp(m * m, kNoMorphism);
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t f = 0; f < m; ++f) {
      comp[g * m + f] = cat.composition_table()[f * m + g];
    }
  }
  return FinCat(cat.object_names(), std::move(mors), cat.identities(), std::move(comp));
}

FinCat coproduct_category(const FinCat& c, const FinCat& d) {
  const auto n0 = static_cast<std::uint32_t>(c.object_count());
  const auto m0 = static_cast<std::uint32_t>(c.morphism_count());
  const std::size_t m = c.morphism_count() + d.morphism_count();

  std::unordered_set<std::string> taken(c.object_names().begin(), c.object_names().end());
  for (const auto& decl : c.morphisms()) taken.insert(decl.name);
  auto fresh = [&](const std::string& name) {
    std::string out = name;
    while (taken.count(out)) out += "_r";
    taken.insert(out);
    return out;
  };

  std::vector<std::string> objects = c.object_names();
  for (const auto& name : d.object_names()) objects.push_back(fresh(name));
  std::vector<MorphismDecl> mors = c.morphisms();
  for (const auto& decl : d.morphisms()) {
    mors.push_back({fresh(decl.name), ObjId{decl.dom.index + n0}, ObjId{decl.cod.index + n0}});
  }
  std::vector<MorId> ids = c.identities();
  for (MorId id : d.identities()) ids.push_back(MorId{id.index + m0});

  std::vector<MorId> comp(m * m, kNoMorphism);
  for (std::size_t g = 0; g < c.morphism_count(); ++g) {
    for (std::size_t f = 0; f < c.morphism_count(); ++f) {
      comp[g * m + f] = c.composition_table()[g * c.morphism_count() + f];
    }
  }
  const std::size_t dm = d.morphism_count();
  for (std::size_t g = 0; g < dm; ++g) {
    for (std::size_t f = 0; f < dm; ++f) {
      const MorId r = d.composition_table()[g * dm + f];
      comp[(g + m0) * m + (f + m0)] = r == kNoMorphism ? kNoMorphism : MorId{r.index + m0};
    }
  }
  return FinCat(std::move(objects), std::move(mors), std::move(ids), std::move(comp));
}

MorphismClass classify_morphism(const View& view, MorId m) {
  MorphismClass out;
  out.constant = true;
  const ObjId a = view.dom(m);
  for (ObjId x : view.objects()) {
    const auto fs = view.hom(x, a);
    if (fs.size() < 2) continue;
    const MorId first = view.compose(m, fs.front());
    for (MorId f : fs.subspan(1)) {
      if (view.compose(m, f) != first) {
        out.constant = false;
        break;
      }
    }
    if (!out.constant) break;
  }
  out.coconstant = true;
  const ObjId b = view.cod(m);
  for (ObjId y : view.objects()) {
    const auto gs = view.hom(b, y);
    if (gs.size() < 2) continue;
    const MorId first = view.compose(gs.front(), m);
    for (MorId g : gs.subspan(1)) {
      if (view.compose(g, m) != first) {
        out.coconstant = false;
        break;
      }
    }
    if (!out.coconstant) break;
  }
  out.zero = out.constant && out.coconstant;
  return out;
}

MorphismClass classify_morphism(const FinCat& cat, MorId m) {
  return classify_morphism(View(cat), m);
}

std::vector<MorId> zero_morphisms(const FinCat& cat, ObjId a, ObjId b) {
  std::vector<MorId> out;
  for (MorId m : cat.hom(a, b)) {
    if (classify_morphism(cat, m).zero) out.push_back(m);
  }
  return out;
}

ZeroSearch find_zero_structure(const FinCat& cat) {
  const std::size_t n = cat.object_count();
  std::vector<MorId> table(n * n, kNoMorphism);
  std::optional<Verdict> missing;
  for (ObjId a : cat.objects()) {
    for (ObjId b : cat.objects()) {
      const auto zeros = zero_morphisms(cat, a, b);
      if (zeros.size() > 1) {
        throw InternalInconsistency("hom(" + cat.name(a) + ", " + cat.name(b) +
                                    ") holds two zero morphisms: " + cat.name(zeros[0]) +
                                    " and " + cat.name(zeros[1]));
      }
      if (zeros.empty()) {
        if (!missing) {
          missing = Verdict::fail("zero-morphism",
                                  "no zero morphism " + cat.name(a) + " -> " + cat.name(b));
          missing->detail += cat.hom(a, b).empty() ? " (homset is empty)" : "";
        }
        continue;
      }
      table[a.index * n + b.index] = zeros.front();
    }
  }
  if (missing) return {std::nullopt, *missing};
  return {ZeroStructure(n, std::move(table)), Verdict::ok()};
}

Verdict check_zero_structure(const FinCat& cat, const ZeroStructure& zs) {
  if (zs.object_count() != cat.object_count()) {
    return Verdict::fail("zero-structure-shape", "zero structure is sized for another category");
  }
  for (ObjId a : cat.objects()) {
    for (ObjId b : cat.objects()) {
      const MorId z = zs.zero_of(a, b);
      if (z == kNoMorphism || z.index >= cat.morphism_count() || cat.dom(z) != a ||
          cat.cod(z) != b) {
        return Verdict::fail("zero-structure-typing",
                             "zero of (" + cat.name(a) + ", " + cat.name(b) + ") is mistyped");
      }
    }
  }
  for (ObjId a : cat.objects()) {
    for (ObjId b : cat.objects()) {
      const MorId z = zs.zero_of(a, b);
      for (ObjId a2 : cat.objects()) {
        for (MorId f : cat.hom(a2, a)) {
          const MorId zf = cat.compose(z, f);
          for (ObjId b2 : cat.objects()) {
            const MorId target = zs.zero_of(a2, b2);
            for (MorId g : cat.hom(b, b2)) {
              if (cat.compose(g, zf) != target) {
                return Verdict::fail(
                    "absorbing-law",
                    cat.name(g) + " . " + cat.name(z) + " . " + cat.name(f) + " != " +
                        cat.name(target),
                    Counterexample{"absorbing-law", {g, z, f}, {g, z, f}, {target}});
              }
            }
          }
        }
      }
    }
  }
  return Verdict::ok();
}

}  // namespace biprod
