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

#include "biprod/gallery.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "biprod/error.hpp"
#include "concrete.hpp"

namespace biprod::gallery {

using detail::all_functions;
using detail::ConcreteBuilder;

namespace {

// |cod|^|dom| with saturation, for resource guards before enumeration.
std::size_t function_count(std::size_t dom_size, std::size_t cod_size) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < dom_size; ++i) {
    total *= cod_size;
    if (total > (std::size_t{1} << 32)) return total;
  }
  return total;
}

void guard_enumeration(std::size_t dom_size, std::size_t cod_size, std::size_t limit) {
  if (function_count(dom_size, cod_size) > limit * 1000) {
    throw ResourceLimit("enumerating " + std::to_string(cod_size) + "^" +
                        std::to_string(dom_size) + " candidate functions exceeds the guard");
  }
}

}  // namespace

// ---------------------------------------------------------------- preorders

PreorderSpec chain(std::size_t n) {
  PreorderSpec s;
  for (std::size_t i = 0; i < n; ++i) {
    s.elements.push_back(std::to_string(i));
    for (std::size_t j = i; j < n; ++j) s.relation.emplace_back(i, j);
  }
  return s;
}

PreorderSpec discrete(std::size_t n) {
  PreorderSpec s;
  for (std::size_t i = 0; i < n; ++i) {
    s.elements.push_back(std::string(1, static_cast<char>('A' + i % 26)) +
                         (i >= 26 ? std::to_string(i / 26) : ""));
    s.relation.emplace_back(i, i);
  }
  return s;
}

PreorderSpec indiscrete(std::size_t n) {
  PreorderSpec s = discrete(n);
  s.relation.clear();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) s.relation.emplace_back(i, j);
  }
  return s;
}

PreorderSpec diamond() {
  PreorderSpec s;
  s.elements = {"bot", "a", "b", "top"};
  s.relation = {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {0, 1}, {0, 2},
                {0, 3}, {1, 3}, {2, 3}};
  return s;
}

FinCat build_preorder(const PreorderSpec& spec) {
  const std::size_t n = spec.elements.size();
  std::vector<char> le(n * n, 0);
  for (auto [x, y] : spec.relation) {
    if (x >= n || y >= n) throw InvalidStructure("preorder relation mentions an unknown element");
    le[x * n + y] = 1;
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!le[x * n + x]) {
      throw InvalidStructure("preorder is not reflexive at " + spec.elements[x]);
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!le[x * n + y]) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (le[y * n + z] && !le[x * n + z]) {
          throw InvalidStructure("preorder is not transitive: " + spec.elements[x] + " <= " +
                                 spec.elements[y] + " <= " + spec.elements[z]);
        }
      }
    }
  }

  std::vector<MorphismDecl> mors;
  std::vector<std::uint32_t> id_of(n * n, 0);
  std::vector<MorId> identities(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!le[x * n + y]) continue;
      id_of[x * n + y] = static_cast<std::uint32_t>(mors.size());
      if (x == y) identities[x] = MorId{static_cast<std::uint32_t>(mors.size())};
      std::string name =
          x == y ? "id_" + spec.elements[x] : spec.elements[x] + "_" + spec.elements[y];
      mors.push_back({std::move(name), ObjId{static_cast<std::uint32_t>(x)},
                      ObjId{static_cast<std::uint32_t>(y)}});
    }
  }
  const std::size_t m = mors.size();
  std::vector<MorId> comp(m * m, kNoMorphism);
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t f = 0; f < m; ++f) {
      if (mors[f].cod != mors[g].dom) continue;
      comp[g * m + f] = MorId{id_of[mors[f].dom.index * n + mors[g].cod.index]};
    }
  }
  return FinCat(spec.elements, std::move(mors), std::move(identities), std::move(comp));
}

// -------------------------------------------------------------------- sets

FinCat build_finset(const std::vector<std::size_t>& sizes, std::size_t morphism_limit) {
  if (std::set<std::size_t>(sizes.begin(), sizes.end()).size() != sizes.size()) {
    throw InvalidStructure("finite set sizes must be distinct");
  }
  ConcreteBuilder builder(morphism_limit);
  std::vector<ObjId> objs;
  for (std::size_t k : sizes) objs.push_back(builder.add_object(std::to_string(k), k));
  for (ObjId a : objs) {
    for (ObjId b : objs) {
      guard_enumeration(builder.carrier_size(a), builder.carrier_size(b), morphism_limit);
      for (auto& f : all_functions(builder.carrier_size(a), builder.carrier_size(b))) {
        builder.add_morphism(a, b, std::move(f));
      }
    }
  }
  return builder.build();
}

FinCat build_finset_skeleton(std::size_t max_size, std::size_t morphism_limit) {
  std::vector<std::size_t> sizes(max_size + 1);
  std::iota(sizes.begin(), sizes.end(), std::size_t{0});
  return build_finset(sizes, morphism_limit);
}

FinCat build_pointed_sets(std::size_t max_size, std::size_t morphism_limit) {
  ConcreteBuilder builder(morphism_limit);
  std::vector<ObjId> objs;
  for (std::size_t k = 1; k <= max_size; ++k) {
    objs.push_back(builder.add_object("P" + std::to_string(k), k));
  }
  for (ObjId a : objs) {
    for (ObjId b : objs) {
      const std::size_t m = builder.carrier_size(a);
      const std::size_t n = builder.carrier_size(b);
      guard_enumeration(m - 1, n, morphism_limit);
      for (auto& rest : all_functions(m - 1, n)) {
        ConcreteBuilder::Images f{0};
        f.insert(f.end(), rest.begin(), rest.end());
        builder.add_morphism(a, b, std::move(f));
      }
    }
  }
  return builder.build();
}

// ---------------------------------------------------------- abelian groups

namespace {

struct FiniteAbelianGroup {
  std::vector<std::uint32_t> orders;
  std::size_t size = 1;

  explicit FiniteAbelianGroup(std::vector<std::uint32_t> o) : orders(std::move(o)) {
    for (auto n : orders) {
      if (n < 1) throw InvalidStructure("cyclic factor of order 0");
      size *= n;
    }
  }
  std::vector<std::uint32_t> coords(std::size_t e) const {
    std::vector<std::uint32_t> c(orders.size());
    for (std::size_t j = orders.size(); j-- > 0;) {
      c[j] = static_cast<std::uint32_t>(e % orders[j]);
      e /= orders[j];
    }
    return c;
  }
  std::uint32_t index(const std::vector<std::uint32_t>& c) const {
    std::size_t e = 0;
    for (std::size_t j = 0; j < orders.size(); ++j) e = e * orders[j] + c[j] % orders[j];
    return static_cast<std::uint32_t>(e);
  }
  std::uint32_t add(std::uint32_t x, std::uint32_t y) const {
    auto cx = coords(x), cy = coords(y);
    for (std::size_t j = 0; j < cx.size(); ++j) cx[j] += cy[j];
    return index(cx);
  }
  std::uint32_t times(std::uint64_t k, std::uint32_t x) const {
    auto c = coords(x);
    for (std::size_t j = 0; j < c.size(); ++j) {
      c[j] = static_cast<std::uint32_t>((k % orders[j]) * c[j] % orders[j]);
    }
    return index(c);
  }
};

}  // namespace

AbGroupSpec ab_group(std::vector<std::uint32_t> cyclic_orders) {
  AbGroupSpec spec;
  if (cyclic_orders.empty()) {
    spec.name = "Z1";
  } else {
    for (auto n : cyclic_orders) spec.name += (spec.name.empty() ? "Z" : "xZ") + std::to_string(n);
  }
  spec.cyclic_orders = std::move(cyclic_orders);
  return spec;
}

AbFragment build_ab_fragment(const AbFragmentSpec& spec, std::size_t morphism_limit) {
  ConcreteBuilder builder(morphism_limit);
  std::vector<FiniteAbelianGroup> groups;
  std::vector<ObjId> objs;
  for (const auto& g : spec.groups) {
    groups.emplace_back(g.cyclic_orders);
    objs.push_back(builder.add_object(g.name, groups.back().size));
  }
  for (std::size_t s = 0; s < groups.size(); ++s) {
    for (std::size_t t = 0; t < groups.size(); ++t) {
      const auto& src = groups[s];
      const auto& dst = groups[t];
      // Admissible images for each standard generator: elements killed by
      // the generator's order.
      std::vector<std::vector<std::uint32_t>> choices(src.orders.size());
      std::size_t total = 1;
      for (std::size_t j = 0; j < src.orders.size(); ++j) {
        for (std::uint32_t y = 0; y < dst.size; ++y) {
          if (dst.times(src.orders[j], y) == 0) choices[j].push_back(y);
        }
        total *= choices[j].size();
        if (total > morphism_limit) {
          throw ResourceLimit("hom(" + spec.groups[s].name + ", " + spec.groups[t].name +
                              ") exceeds the morphism limit");
        }
      }
      std::vector<std::size_t> pick(src.orders.size(), 0);
      for (std::size_t n = 0; n < total; ++n) {
        std::size_t rest = n;
        for (std::size_t j = src.orders.size(); j-- > 0;) {
          pick[j] = rest % choices[j].size();
          rest /= choices[j].size();
        }
        ConcreteBuilder::Images images(src.size);
        for (std::uint32_t x = 0; x < src.size; ++x) {
          const auto c = src.coords(x);
          std::uint32_t y = 0;
          for (std::size_t j = 0; j < c.size(); ++j) {
            y = dst.add(y, dst.times(c[j], choices[j][pick[j]]));
          }
          images[x] = y;
        }
        for (std::uint32_t x = 0; x < src.size; ++x) {
          for (std::uint32_t x2 = 0; x2 < src.size; ++x2) {
            if (images[src.add(x, x2)] != dst.add(images[x], images[x2])) {
              throw InternalInconsistency("generated map is not a homomorphism");
            }
          }
        }
        builder.add_morphism(objs[s], objs[t], std::move(images));
      }
    }
  }
  FinCat cat = builder.build();
  CMonStructure cm(cat);
  for (std::size_t s = 0; s < groups.size(); ++s) {
    for (std::size_t t = 0; t < groups.size(); ++t) {
      const ObjId a = objs[s], b = objs[t];
      const auto hom = cat.hom(a, b);
      auto& mon = cm.monoid(a, b);
      mon.zero = *builder.lookup(a, b, ConcreteBuilder::Images(groups[s].size, 0));
      const std::size_t k = hom.size();
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          const auto& f = builder.images(hom[i]);
          const auto& g = builder.images(hom[j]);
          ConcreteBuilder::Images sum(f.size());
          for (std::size_t x = 0; x < f.size(); ++x) sum[x] = groups[t].add(f[x], g[x]);
          mon.sum[i * k + j] = *builder.lookup(a, b, sum);
        }
      }
    }
  }
  return {std::move(cat), std::move(cm)};
}

// ------------------------------------------------- commutative inverse semigroups

void validate(const InverseSemigroupSpec& s) {
  const std::size_t n = s.size;
  if (s.table.size() != n * n) throw InvalidStructure(s.name + ": table has the wrong size");
  auto mul = [&](std::size_t x, std::size_t y) { return s.table[x * n + y]; };
  for (std::size_t v : s.table) {
    if (v >= n) throw InvalidStructure(s.name + ": table is not closed");
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (mul(x, y) != mul(y, x)) throw InvalidStructure(s.name + ": not commutative");
      for (std::size_t z = 0; z < n; ++z) {
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
          throw InvalidStructure(s.name + ": not associative");
        }
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t inverses = 0;
    for (std::size_t y = 0; y < n; ++y) {
      if (mul(mul(x, y), x) == x && mul(mul(y, x), y) == y) ++inverses;
    }
    if (inverses != 1) {
      throw InvalidStructure(s.name + ": element " + std::to_string(x) + " has " +
                             std::to_string(inverses) + " inverses");
    }
  }
}

std::optional<std::size_t> neutral_element(const InverseSemigroupSpec& s) {
  for (std::size_t e = 0; e < s.size; ++e) {
    bool neutral = true;
    for (std::size_t x = 0; x < s.size && neutral; ++x) neutral = s.table[e * s.size + x] == x;
    if (neutral) return e;
  }
  return std::nullopt;
}

InverseSemigroupSpec cyclic_group_semigroup(std::uint32_t n) {
  InverseSemigroupSpec s{"Z" + std::to_string(n), n, std::vector<std::size_t>(n * n)};
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) s.table[x * n + y] = (x + y) % n;
  }
  return s;
}

InverseSemigroupSpec flat_semilattice(std::size_t atoms) {
  const std::size_t n = atoms + 1;
  InverseSemigroupSpec s{"L" + std::to_string(n), n, std::vector<std::size_t>(n * n, 0)};
  for (std::size_t x = 1; x < n; ++x) s.table[x * n + x] = x;
  return s;
}

InverseSemigroupSpec direct_product(const InverseSemigroupSpec& s, const InverseSemigroupSpec& t) {
  const std::size_t n = s.size * t.size;
  InverseSemigroupSpec p{s.name + "x" + t.name, n, std::vector<std::size_t>(n * n)};
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t a = s.table[(x / t.size) * s.size + y / t.size];
      const std::size_t b = t.table[(x % t.size) * t.size + y % t.size];
      p.table[x * n + y] = a * t.size + b;
    }
  }
  return p;
}

bool isomorphic(const InverseSemigroupSpec& s, const InverseSemigroupSpec& t) {
  if (s.size != t.size) return false;
  std::vector<std::size_t> perm(s.size);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t x = 0; x < s.size && ok; ++x) {
      for (std::size_t y = 0; y < s.size && ok; ++y) {
        ok = perm[s.table[x * s.size + y]] == t.table[perm[x] * t.size + perm[y]];
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

FinCat build_inverse_semigroup_category(const std::vector<InverseSemigroupSpec>& specs,
                                        std::size_t morphism_limit) {
  ConcreteBuilder builder(morphism_limit);
  std::vector<ObjId> objs;
  std::vector<std::optional<std::size_t>> units;
  for (const auto& s : specs) {
    validate(s);
    objs.push_back(builder.add_object(s.name, s.size));
    units.push_back(neutral_element(s));
  }
  for (std::size_t si = 0; si < specs.size(); ++si) {
    for (std::size_t ti = 0; ti < specs.size(); ++ti) {
      const auto& s = specs[si];
      const auto& t = specs[ti];
      if (units[si] && !units[ti]) continue;
      guard_enumeration(s.size, t.size, morphism_limit);
      for (auto& f : all_functions(s.size, t.size)) {
        if (units[si] && f[*units[si]] != *units[ti]) continue;
        bool multiplicative = true;
        for (std::size_t x = 0; x < s.size && multiplicative; ++x) {
          for (std::size_t y = 0; y < s.size && multiplicative; ++y) {
            multiplicative = f[s.table[x * s.size + y]] == t.table[f[x] * t.size + f[y]];
          }
        }
        if (multiplicative) builder.add_morphism(objs[si], objs[ti], std::move(f));
      }
    }
  }
  return builder.build();
}

// ------------------------------------------------------- contractive systems

void validate(const ContractiveSystemSpec& s) {
  const std::size_t n = s.size;
  if (s.distance.size() != n * n || s.endo.size() != n) {
    throw InvalidStructure(s.name + ": tables have the wrong size");
  }
  auto d = [&](std::size_t x, std::size_t y) { return s.distance[x * n + y]; };
  for (const auto& r : s.distance) {
    if (r.den <= 0 || r.num < 0) throw InvalidStructure(s.name + ": distances must be >= 0");
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (s.endo[x] >= n) throw InvalidStructure(s.name + ": endomorphism leaves the space");
    if (!(d(x, x) == Rational{0, 1})) throw InvalidStructure(s.name + ": nonzero diagonal");
    for (std::size_t y = 0; y < n; ++y) {
      if (!(d(x, y) == d(y, x))) throw InvalidStructure(s.name + ": distance is not symmetric");
      if (x != y && d(x, y) <= Rational{0, 1}) {
        throw InvalidStructure(s.name + ": distinct points at distance 0");
      }
      for (std::size_t z = 0; z < n; ++z) {
        const Rational lhs = d(x, z);
        const Rational a = d(x, y), b = d(y, z);
        const Rational rhs{a.num * b.den + b.num * a.den, a.den * b.den};
        if (rhs < lhs) throw InvalidStructure(s.name + ": triangle inequality fails");
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && !(d(s.endo[x], s.endo[y]) < d(x, y))) {
        throw InvalidStructure(s.name + ": endomorphism is not a contraction");
      }
    }
  }
}

std::vector<std::size_t> fixed_points(const ContractiveSystemSpec& s) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < s.size; ++x) {
    if (s.endo[x] == x) out.push_back(x);
  }
  return out;
}

ContractiveSystemSpec terminal_system() { return {"!", 1, {Rational{0, 1}}, {0}}; }

ContractiveSystemSpec line_system(std::string name, std::vector<std::int64_t> positions,
                                  std::vector<std::size_t> endo) {
  const std::size_t n = positions.size();
  ContractiveSystemSpec s{std::move(name), n, std::vector<Rational>(n * n), std::move(endo)};
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::int64_t diff = positions[x] - positions[y];
      s.distance[x * n + y] = Rational{diff < 0 ? -diff : diff, 1};
    }
  }
  return s;
}

FinCat build_con_fragment(const std::vector<ContractiveSystemSpec>& specs,
                          std::size_t morphism_limit) {
  std::vector<ContractiveSystemSpec> systems = specs;
  const bool has_terminal = std::any_of(systems.begin(), systems.end(), [](const auto& s) {
    return s.name == "!" && s.size == 1;
  });
  if (!has_terminal) systems.push_back(terminal_system());

  ConcreteBuilder builder(morphism_limit);
  std::vector<ObjId> objs;
  for (const auto& s : systems) {
    validate(s);
    objs.push_back(builder.add_object(s.name, s.size));
  }
  for (std::size_t si = 0; si < systems.size(); ++si) {
    for (std::size_t ti = 0; ti < systems.size(); ++ti) {
      const auto& s = systems[si];
      const auto& t = systems[ti];
      guard_enumeration(s.size, t.size, morphism_limit);
      for (auto& h : all_functions(s.size, t.size)) {
        bool ok = true;
        for (std::size_t x = 0; x < s.size && ok; ++x) {
          ok = h[s.endo[x]] == t.endo[h[x]];
          for (std::size_t y = 0; y < s.size && ok; ++y) {
            ok = t.distance[h[x] * t.size + h[y]] <= s.distance[x * s.size + y];
          }
        }
        if (ok) builder.add_morphism(objs[si], objs[ti], std::move(h));
      }
    }
  }
  return builder.build();
}

// ------------------------------------------------------------------ random

FinCat build_random_category(std::uint64_t seed, const RandomBounds& bounds) {
  std::mt19937_64 rng(seed);
  auto below = [&](std::size_t n) { return n == 0 ? std::size_t{0} : rng() % n; };
  for (std::size_t attempt = 0; attempt < bounds.max_attempts; ++attempt) {
    ConcreteBuilder builder(bounds.max_morphisms);
    try {
      const std::size_t k = 1 + below(std::max<std::size_t>(bounds.max_objects, 1));
      std::vector<ObjId> objs;
      for (std::size_t i = 0; i < k; ++i) {
        const std::size_t size = below(bounds.max_carrier + 1);
        objs.push_back(builder.add_object("X" + std::to_string(i), size));
        ConcreteBuilder::Images id(size);
        std::iota(id.begin(), id.end(), 0u);
        builder.add_morphism(objs.back(), objs.back(), std::move(id));
      }
      const std::size_t gens = below(bounds.max_generators + 1);
      for (std::size_t i = 0; i < gens; ++i) {
        const ObjId a = objs[below(k)];
        const ObjId b = objs[below(k)];
        const std::size_t m = builder.carrier_size(a), n = builder.carrier_size(b);
        if (m > 0 && n == 0) continue;
        ConcreteBuilder::Images f(m);
        for (auto& v : f) v = static_cast<std::uint32_t>(below(n));
        builder.add_morphism(a, b, std::move(f));
      }
      builder.close_under_composition();
      return builder.build();
    } catch (const ResourceLimit&) {
      continue;
    }
  }
  throw ResourceLimit("no random category within bounds after " +
                      std::to_string(bounds.max_attempts) + " attempts (seed " +
                      std::to_string(seed) + ")");
}

// ----------------------------------------------------------------- catalog

namespace {

std::vector<PairExpectation> all_pairs(const FinCat& cat,
                                       const std::function<bool(ObjId, ObjId)>& expected) {
  std::vector<PairExpectation> out;
  for (ObjId a : cat.objects()) {
    for (ObjId b : cat.objects()) out.push_back({a, b, expected(a, b)});
  }
  return out;
}

GalleryEntry preorder_entry(std::string name, const PreorderSpec& spec) {
  GalleryEntry e{std::move(name), build_preorder(spec), std::nullopt, {}, false, std::nullopt};
  const auto& cat = e.category;
  auto iso = [&](ObjId a, ObjId b) { return !cat.hom(a, b).empty() && !cat.hom(b, a).empty(); };
  e.expectations = all_pairs(cat, iso);
  bool all_iso = true;
  for (ObjId a : cat.objects()) {
    for (ObjId b : cat.objects()) all_iso = all_iso && iso(a, b);
  }
  e.closed_under_biproducts = all_iso;
  e.has_zero_structure = all_iso;
  return e;
}

GalleryEntry ab_entry(std::string name, std::vector<std::vector<std::uint32_t>> groups,
                      bool closed) {
  AbFragmentSpec spec;
  for (auto& g : groups) spec.groups.push_back(ab_group(g));
  // Disambiguate repeated groups.
  for (std::size_t i = 0; i < spec.groups.size(); ++i) {
    std::size_t copies = 0;
    for (std::size_t j = 0; j < i; ++j) copies += spec.groups[j].cyclic_orders == spec.groups[i].cyclic_orders;
    if (copies) spec.groups[i].name += std::string(copies, 'b');
  }
  AbFragment frag = build_ab_fragment(spec);
  GalleryEntry e{std::move(name), std::move(frag.category), std::move(frag.cmon), {}, closed, true};
  // A ⊕ B is present iff some listed group has the concatenated cyclic
  // decomposition (the catalog only uses elementary 2-groups and coprime
  // singletons, where this is the isomorphism test).
  const auto& gs = spec.groups;
  auto sorted_orders = [&](std::size_t i) {
    auto o = gs[i].cyclic_orders;
    std::sort(o.begin(), o.end());
    return o;
  };
  e.expectations = all_pairs(e.category, [&](ObjId a, ObjId b) {
    auto want = sorted_orders(a.index);
    auto more = sorted_orders(b.index);
    want.insert(want.end(), more.begin(), more.end());
    std::sort(want.begin(), want.end());
    for (std::size_t i = 0; i < gs.size(); ++i) {
      if (sorted_orders(i) == want) return true;
    }
    return false;
  });
  return e;
}

}  // namespace

std::vector<std::string> gallery_names() {
  return {"terminal",     "walking-arrow", "discrete-2",  "chain-3",    "diamond",
          "indiscrete-2", "indiscrete-3",  "preorder-mixed", "finset-2", "finset-3",
          "pointed-3",    "ab-trivial",    "ab-trivial-2", "ab-small",  "ab-coprime",
          "ab-cube",      "ab-set",        "semigroups",  "con"};
}

std::optional<GalleryEntry> gallery_entry(const std::string& name) {
  if (name == "terminal") {
    PreorderSpec s{{"*"}, {{0, 0}}};
    return preorder_entry(name, s);
  }
  if (name == "walking-arrow") return preorder_entry(name, chain(2));
  if (name == "discrete-2") return preorder_entry(name, discrete(2));
  if (name == "chain-3") return preorder_entry(name, chain(3));
  if (name == "diamond") return preorder_entry(name, diamond());
  if (name == "indiscrete-2") return preorder_entry(name, indiscrete(2));
  if (name == "indiscrete-3") return preorder_entry(name, indiscrete(3));
  if (name == "preorder-mixed") {
    PreorderSpec s{{"a", "b", "c"}, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 0}, {0, 2}, {1, 2}}};
    return preorder_entry(name, s);
  }
  if (name == "finset-2" || name == "finset-3") {
    GalleryEntry e{name, build_finset_skeleton(name == "finset-2" ? 2 : 3), std::nullopt, {},
                   false, false};
    e.expectations = all_pairs(e.category, [](ObjId a, ObjId b) {
      return a.index == 0 && b.index == 0;
    });
    return e;
  }
  if (name == "pointed-3") {
    GalleryEntry e{name, build_pointed_sets(3), std::nullopt, {}, false, true};
    // P1 is a zero object, so P1 ⊕ X = X; larger pairs need a product
    // carrier with |X|·|Y| points, which the fragment lacks.
    e.expectations = all_pairs(e.category, [](ObjId a, ObjId b) {
      return a.index == 0 || b.index == 0;
    });
    return e;
  }
  if (name == "ab-trivial") return ab_entry(name, {{}}, true);
  if (name == "ab-trivial-2") return ab_entry(name, {{}, {}}, true);
  if (name == "ab-small") return ab_entry(name, {{}, {2}, {2, 2}}, false);
  if (name == "ab-coprime") return ab_entry(name, {{2}, {3}}, false);
  if (name == "ab-cube") return ab_entry(name, {{}, {2}, {2, 2}, {2, 2, 2}}, false);
  if (name == "ab-set") {
    auto groups = *gallery_entry("ab-small");
    auto sets = *gallery_entry("finset-2");
    GalleryEntry e{name, coproduct_category(groups.category, sets.category), std::nullopt, {},
                   false, false};
    const auto split = static_cast<std::uint32_t>(groups.category.object_count());
    for (const auto& x : groups.expectations) e.expectations.push_back(x);
    for (const auto& x : sets.expectations) {
      e.expectations.push_back({ObjId{x.a.index + split}, ObjId{x.b.index + split}, x.has_biproduct});
    }
    for (ObjId a : e.category.objects()) {
      for (ObjId b : e.category.objects()) {
        if ((a.index < split) != (b.index < split)) e.expectations.push_back({a, b, false});
      }
    }
    return e;
  }
  if (name == "semigroups") {
    const auto z2 = cyclic_group_semigroup(2);
    const auto l3 = flat_semilattice(2);
    auto z2z2 = direct_product(z2, z2);
    const std::vector<InverseSemigroupSpec> specs{z2, l3, z2z2};
    GalleryEntry e{name, build_inverse_semigroup_category(specs), std::nullopt, {}, false, std::nullopt};
    e.expectations = all_pairs(e.category, [&](ObjId a, ObjId b) {
      const auto& s = specs[a.index];
      const auto& t = specs[b.index];
      if (!neutral_element(s) || !neutral_element(t)) return false;
      const auto st = direct_product(s, t);
      return std::any_of(specs.begin(), specs.end(),
                         [&](const auto& c) { return isomorphic(c, st); });
    });
    return e;
  }
  if (name == "con") {
    const std::vector<ContractiveSystemSpec> specs{
        line_system("s", {0, 1, 3}, {0, 0, 1}),
        ContractiveSystemSpec{"e", 0, {}, {}},
    };
    GalleryEntry e{name, build_con_fragment(specs), std::nullopt, {}, false, std::nullopt};
    const ObjId bang = *e.category.find_object("!");
    for (ObjId s : e.category.objects()) {
      const bool has_fixed = s.index == bang.index || !fixed_points(specs[s.index]).empty();
      e.expectations.push_back({s, bang, has_fixed});
      if (s != bang) e.expectations.push_back({bang, s, has_fixed});
    }
    return e;
  }
  return std::nullopt;
}

std::vector<GalleryEntry> standard_gallery() {
  std::vector<GalleryEntry> out;
  for (const auto& name : gallery_names()) out.push_back(*gallery_entry(name));
  return out;
}

}  // namespace biprod::gallery
