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

#include "concrete.hpp"

#include "biprod/error.hpp"

namespace biprod::detail {

std::size_t ConcreteBuilder::KeyHash::operator()(const Key& k) const noexcept {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(k.dom);
  mix(k.cod);
  for (auto v : k.images) mix(v);
  return h;
}

ObjId ConcreteBuilder::add_object(std::string name, std::size_t carrier_size) {
  object_names_.push_back(std::move(name));
  sizes_.push_back(carrier_size);
  return ObjId{static_cast<std::uint32_t>(sizes_.size() - 1)};
}

std::string ConcreteBuilder::default_name(ObjId dom, ObjId cod, const Images& images) const {
  bool is_identity = dom == cod;
  for (std::size_t x = 0; is_identity && x < images.size(); ++x) is_identity = images[x] == x;
  if (is_identity) return "id_" + object_names_[dom.index];
  static constexpr char kDigits[] = "0123456789abcdefghijklmnopqrstuvwxyz";
  std::string name = object_names_[dom.index] + "_" + object_names_[cod.index] + "_";
  if (sizes_[cod.index] <= 36) {
    for (auto v : images) name += kDigits[v];
    if (images.empty()) name += "e";
  } else {
    name += std::to_string(decls_.size());
  }
  return name;
}

MorId ConcreteBuilder::add_morphism(ObjId dom, ObjId cod, Images images, std::string name) {
  if (images.size() != sizes_[dom.index]) {
    throw InvalidStructure("function has " + std::to_string(images.size()) +
                           " images for a carrier of size " + std::to_string(sizes_[dom.index]));
  }
  for (auto v : images) {
    if (v >= sizes_[cod.index]) throw InvalidStructure("function image outside the codomain");
  }
  Key key{dom.index, cod.index, images};
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  if (decls_.size() >= limit_) {
    throw ResourceLimit("category would exceed " + std::to_string(limit_) + " morphisms");
  }
  if (name.empty()) name = default_name(dom, cod, images);
  const MorId id{static_cast<std::uint32_t>(decls_.size())};
  decls_.push_back({std::move(name), dom, cod});
  images_.push_back(std::move(images));
  index_.emplace(std::move(key), id);
  return id;
}

bool ConcreteBuilder::contains(ObjId dom, ObjId cod, const Images& images) const {
  return index_.count(Key{dom.index, cod.index, images}) != 0;
}

std::optional<MorId> ConcreteBuilder::lookup(ObjId dom, ObjId cod, const Images& images) const {
  auto it = index_.find(Key{dom.index, cod.index, images});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void ConcreteBuilder::close_under_composition() {
  for (std::size_t done = 0;;) {
    const std::size_t count = decls_.size();
    for (std::size_t gi = 0; gi < count; ++gi) {
      for (std::size_t fi = 0; fi < count; ++fi) {
        if (gi < done && fi < done) continue;
        if (decls_[fi].cod != decls_[gi].dom) continue;
        Images composite(images_[fi].size());
        for (std::size_t x = 0; x < composite.size(); ++x) {
          composite[x] = images_[gi][images_[fi][x]];
        }
        add_morphism(decls_[fi].dom, decls_[gi].cod, std::move(composite));
      }
    }
    if (decls_.size() == count) return;
    done = count;
  }
}

FinCat ConcreteBuilder::build() const {
  const std::size_t n = sizes_.size();
  const std::size_t m = decls_.size();
  std::vector<MorId> identities(n);
  for (std::size_t o = 0; o < n; ++o) {
    Images id(sizes_[o]);
    for (std::size_t x = 0; x < id.size(); ++x) id[x] = static_cast<std::uint32_t>(x);
    const ObjId obj{static_cast<std::uint32_t>(o)};
    auto found = lookup(obj, obj, id);
    if (!found) throw InvalidStructure("identity of " + object_names_[o] + " is missing");
    identities[o] = *found;
  }
  std::vector<MorId> composition(m * m, kNoMorphism);
  Images composite;
  for (std::size_t gi = 0; gi < m; ++gi) {
    for (std::size_t fi = 0; fi < m; ++fi) {
      if (decls_[fi].cod != decls_[gi].dom) continue;
      composite.resize(images_[fi].size());
      for (std::size_t x = 0; x < composite.size(); ++x) {
        composite[x] = images_[gi][images_[fi][x]];
      }
      auto found = lookup(decls_[fi].dom, decls_[gi].cod, composite);
      if (!found) {
        throw InvalidStructure("composite " + decls_[gi].name + " . " + decls_[fi].name +
                               " is not in the category");
      }
      composition[gi * m + fi] = *found;
    }
  }
  return FinCat(object_names_, decls_, std::move(identities), std::move(composition));
}

std::vector<ConcreteBuilder::Images> all_functions(std::size_t m, std::size_t n) {
  std::vector<ConcreteBuilder::Images> out;
  if (m > 0 && n == 0) return out;
  ConcreteBuilder::Images cur(m, 0);
  for (;;) {
    out.push_back(cur);
    std::size_t pos = m;
    while (pos > 0) {
      --pos;
      if (++cur[pos] < n) break;
      cur[pos] = 0;
      if (pos == 0) return out;
    }
    if (m == 0) return out;
  }
}

}  // namespace biprod::detail
