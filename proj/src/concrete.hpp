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

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "biprod/fincat.hpp"

namespace biprod::detail {

/// Builds a FinCat whose morphisms are functions between finite carriers,
/// with composition given by function composition. Every composite must be
/// among the added morphisms.
class ConcreteBuilder {
 public:
  using Images = std::vector<std::uint32_t>;

  explicit ConcreteBuilder(std::size_t morphism_limit) : limit_(morphism_limit) {}

  ObjId add_object(std::string name, std::size_t carrier_size);
  /// Returns the existing id when the same function was already added.
  MorId add_morphism(ObjId dom, ObjId cod, Images images, std::string name = {});
  bool contains(ObjId dom, ObjId cod, const Images& images) const;
  std::optional<MorId> lookup(ObjId dom, ObjId cod, const Images& images) const;

  std::size_t carrier_size(ObjId o) const { return sizes_[o.index]; }
  std::size_t morphism_count() const { return decls_.size(); }
  const Images& images(MorId m) const { return images_[m.index]; }
  ObjId dom(MorId m) const { return decls_[m.index].dom; }
  ObjId cod(MorId m) const { return decls_[m.index].cod; }

  /// Adds composites until closed; throws ResourceLimit past the limit.
  void close_under_composition();

  FinCat build() const;

 private:
  struct Key {
    std::uint32_t dom;
    std::uint32_t cod;
    Images images;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };

  std::string default_name(ObjId dom, ObjId cod, const Images& images) const;

  std::size_t limit_;
  std::vector<std::string> object_names_;
  std::vector<std::size_t> sizes_;
  std::vector<MorphismDecl> decls_;
  std::vector<Images> images_;
  std::unordered_map<Key, MorId, KeyHash> index_;
};

/// Every function {0..m-1} → {0..n-1}, in lexicographic order of images.
std::vector<ConcreteBuilder::Images> all_functions(std::size_t m, std::size_t n);

}  // namespace biprod::detail
