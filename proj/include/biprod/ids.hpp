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

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>

namespace biprod {

/// Dense index of an object in its owning FinCat.
struct ObjId {
  std::uint32_t index = 0;
  friend auto operator<=>(const ObjId&, const ObjId&) = default;
};

/// Dense index of a morphism in its owning FinCat.
struct MorId {
  std::uint32_t index = 0;
  friend auto operator<=>(const MorId&, const MorId&) = default;
};

/// Marks a non-composable pair in a composition table.
inline constexpr MorId kNoMorphism{std::numeric_limits<std::uint32_t>::max()};

}  // namespace biprod

template <>
struct std::hash<biprod::ObjId> {
  std::size_t operator()(biprod::ObjId o) const noexcept { return o.index; }
};

template <>
struct std::hash<biprod::MorId> {
  std::size_t operator()(biprod::MorId m) const noexcept { return m.index; }
};
