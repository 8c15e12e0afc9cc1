// Copyright 2026 The Authors.
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

#ifndef TROPHOM_SUBSET_H_
#define TROPHOM_SUBSET_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "trophom/error.h"

namespace trophom {

// Largest supported ground set. Subsets fit in one machine word and
// genericity of a weight can be checked over all 2^n subsets.
inline constexpr int kMaxGroundSet = 24;

// A subset of the ground set {1..n}, stored as a bitmask where element i
// occupies bit i-1. The ground-set size is not stored; operations that need
// it (complement, validation) take it explicitly.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}

  // Builds a subset from 1-based element labels.
  static Subset Of(std::initializer_list<int> elements);
  static Subset Of(const std::vector<int>& elements);
  static constexpr Subset Full(int n) {
    return Subset(n >= 32 ? ~0u : ((1u << n) - 1u));
  }
  static constexpr Subset Singleton(int element) {
    return Subset(1u << (element - 1));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int element) const {
    return (bits_ >> (element - 1)) & 1u;
  }
  constexpr bool IsSubsetOf(Subset other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool IsProperSubsetOf(Subset other) const {
    return IsSubsetOf(other) && bits_ != other.bits_;
  }
  // Largest element, or 0 for the empty set.
  constexpr int max_element() const {
    return bits_ == 0 ? 0 : 32 - std::countl_zero(bits_);
  }
  // True iff no element exceeds n.
  constexpr bool FitsIn(int n) const { return IsSubsetOf(Full(n)); }

  constexpr Subset Union(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset Intersect(Subset o) const { return Subset(bits_ & o.bits_); }
  constexpr Subset Minus(Subset o) const { return Subset(bits_ & ~o.bits_); }
  constexpr Subset Complement(int n) const { return Full(n).Minus(*this); }
  constexpr Subset With(int element) const {
    return Union(Singleton(element));
  }

  // 1-based elements in increasing order.
  std::vector<int> Elements() const;
  // "{1,2,5}"
  std::string ToString() const;

  friend constexpr bool operator==(Subset a, Subset b) = default;
  // Orders by bit pattern; only used for canonical sorting.
  friend constexpr auto operator<=>(Subset a, Subset b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint32_t bits_ = 0;
};

// Canonical order for lists of subsets: by cardinality, then by sorted
// element list. Used wherever flats or faces are printed.
bool CanonicalLess(Subset a, Subset b);

// Verifies that n is within the supported range.
void CheckGroundSetSize(int n);

}  // namespace trophom

template <>
struct std::hash<trophom::Subset> {
  std::size_t operator()(trophom::Subset s) const noexcept {
    return std::hash<std::uint32_t>()(s.bits());
  }
};

#endif  // TROPHOM_SUBSET_H_
