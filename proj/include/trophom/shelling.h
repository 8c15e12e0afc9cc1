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

#ifndef TROPHOM_SHELLING_H_
#define TROPHOM_SHELLING_H_

#include <optional>
#include <vector>

#include "trophom/matroid.h"
#include "trophom/poset.h"
#include "trophom/simplicial_complex.h"

namespace trophom {

// Facets of Δ(B^{>t}) for the Boolean lattice on [n], in lexicographic order
// of their edge-label words.
struct ShellingOrder {
  OrderComplex order_complex;
  std::vector<Face> facets;
  // permutations[k]: the elements in the order the k-th chain adds them.
  std::vector<std::vector<int>> permutations;
};

// The covering edge σ ⋖ σ ∪ {i} of B̂ is labeled ω_i; ties are broken by
// the element index. Chains are sorted so that larger labels come first,
// which puts the label-decreasing chain at the front. Throws kTOutOfRange
// unless t <= min{0, ω·[n]}.
ShellingOrder LexShellingBoolean(int n, const Weight& omega,
                                 const Rational& t);

struct ShellingVerdict {
  bool passed = true;
  int violating_index = 0;  // 1-based position of the first bad facet
};

// Checks that each facet after the first meets the union of its
// predecessors in a pure complex of codimension one. Throws kNotPure, or
// kNotAPermutation if `order` is not the facet list of `complex`.
ShellingVerdict VerifyShelling(const SimplicialComplex& complex,
                               const std::vector<Face>& order);

inline constexpr int kBruteForceFacetCap = 10;
// Exhaustive search for a shelling order. Throws kTooLarge above the cap
// and kNotPure for non-pure input.
std::optional<std::vector<Face>> BruteForceShellable(
    const SimplicialComplex& complex);

}  // namespace trophom

#endif  // TROPHOM_SHELLING_H_
