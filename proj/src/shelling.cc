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

#include "trophom/shelling.h"

#include <algorithm>
#include <cstdint>
#include <functional>

#include "trophom/error.h"

namespace trophom {
namespace {

// Whether `facet` attaches along codimension-one faces to the facets
// chosen[0..count).
bool AttachesWell(const Face& facet, const std::vector<const Face*>& chosen,
                  std::size_t count) {
  const int d = static_cast<int>(facet.size());
  // Bit v of a mask: position v of `facet` is missing from an earlier facet.
  std::vector<std::uint32_t> missing(count);
  std::uint32_t ridges = 0;  // positions v with facet ∖ {v} in an earlier one
  for (std::size_t j = 0; j < count; ++j) {
    std::uint32_t mask = 0;
    for (int v = 0; v < d; ++v) {
      if (!std::binary_search(chosen[j]->begin(), chosen[j]->end(),
                              facet[v])) {
        mask |= 1u << v;
      }
    }
    missing[j] = mask;
    if (std::popcount(mask) == 1) ridges |= mask;
  }
  if (count > 0 && ridges == 0) return false;
  for (std::uint32_t mask : missing) {
    if ((mask & ridges) == 0) return false;
  }
  return true;
}

void RequirePure(const SimplicialComplex& complex) {
  if (!complex.IsPure()) {
    throw Error(ErrorCode::kNotPure, "shelling needs a pure complex");
  }
}

}  // namespace

ShellingOrder LexShellingBoolean(int n, const Weight& omega,
                                 const Rational& t) {
  if (n < 2 || omega.n() != n) {
    throw Error(ErrorCode::kInvalidParameters,
                "Boolean shelling needs n >= 2 and a weight of length n");
  }
  if (!TInRange(omega, t)) {
    throw Error(ErrorCode::kTOutOfRange,
                "t = " + ToString(t) + " exceeds min{0, ω·[n]}");
  }
  // Elements sorted by decreasing (ω_i, i).
  std::vector<int> by_label(n);
  for (int i = 0; i < n; ++i) by_label[i] = i + 1;
  std::sort(by_label.begin(), by_label.end(), [&](int a, int b) {
    if (omega[a] != omega[b]) return omega[a] > omega[b];
    return a > b;
  });

  ShellingOrder out;
  // Labels are distinct after the tie-break, so no genericity is required.
  const Poset boolean = ProperLattice(Boolean(n));
  std::vector<Subset> kept;
  for (Subset s : boolean.elements()) {
    if (omega.Dot(s) > t) kept.push_back(s);
  }
  Poset filtered(n, std::move(kept));
  filtered.set_filter(FilterTag{omega, t, true, omega.generic()});
  out.order_complex = BuildOrderComplex(filtered);

  // Generating permutations in increasing order over `by_label` positions
  // yields the label words in the required order.
  std::vector<int> perm;
  std::vector<bool> used(n, false);
  std::function<void(Subset, Rational)> extend = [&](Subset prefix,
                                                     Rational weight) {
    if (static_cast<int>(perm.size()) == n - 1) {
      std::vector<int> full = perm;
      for (int e = 1; e <= n; ++e) {
        if (!prefix.contains(e)) full.push_back(e);
      }
      Face facet;
      Subset chain;
      for (int k = 0; k < n - 1; ++k) {
        chain = chain.With(full[k]);
        facet.push_back(filtered.IndexOf(chain));
      }
      std::sort(facet.begin(), facet.end());
      out.facets.push_back(std::move(facet));
      out.permutations.push_back(std::move(full));
      return;
    }
    for (int pos = 0; pos < n; ++pos) {
      if (used[pos]) continue;
      const int e = by_label[pos];
      const Rational next = weight + omega[e];
      if (next <= t) continue;
      used[pos] = true;
      perm.push_back(e);
      extend(prefix.With(e), next);
      perm.pop_back();
      used[pos] = false;
    }
  };
  extend(Subset(), Rational(0));
  return out;
}

ShellingVerdict VerifyShelling(const SimplicialComplex& complex,
                               const std::vector<Face>& order) {
  RequirePure(complex);
  std::vector<Face> sorted_order;
  for (Face f : order) {
    std::sort(f.begin(), f.end());
    sorted_order.push_back(std::move(f));
  }
  std::vector<Face> check = sorted_order;
  std::sort(check.begin(), check.end());
  if (check != complex.facets()) {
    throw Error(ErrorCode::kNotAPermutation,
                "order is not a permutation of the facets");
  }
  std::vector<const Face*> chosen;
  for (std::size_t k = 0; k < sorted_order.size(); ++k) {
    if (!AttachesWell(sorted_order[k], chosen, k)) {
      return {false, static_cast<int>(k) + 1};
    }
    chosen.push_back(&sorted_order[k]);
  }
  return {};
}

std::optional<std::vector<Face>> BruteForceShellable(
    const SimplicialComplex& complex) {
  const auto& facets = complex.facets();
  if (static_cast<int>(facets.size()) > kBruteForceFacetCap) {
    throw Error(ErrorCode::kTooLarge,
                std::to_string(facets.size()) + " facets exceed the cap of " +
                    std::to_string(kBruteForceFacetCap));
  }
  RequirePure(complex);
  std::vector<const Face*> chosen;
  std::vector<bool> used(facets.size(), false);
  std::function<bool()> search = [&]() {
    if (chosen.size() == facets.size()) return true;
    for (std::size_t i = 0; i < facets.size(); ++i) {
      if (used[i] || !AttachesWell(facets[i], chosen, chosen.size())) {
        continue;
      }
      used[i] = true;
      chosen.push_back(&facets[i]);
      if (search()) return true;
      chosen.pop_back();
      used[i] = false;
    }
    return false;
  };
  if (!search()) return std::nullopt;
  std::vector<Face> out;
  for (const Face* f : chosen) out.push_back(*f);
  return out;
}

}  // namespace trophom
