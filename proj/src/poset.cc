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

#include "trophom/poset.h"

#include <algorithm>
#include <functional>

#include "trophom/error.h"

namespace trophom {

Poset::Poset(int n, std::vector<Subset> elements) : n_(n) {
  CheckGroundSetSize(n);
  std::sort(elements.begin(), elements.end(), CanonicalLess);
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  for (Subset s : elements) {
    if (!s.FitsIn(n)) {
      throw Error(ErrorCode::kInvalidParameters,
                  s.ToString() + " is not a subset of the ground set");
    }
  }
  elements_ = std::move(elements);
  const int size = static_cast<int>(elements_.size());
  below_.assign(size, boost::dynamic_bitset<>(size));
  for (int j = 0; j < size; ++j) {
    for (int i = 0; i < size; ++i) {
      if (elements_[i].IsProperSubsetOf(elements_[j])) below_[j].set(i);
    }
  }
  upper_covers_.assign(size, {});
  for (int j = 0; j < size; ++j) {
    for (int i = 0; i < size; ++i) {
      if (!below_[j][i]) continue;
      // i < j is a cover iff nothing below j lies above i.
      bool cover = true;
      for (auto k = below_[j].find_first(); k != below_[j].npos;
           k = below_[j].find_next(k)) {
        if (below_[k][i]) {
          cover = false;
          break;
        }
      }
      if (cover) upper_covers_[i].push_back(j);
    }
  }
}

int Poset::IndexOf(Subset s) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), s,
                             CanonicalLess);
  if (it == elements_.end() || *it != s) return -1;
  return static_cast<int>(it - elements_.begin());
}

std::vector<int> Poset::MinimalElements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (below_[i].none()) out.push_back(i);
  }
  return out;
}

std::vector<std::vector<int>> Poset::MaximalChains() const {
  std::vector<std::vector<int>> chains;
  std::vector<int> chain;
  std::function<void(int)> extend = [&](int i) {
    chain.push_back(i);
    if (upper_covers_[i].empty()) {
      chains.push_back(chain);
    } else {
      for (int j : upper_covers_[i]) extend(j);
    }
    chain.pop_back();
  };
  for (int i : MinimalElements()) extend(i);
  return chains;
}

int Poset::Height() const {
  std::vector<int> longest(size(), 1);
  int best = 0;
  // Canonical order lists smaller sets first, so it is a linear extension.
  for (int i = 0; i < size(); ++i) {
    for (int j : upper_covers_[i]) {
      longest[j] = std::max(longest[j], longest[i] + 1);
    }
    best = std::max(best, longest[i]);
  }
  return best;
}

std::string Poset::ToString() const {
  std::string out = "{";
  for (int i = 0; i < size(); ++i) {
    out += (i ? "," : "") + elements_[i].ToString();
  }
  return out + "}";
}

Poset ProperLattice(const Matroid& m) {
  if (m.rank() < 2) {
    throw Error(ErrorCode::kRankTooSmall,
                "proper part needs rank >= 2, got " +
                    std::to_string(m.rank()));
  }
  return Poset(m.n(), m.ProperFlats());
}

Poset FullLattice(const Matroid& m) { return Poset(m.n(), m.Flats()); }

bool TInRange(const Weight& omega, const Rational& t) {
  return t <= 0 && t <= omega.Total();
}

Poset Filtered(const Poset& p, const Weight& omega, const Rational& t) {
  if (omega.n() != p.ground_size()) {
    throw Error(ErrorCode::kInvalidParameters,
                "weight has " + std::to_string(omega.n()) +
                    " entries, ground set has " +
                    std::to_string(p.ground_size()));
  }
  std::vector<Subset> kept;
  for (Subset s : p.elements()) {
    const Rational value = omega.Dot(s);
    if (value == 0 && s != Subset::Full(p.ground_size()) && !s.empty()) {
      throw Error(ErrorCode::kNonGenericWeight,
                  "weight vanishes on " + s.ToString());
    }
    if (value > t) kept.push_back(s);
  }
  Poset out(p.ground_size(), std::move(kept));
  out.set_filter({omega, t, TInRange(omega, t), omega.generic()});
  return out;
}

Poset Interval(const Poset& p, Subset a, Subset b, bool open_low,
               bool open_high) {
  if (!a.IsSubsetOf(b)) {
    throw Error(ErrorCode::kNotComparable,
                a.ToString() + " is not below " + b.ToString());
  }
  std::vector<Subset> kept;
  for (Subset s : p.elements()) {
    const bool low = open_low ? a.IsProperSubsetOf(s) : a.IsSubsetOf(s);
    const bool high = open_high ? s.IsProperSubsetOf(b) : s.IsSubsetOf(b);
    if (low && high) kept.push_back(s);
  }
  Poset out(p.ground_size(), std::move(kept));
  if (p.filter()) out.set_filter(*p.filter());
  return out;
}

Poset Upper(const Poset& p, Subset a) {
  return Interval(p, a, Subset::Full(p.ground_size()), true, false);
}

Poset Lower(const Poset& p, Subset b) {
  return Interval(p, Subset(), b, false, true);
}

std::vector<Subset> OrderComplex::Labels(const Face& face) const {
  std::vector<Subset> out;
  for (int v : face) out.push_back(labels[v]);
  return out;
}

std::string OrderComplex::FacetString() const {
  if (complex.is_void()) return "void";
  std::string out = "[";
  bool first = true;
  for (const Face& f : complex.facets()) {
    out += first ? "" : ",";
    first = false;
    out += "(";
    for (std::size_t i = 0; i < f.size(); ++i) {
      out += (i ? "<" : "") + labels[f[i]].ToString();
    }
    out += ")";
  }
  return out + "]";
}

OrderComplex BuildOrderComplex(const Poset& p) {
  OrderComplex out{SimplicialComplex::EmptyFace(), p.elements()};
  if (!p.empty()) {
    out.complex = SimplicialComplex::FromFacets(p.MaximalChains());
  }
  return out;
}

OrderComplex BuildOrderComplex(const Poset& p, const Poset& ambient) {
  OrderComplex out{SimplicialComplex::EmptyFace(), ambient.elements()};
  if (p.empty()) return out;
  std::vector<Face> facets = p.MaximalChains();
  for (Face& f : facets) {
    for (int& v : f) {
      const int id = ambient.IndexOf(p[v]);
      if (id < 0) {
        throw Error(ErrorCode::kInvalidParameters,
                    p[v].ToString() + " is not in the ambient poset");
      }
      v = id;
    }
  }
  out.complex = SimplicialComplex::FromFacets(std::move(facets));
  return out;
}

bool HeredityCheck(const Matroid& m, const Weight& omega, const Rational& t,
                   Subset sigma, Subset tau) {
  for (Subset s : {sigma, tau}) {
    if (!m.IsFlat(s)) {
      throw Error(ErrorCode::kNotAFlat, s.ToString() + " is not a flat");
    }
  }
  if (!sigma.IsProperSubsetOf(tau)) {
    throw Error(ErrorCode::kNotComparable,
                sigma.ToString() + " is not strictly below " + tau.ToString());
  }
  // Both sides are families of subsets ordered by inclusion, and the
  // transport G ↦ σ ∪ G is an order embedding, so comparing the sorted
  // element lists decides isomorphism of the labeled posets.
  std::vector<Subset> lhs;
  for (Subset x : m.ProperFlats()) {
    if (omega.Dot(x) == 0) {
      throw Error(ErrorCode::kNonGenericWeight,
                  "weight vanishes on " + x.ToString());
    }
    if (sigma.IsProperSubsetOf(x) && x.IsProperSubsetOf(tau) &&
        omega.Dot(x) > t) {
      lhs.push_back(x);
    }
  }
  std::sort(lhs.begin(), lhs.end(), CanonicalLess);

  const Minor restricted = Restrict(m, tau);
  const Minor minor =
      Contract(restricted.matroid, restricted.FromOriginal(sigma));
  const Weight inner_omega = omega.Restrict(tau.Minus(sigma));
  const Rational inner_t = t - omega.Dot(sigma);
  std::vector<Subset> rhs;
  for (Subset g : minor.matroid.ProperFlats()) {
    if (inner_omega.Dot(g) > inner_t) {
      rhs.push_back(sigma.Union(restricted.ToOriginal(minor.ToOriginal(g))));
    }
  }
  std::sort(rhs.begin(), rhs.end(), CanonicalLess);
  return lhs == rhs;
}

}  // namespace trophom
