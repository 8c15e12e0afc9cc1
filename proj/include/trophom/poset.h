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

#ifndef TROPHOM_POSET_H_
#define TROPHOM_POSET_H_

#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "trophom/matroid.h"
#include "trophom/numeric.h"
#include "trophom/simplicial_complex.h"
#include "trophom/subset.h"

namespace trophom {

// The (ω, t) a filtered poset was cut out with.
struct FilterTag {
  Weight omega;
  Rational t;
  // t <= min{0, ω·[n]}.
  bool t_in_range = false;
  // ω·σ != 0 for every proper nonempty σ, not only for the elements.
  bool fully_generic = false;
};

// A finite family of subsets of [n] ordered by inclusion. Elements are kept
// in canonical order; the strict order is materialized as bitset rows.
class Poset {
 public:
  Poset() = default;
  Poset(int n, std::vector<Subset> elements);

  int ground_size() const { return n_; }
  int size() const { return static_cast<int>(elements_.size()); }
  bool empty() const { return elements_.empty(); }
  const std::vector<Subset>& elements() const { return elements_; }
  const Subset& operator[](int i) const { return elements_[i]; }
  // Position of `s`, or -1.
  int IndexOf(Subset s) const;
  bool Less(int i, int j) const { return below_[j][i]; }
  // upper_covers()[i]: elements covering element i.
  const std::vector<std::vector<int>>& upper_covers() const {
    return upper_covers_;
  }
  std::vector<int> MinimalElements() const;
  std::vector<std::vector<int>> MaximalChains() const;
  // Number of elements in a longest chain.
  int Height() const;

  const std::optional<FilterTag>& filter() const { return filter_; }
  void set_filter(FilterTag tag) { filter_ = std::move(tag); }

  std::string ToString() const;  // "{{1},{1,2}}"

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.n_ == b.n_ && a.elements_ == b.elements_;
  }

 private:
  int n_ = 0;
  std::vector<Subset> elements_;
  std::vector<boost::dynamic_bitset<>> below_;  // below_[j][i]: i < j
  std::vector<std::vector<int>> upper_covers_;
  std::optional<FilterTag> filter_;
};

// L = proper part of the lattice of flats. Throws kRankTooSmall if r < 2.
Poset ProperLattice(const Matroid& m);
// L̂ including the bottom and top flats.
Poset FullLattice(const Matroid& m);

// Induced subposet on {σ : ω·σ > t}. Throws kNonGenericWeight if ω·σ = 0
// for an element σ of P; genericity over all subsets is only recorded in
// the tag. A t outside the range t <= min{0, ω·[n]} is accepted and
// flagged.
Poset Filtered(const Poset& p, const Weight& omega, const Rational& t);
bool TInRange(const Weight& omega, const Rational& t);

// Elements strictly (or weakly) between two subsets of [n], which need not
// belong to the poset. Throws kNotComparable unless a ⊆ b.
Poset Interval(const Poset& p, Subset a, Subset b, bool open_low = true,
               bool open_high = true);
// Elements strictly above a / strictly below b.
Poset Upper(const Poset& p, Subset a);
Poset Lower(const Poset& p, Subset b);

// Δ(P): vertex i of `complex` is the poset element labels[i].
struct OrderComplex {
  SimplicialComplex complex;
  std::vector<Subset> labels;

  std::vector<Subset> Labels(const Face& face) const;
  std::string FacetString() const;  // facets as label chains
};
// The order complex of an empty poset is {∅}.
OrderComplex BuildOrderComplex(const Poset& p);
// Δ(P) for a subposet P of `ambient`, with vertices numbered as in
// `ambient`, so that it is a subcomplex of Δ(ambient).
OrderComplex BuildOrderComplex(const Poset& p, const Poset& ambient);

// Compares the open interval (σ, τ) of L^{>t} with the filtered proper part
// of the minor (M|τ)/σ under ω restricted to τ ∖ σ and t − ω·σ, after
// transporting the minor's flats back into M. Throws kNotAFlat if σ or τ
// is not a flat, kNotComparable unless σ ⊊ τ.
bool HeredityCheck(const Matroid& m, const Weight& omega, const Rational& t,
                   Subset sigma, Subset tau);

}  // namespace trophom

#endif  // TROPHOM_POSET_H_
