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

#ifndef TROPHOM_LATTICE_H_
#define TROPHOM_LATTICE_H_

#include <optional>
#include <vector>

#include "trophom/int_matrix.h"
#include "trophom/numeric.h"

namespace trophom {

using IntVector = std::vector<BigInt>;

// Row-style Hermite normal form of the lattice spanned by the rows of
// `generators`: echelon rows with positive pivots, entries above each pivot
// reduced into [0, pivot). Zero rows are dropped, so the result is a basis.
IntMatrix HermiteBasis(const IntMatrix& generators);

// Certificate check by multiplication: `basis` is in Hermite normal form,
// X * basis = generators for an integer X, and every basis row is an
// integer combination Y of the generators with Y * generators = basis.
bool VerifyHermiteBasis(const IntMatrix& generators, const IntMatrix& basis);

// Integer coordinates of `v` in an echelon basis, or nullopt if `v` is not
// in the lattice.
std::optional<IntVector> CoordinatesIn(const IntMatrix& basis,
                                       const IntVector& v);

// An integer solution of a x = b, or nullopt (via the Smith form).
std::optional<IntVector> SolveInteger(const IntMatrix& a, const IntVector& b);

// Rows spanning {x ∈ Z^n : a x = 0} (a saturated basis).
IntMatrix IntegerKernel(const IntMatrix& a);
// Basis of (Q-row-span of a) ∩ Z^n.
IntMatrix Saturation(const IntMatrix& a);

// Lexicographic p-subsets of {0..d-1}; the standard basis of ∧^p Z^d.
std::vector<std::vector<int>> ExteriorBasis(int d, int p);
// Coordinates of v_1 ∧ ... ∧ v_p (p = rows) in ExteriorBasis(d, p).
IntVector Wedge(const IntMatrix& vectors);

// A sublattice of ∧^p Z^d kept in Hermite normal form.
class PLattice {
 public:
  PLattice(int d, int p);  // zero lattice
  static PLattice FromGenerators(int d, int p, const IntMatrix& generators);
  // ∧^p of the lattice with basis `rows` (all p-fold wedges of rows).
  static PLattice ExteriorPower(int d, int p, const IntMatrix& rows);
  static PLattice Full(int d, int p);

  int d() const { return d_; }
  int p() const { return p_; }
  int ambient_rank() const { return basis_.cols(); }
  int rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }

  bool Contains(const IntVector& v) const;
  bool Contains(const PLattice& other) const;
  PLattice Sum(const PLattice& other) const;

  friend bool operator==(const PLattice& a, const PLattice& b) {
    return a.d_ == b.d_ && a.p_ == b.p_ && a.basis_ == b.basis_;
  }

 private:
  int d_;
  int p_;
  IntMatrix basis_;
};

// [super : sub] for sub ⊆ super of equal rank; nullopt when the ranks
// differ (infinite index). Throws kInvalidParameters if sub ⊄ super.
std::optional<BigInt> LatticeIndex(const PLattice& sub, const PLattice& super);

BigInt Binomial(int n, int k);

}  // namespace trophom

#endif  // TROPHOM_LATTICE_H_
