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

#ifndef TROPHOM_SMITH_H_
#define TROPHOM_SMITH_H_

#include <vector>

#include "trophom/int_matrix.h"
#include "trophom/numeric.h"

namespace trophom {

// Smith normal form D = U * A * V with U, V unimodular and
// D = diag(d_1, ..., d_k, 0, ...), d_i > 0, d_i | d_{i+1}.
struct SmithForm {
  std::vector<BigInt> invariant_factors;  // d_1..d_k, all nonzero
  IntMatrix u;                            // rows x rows
  IntMatrix v;                            // cols x cols
  IntMatrix d;                            // rows x cols

  int rank() const { return static_cast<int>(invariant_factors.size()); }
};

// Dense elimination with smallest-magnitude pivots. The transformation
// matrices are always produced.
SmithForm SmithNormalForm(const IntMatrix& a);

// Re-multiplies U * A * V and compares against D; also checks that D is
// diagonal with the divisibility chain and that U and V have determinant
// +-1.
bool VerifySmithCertificate(const IntMatrix& a, const SmithForm& snf);

// Rank and nontrivial invariant factors (> 1) only.
struct SmithInvariants {
  int rank = 0;
  std::vector<BigInt> torsion;

  friend bool operator==(const SmithInvariants&,
                         const SmithInvariants&) = default;
};

// Dense path without certificates.
SmithInvariants DenseSmithInvariants(IntMatrix a);

// Sparse path: eliminates +-1 pivots in Markowitz order, then finishes the
// remaining block densely. Exact; switches to arbitrary precision if a
// 64-bit entry would overflow.
SmithInvariants SparseSmithInvariants(const SparseIntMatrix& a);

// Determinant of a square matrix (fraction-free Bareiss elimination).
BigInt Determinant(const IntMatrix& a);

}  // namespace trophom

#endif  // TROPHOM_SMITH_H_
