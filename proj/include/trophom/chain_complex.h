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

#ifndef TROPHOM_CHAIN_COMPLEX_H_
#define TROPHOM_CHAIN_COMPLEX_H_

#include <string>
#include <vector>

#include "trophom/int_matrix.h"
#include "trophom/numeric.h"

namespace trophom {

// A finitely generated abelian group Z^betti + sum Z/t_i.
struct HomologyGroup {
  int betti = 0;
  std::vector<BigInt> torsion;  // each > 1, each dividing the next

  bool IsZero() const { return betti == 0 && torsion.empty(); }
  bool IsFree() const { return torsion.empty(); }
  std::string ToString() const;  // "0", "Z^2", "Z + Z/2"

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

// Homology groups H_q for q = min_degree, min_degree + 1, ...
struct HomologyProfile {
  int min_degree = 0;
  std::vector<HomologyGroup> groups;

  // Zero group for degrees outside the stored range.
  HomologyGroup At(int q) const;
  int max_degree() const {
    return min_degree + static_cast<int>(groups.size()) - 1;
  }
  bool AllZero() const;
  bool TorsionFree() const;
  // True iff every group except possibly H_d vanishes and H_d is free.
  bool ConcentratedIn(int d) const;
  std::string ToString() const;  // "H_0=Z^2 H_1=0"

  friend bool operator==(const HomologyProfile& a, const HomologyProfile& b);
};

// Chain complex of free abelian groups C_q, q = min_degree..max_degree,
// with boundaries d_q : C_q -> C_{q-1}. Construction verifies d o d = 0 and
// throws Error(kInternal) otherwise.
class ChainComplexZ {
 public:
  // ranks[i] is the rank of C_{min_degree + i}; boundaries[i] is
  // d_{min_degree + i}, a ranks[i-1] x ranks[i] matrix (boundaries[0] must
  // be 0 x ranks[0]).
  ChainComplexZ(int min_degree, std::vector<int> ranks,
                std::vector<SparseIntMatrix> boundaries);

  int min_degree() const { return min_degree_; }
  int max_degree() const {
    return min_degree_ + static_cast<int>(ranks_.size()) - 1;
  }
  int rank(int q) const;
  // d_q; empty matrix outside the range.
  const SparseIntMatrix& boundary(int q) const;
  // Alternating sum of chain ranks, starting with sign (-1)^min_degree.
  long long EulerCharacteristic() const;

  HomologyProfile Homology() const;

  // Number of complexes that passed the d o d = 0 check in this process.
  static long long VerifiedCount();

 private:
  int min_degree_;
  std::vector<int> ranks_;
  std::vector<SparseIntMatrix> boundaries_;
  SparseIntMatrix empty_;
};

}  // namespace trophom

#endif  // TROPHOM_CHAIN_COMPLEX_H_
