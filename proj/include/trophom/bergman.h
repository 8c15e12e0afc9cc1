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

#ifndef TROPHOM_BERGMAN_H_
#define TROPHOM_BERGMAN_H_

#include <string>
#include <utility>
#include <vector>

#include "trophom/chain_complex.h"
#include "trophom/lattice.h"
#include "trophom/matroid.h"
#include "trophom/poset.h"

namespace trophom {

// Vectors e_1..e_n in Z^{n-1} summing to zero, any n-1 of them a basis.
struct CircuitRealization {
  int n = 0;
  std::vector<IntVector> vectors;

  int d() const { return n - 1; }
  // e_F = sum of e_i over i in F.
  IntVector Ray(Subset flat) const;
  bool SumsToZero() const;
  // Every (n-1)-subset has determinant ±1.
  bool EverySubsetUnimodular() const;
};

// e_i = i-th unit vector for i < n, e_n = -(e_1 + ... + e_{n-1}).
CircuitRealization StandardCircuit(int n);
// The standard circuit pushed through the unimodular map x ↦ A x with A
// upper unitriangular with ones on the superdiagonal.
CircuitRealization AlternateCircuit(int n);

// The fan {pos(e_F : F ∈ C) : C a chain of proper flats}. Cones are stored
// as chains; their generators are derived on demand.
class BergmanFan {
 public:
  // Requires rank >= 1 and a circuit on the matroid's ground set.
  BergmanFan(Matroid m, CircuitRealization circuit);
  explicit BergmanFan(Matroid m);  // standard circuit

  const Matroid& matroid() const { return matroid_; }
  const CircuitRealization& circuit() const { return circuit_; }
  int d() const { return circuit_.d(); }
  // Proper flats (rays); empty for rank 1.
  const Poset& lattice() const { return lattice_; }
  // Δ(L): every face is a cone, the empty face is the origin.
  const OrderComplex& cones() const { return cones_; }

  IntVector Ray(Subset flat) const { return circuit_.Ray(flat); }
  // Rows e_F for F in the chain.
  IntMatrix Generators(const std::vector<Subset>& chain) const;
  int ConeDimension(const std::vector<Subset>& chain) const;
  std::vector<Subset> Chain(const Face& face) const {
    return cones_.Labels(face);
  }
  // Chains of proper flats with k elements, i.e. k-dimensional cones.
  std::vector<std::vector<Subset>> ConesOfDimension(int k) const;
  std::vector<std::vector<Subset>> MaximalCones() const;
  // Every maximal chain spans a cone of dimension equal to its length.
  bool ConeDimensionsMatchChains() const;

 private:
  Matroid matroid_;
  CircuitRealization circuit_;
  Poset lattice_;
  OrderComplex cones_;
};

struct BalanceResult {
  bool passed = false;
  int completions = 0;
  IntVector sum;  // Σ e_G over the completing flats G
};

// Balancing along the codimension-one cone of a chain obtained from a
// maximal chain by removing one flat. Throws kNotASubchain otherwise.
BalanceResult BalancingCheck(const BergmanFan& fan,
                             const std::vector<Subset>& chain);
// All chains obtained from maximal chains by removing one flat.
std::vector<std::vector<Subset>> CodimensionOneChains(const BergmanFan& fan);

// (M|F, M/F) for a proper nonempty flat F. Throws kNotAFlat.
std::pair<Minor, Minor> LocalFans(const Matroid& m, Subset flat);

// Open halfspace {x : normal·x > 0} in Z^{n-1}.
struct Halfspace {
  IntVector normal;

  // Clears denominators by a positive factor.
  static Halfspace FromRationals(const std::vector<Rational>& normal);
  Halfspace Negated() const;
  std::string ToString() const;
};

// ω_i = normal·e_i.
Weight InducedWeight(const CircuitRealization& circuit, const Halfspace& h);

// L^{>0} for the induced weight, placed inside Δ(L).
struct PositivePart {
  Weight omega;
  Poset poset;
  OrderComplex complex;  // vertices numbered as in fan.cones()
  std::vector<IntVector> rays;  // rays[i] is e_F for poset[i]
};
// Throws kNonGenericHalfspace.
PositivePart ComputePositivePart(const BergmanFan& fan, const Halfspace& h);

struct LefschetzResult {
  HomologyProfile homology;  // H_*(Δ(L), Δ(L^{>0}))
  bool passed = false;       // free and concentrated in degree r-2
};
LefschetzResult LefschetzPair(const BergmanFan& fan, const Halfspace& h);

}  // namespace trophom

#endif  // TROPHOM_BERGMAN_H_
