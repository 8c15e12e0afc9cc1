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

#ifndef TROPHOM_HODGE_H_
#define TROPHOM_HODGE_H_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trophom/bergman.h"
#include "trophom/chain_complex.h"
#include "trophom/lattice.h"

namespace trophom {

enum class Ring { kInt, kRat };
std::string RingName(Ring ring);

// ∧^p (lin C ∩ Z^d) for the cone of a chain.
PLattice ConeLattice(const BergmanFan& fan, const std::vector<Subset>& chain,
                     int p);
// Sum of ConeLattice over `cones`.
PLattice PGroup(const BergmanFan& fan,
                const std::vector<std::vector<Subset>>& cones, int p);
// Maximal cones containing a flat F with ω·F > 0, i.e. meeting H⁺. Every
// cone meeting H⁺ lies in one of them, so they determine F_p(B ∩ H⁺).
std::vector<std::vector<Subset>> PositiveMaximalCones(const BergmanFan& fan,
                                                      const Weight& omega);

// Saturated tangent lattices of the maximal cones and their exterior
// powers, computed once per fan and reused across halfspaces.
class PGroupCache {
 public:
  explicit PGroupCache(const BergmanFan& fan);

  const BergmanFan& fan() const { return fan_; }
  // F_p B.
  PLattice Full(int p);
  // F_p of the maximal cones selected by `use`; stops early once the sum
  // is all of ∧^p Z^d (or has full rank, when only the rank matters).
  PLattice SumOver(const std::vector<bool>& use, int p, bool rank_only);

 private:
  const std::vector<PLattice>& Lattices(int p);

  const BergmanFan& fan_;
  std::vector<std::vector<Subset>> cones_;
  std::vector<IntMatrix> saturated_;
  std::map<int, std::vector<PLattice>> by_p_;
};

struct PComparison {
  Ring ring = Ring::kInt;
  PLattice positive{0, 0};  // F_p(B ∩ H⁺)
  PLattice full{0, 0};      // F_p(B)
  bool rank_equal = false;
  // [F_p B : F_p(B ∩ H⁺)]; always 1 over Q when the ranks agree; nullopt
  // when they differ.
  std::optional<BigInt> index;
};
// Throws kNonGenericHalfspace.
PComparison HalfspacePComparison(const BergmanFan& fan, const Halfspace& h,
                                 int p, Ring ring);
PComparison HalfspacePComparison(PGroupCache& cache, const Halfspace& h,
                                 int p, Ring ring);

struct FanoWitness {
  Halfspace halfspace;
  Weight omega;
  std::vector<Subset> positive_flats;    // L⁺(M)
  std::vector<Subset> generating_flats;  // flats of cones meeting H⁺
  std::vector<int> theta_on_generators;  // ϑ·S for S in generating_flats
  bool theta_even_on_generators = false;
  int theta_on_4 = 0;
  // The functional e_i ↦ ϑ_i (mod 2) vanishes on a basis of F_1(B ∩ H⁺).
  bool theta_vanishes_on_positive_basis = false;
  bool full_is_standard = false;  // F_1 B = Z^6
  PComparison comparison;
  PComparison rational_comparison;
};
FanoWitness TorsionWitnessFano();

enum class Region { kLink, kHalfLink, kBall };
std::string RegionName(Region region);

// A cell of a fan-local model: the simplex of a chain of flats, or with
// `cone` set, its join with the apex (the apex itself has an empty chain).
struct PQCell {
  std::vector<Subset> chain;
  bool cone = false;
  int degree = 0;
  int coefficient = 0;  // index into PQComplex::lattices
  std::vector<std::pair<int, int>> boundary;  // (cell, sign)

  std::string ToString() const;
};

// Tropical (p,q)-chains on a fan-local model. The coefficient of a cell is
// F_p of the star of its chain: the sum of ∧^p(lin D ∩ Z^d) over maximal
// chains D containing it. Link and HalfLink carry the empty chain in
// degree -1 with coefficient F_p(B), so they compute reduced groups.
class PQComplex {
 public:
  Region region = Region::kLink;
  int p = 0;
  Ring ring = Ring::kInt;
  int d = 0;
  std::vector<PQCell> cells;
  std::shared_ptr<const std::vector<PLattice>> lattices;

  const PLattice& Coefficient(const PQCell& cell) const {
    return (*lattices)[cell.coefficient];
  }
  // Total complex in the bases of the coefficient lattices. Cells rejected
  // by `keep` are quotiented out.
  ChainComplexZ Chains() const;
  ChainComplexZ Chains(const std::vector<bool>& keep) const;
  // Offset of a cell's coordinates within its degree.
  std::vector<int> Offsets(const std::vector<bool>& keep) const;
  int MinDegree() const;
  int IndexOf(const std::vector<Subset>& chain, bool cone) const;
};

// HalfLink needs a halfspace (throws kNonGenericHalfspace if not generic).
PQComplex BuildPQComplex(const BergmanFan& fan, Region region, int p,
                         Ring ring, const Halfspace* h = nullptr);
// Over Q the torsion is dropped.
HomologyProfile PQHomology(const PQComplex& k);
// H_*(Ball, Link): requires a Ball complex.
HomologyProfile PQRelativeHomology(const PQComplex& ball);

struct ConeIsoResult {
  bool passed = false;
  HomologyProfile link;      // H_{q-1}(Link; F_p), reported by q - 1
  HomologyProfile relative;  // H_q(Ball, Link; F_p)
};
ConeIsoResult ConeIsoCheck(const BergmanFan& fan, int p, Ring ring);

struct U34Witness {
  Halfspace halfspace;
  Weight omega;
  std::vector<Subset> halflink_vertices;
  // The system from the text: b_i + a_{i+1} + b_{i+1} = 0,
  // a_{i+1} - b_{i+1} = 0, a_i = 1 for i = 1, 2, 3 (indices mod 3).
  bool stated_system_consistent = true;
  // ∂γ = c for γ = Σ (a_i (e_i - e_{i+1}) + b_i e_{i+1}) τ_{i,i+1} with
  // ∂τ_{i,i+1} = σ_{i+1} - σ_i, written out coordinatewise.
  bool boundary_system_consistent = false;
  std::vector<Rational> boundary_system_solution;  // (a_1..a_3, b_1..b_3)
  bool c_is_cycle = false;
  bool c_is_boundary = false;
  std::vector<std::string> preimage;  // a chain y with ∂y = c, by cell
  HomologyProfile halflink_homology;  // (1, q) groups, q >= -1
  bool class_nonzero() const { return c_is_cycle && !c_is_boundary; }
};
U34Witness MakeU34Witness();

}  // namespace trophom

#endif  // TROPHOM_HODGE_H_
