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

#ifndef TROPHOM_HOMOLOGY_H_
#define TROPHOM_HOMOLOGY_H_

#include <string>

#include "trophom/chain_complex.h"
#include "trophom/simplicial_complex.h"

namespace trophom {

// Augmented simplicial chain complex, C_{-1} spanned by the empty face.
// Boundary signs follow the position of the removed vertex.
ChainComplexZ SimplicialChains(const SimplicialComplex& complex);

// H̃_i for i = -1..dim. Throws kVoidComplex.
HomologyProfile ReducedHomology(const SimplicialComplex& complex);

// Homology of C(Δ)/C(Γ) built from augmented chains, so Γ = {∅} yields
// unreduced homology of Δ. Throws kNotASubcomplex.
ChainComplexZ RelativeChains(const SimplicialComplex& complex,
                             const SimplicialComplex& sub);
HomologyProfile RelativeHomology(const SimplicialComplex& complex,
                                 const SimplicialComplex& sub);

struct CmResult {
  enum class Verdict { kPass, kFail, kNotPure };
  Verdict verdict = Verdict::kPass;
  // On kFail: a face whose link has nonzero H̃_degree, degree < dim link.
  Face witness;
  int degree = 0;
  HomologyGroup group;
  long long faces_checked = 0;

  bool passed() const { return verdict == Verdict::kPass; }
  std::string ToString() const;
};

// Cohen–Macaulay over Z: every link Lk_σ Δ, σ = ∅ included, has vanishing
// H̃_i for i < dim Lk_σ Δ. Non-pure input is reported as kNotPure.
CmResult CmOverZ(const SimplicialComplex& complex);

struct WedgeResult {
  bool passed = false;
  int sphere_count = 0;  // rank of H̃_d
  HomologyProfile homology;
};
// Homology-level wedge of d-spheres: torsion-free and concentrated in d.
WedgeResult WedgeProfile(const SimplicialComplex& complex, int d);

// Reduced Euler characteristic from face counts equals the alternating sum
// of the Betti numbers in `homology`.
bool EulerCheck(const SimplicialComplex& complex,
                const HomologyProfile& homology);

}  // namespace trophom

#endif  // TROPHOM_HOMOLOGY_H_
