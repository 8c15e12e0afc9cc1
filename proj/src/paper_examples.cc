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

#include "trophom/paper_examples.h"

#include <string>
#include <utility>
#include <vector>

#include "trophom/bergman.h"
#include "trophom/error.h"
#include "trophom/hodge.h"
#include "trophom/homology.h"
#include "trophom/poset.h"
#include "trophom/simplicial_complex.h"

namespace trophom {
namespace {

std::string SubsetList(const std::vector<Subset>& sets) {
  std::string out = "{";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i > 0) out += ",";
    out += sets[i].ToString();
  }
  return out + "}";
}

std::string ToStringAny(int v) { return std::to_string(v); }
std::string ToStringAny(const Rational& v) { return ToString(v); }

template <class T>
std::string JoinValues(const std::vector<T>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += ToStringAny(values[i]);
  }
  return out + ")";
}

std::string YesNo(bool b) { return b ? "yes" : "no"; }

struct Named {
  std::string name;
  Matroid matroid;
};

std::vector<Named> SmallMatroids() {
  std::vector<Named> out;
  out.push_back({"U(2,3)", Uniform(2, 3)});
  for (int n = 2; n <= 5; ++n) out.push_back({"B(" + std::to_string(n) + ")", Boolean(n)});
  out.push_back({"fano", Fano()});
  out.push_back({"M(K4)", Graphic({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}})});
  return out;
}

std::vector<int> GroundVector(int n) {
  std::vector<int> ground;
  for (int i = 1; i <= n; ++i) ground.push_back(i);
  return ground;
}

}  // namespace

Matroid DisconnectedExampleMatroid() {
  return FromLongLines(7, {Subset::Of({1, 3, 6}), Subset::Of({1, 4, 7}),
                           Subset::Of({2, 4, 6}), Subset::Of({2, 5, 7}),
                           Subset::Of({3, 4, 5}), Subset::Of({1, 2}),
                           Subset::Of({6, 7})});
}

std::vector<Subset> PrintedExampleFlats() {
  std::vector<Subset> flats;
  for (int i = 1; i <= 7; ++i) flats.push_back(Subset::Singleton(i));
  for (auto s : {Subset::Of({1, 2}), Subset::Of({6, 7}), Subset::Of({1, 3, 6}),
                 Subset::Of({1, 4, 7}), Subset::Of({2, 4, 6}),
                 Subset::Of({2, 5, 7}), Subset::Of({3, 4, 5})}) {
    flats.push_back(s);
  }
  return flats;
}

CheckRecord DisconnectedFiltrationRecord() {
  CheckRecord rec{kDisconnectedName,
                  "a filtered lattice outside the admissible range of t can "
                  "be disconnected and fail Cohen-Macaulayness",
                  false,
                  {}};
  std::string printed = "accepted";
  try {
    std::vector<Subset> flats = PrintedExampleFlats();
    flats.push_back(Subset());
    flats.push_back(Subset::Full(7));
    (void)Matroid::FromFlats(7, flats);
  } catch (const Error& e) {
    printed = "rejected (" + std::string(ErrorCodeName(e.code())) + ")";
  }
  rec.Set("printed flat list", printed);
  const Matroid m = DisconnectedExampleMatroid();
  rec.Set("matroid", "rank 3 on [7], long lines 136 147 246 257 345 12 67");
  const Weight omega = Weight::FromIntegers({1, 1, -3, -3, -3, 1, 1});
  const Rational t = 0;
  const Poset filtered = Filtered(ProperLattice(m), omega, t);
  rec.Set("omega", omega.ToString());
  rec.Set("t", ToString(t));
  rec.Set("t in admissible range", YesNo(filtered.filter()->t_in_range));
  rec.Set("weight generic on all subsets",
          YesNo(filtered.filter()->fully_generic));
  rec.Set("elements", filtered.ToString());
  const OrderComplex oc = BuildOrderComplex(filtered);
  rec.Set("facets", oc.FacetString());
  const HomologyProfile h = ReducedHomology(oc.complex);
  const int components = h.At(0).betti + 1;
  rec.Set("components", std::to_string(components));
  rec.Set("reduced homology", h.ToString());
  const CmResult cm = CmOverZ(oc.complex);
  rec.Set("cm verdict", cm.ToString());
  const std::vector<Subset> expected = {
      Subset::Of({1}),    Subset::Of({2}),    Subset::Of({6}),
      Subset::Of({7}),    Subset::Of({1, 2}), Subset::Of({6, 7})};
  rec.passed = filtered.elements() == expected && components == 2 &&
               h.At(0) == HomologyGroup{1, {}} &&
               cm.verdict == CmResult::Verdict::kFail;
  return rec;
}

CheckRecord FanoDefectRecord() {
  CheckRecord rec{kFanoName,
                  "over Z the positive part of the fano fan generates a "
                  "proper sublattice of F_1, detected by a parity functional",
                  false,
                  {}};
  const FanoWitness w = TorsionWitnessFano();
  rec.Set("normal", w.halfspace.ToString());
  rec.Set("omega", w.omega.ToString());
  rec.Set("positive flats", SubsetList(w.positive_flats));
  rec.Set("generating flats", SubsetList(w.generating_flats));
  rec.Set("theta", "(0,0,0,1,1,1,1)");
  rec.Set("theta on generators", JoinValues(w.theta_on_generators));
  rec.Set("theta even on generators", YesNo(w.theta_even_on_generators));
  rec.Set("theta on element 4", std::to_string(w.theta_on_4));
  rec.Set("theta vanishes mod 2 on positive basis",
          YesNo(w.theta_vanishes_on_positive_basis));
  rec.Set("F_1 B is Z^6", YesNo(w.full_is_standard));
  rec.Set("positive rank", std::to_string(w.comparison.positive.rank()));
  rec.Set("index over Z",
          w.comparison.index ? ToString(*w.comparison.index) : "infinite");
  rec.Set("rank equal over Q", YesNo(w.rational_comparison.rank_equal));
  rec.passed = w.full_is_standard && w.comparison.index &&
               *w.comparison.index == 2 && w.theta_even_on_generators &&
               w.theta_on_4 == 1 && w.theta_vanishes_on_positive_basis &&
               w.rational_comparison.rank_equal;
  return rec;
}

CheckRecord U34WitnessRecord() {
  CheckRecord rec{kU34Name,
                  "the stated linear system for the U(3,4) halflink cycle is "
                  "inconsistent and the cycle is not a boundary",
                  false,
                  {}};
  const U34Witness w = MakeU34Witness();
  rec.Set("normal", w.halfspace.ToString());
  rec.Set("omega", w.omega.ToString());
  rec.Set("halflink vertices", SubsetList(w.halflink_vertices));
  rec.Set("stated system consistent", YesNo(w.stated_system_consistent));
  rec.Set("boundary system consistent", YesNo(w.boundary_system_consistent));
  if (w.boundary_system_consistent) {
    rec.Set("boundary system solution (a1,a2,a3,b1,b2,b3)",
            JoinValues(w.boundary_system_solution));
  }
  rec.Set("c is a cycle", YesNo(w.c_is_cycle));
  rec.Set("c is a boundary", YesNo(w.c_is_boundary));
  for (std::size_t i = 0; i < w.preimage.size(); ++i) {
    rec.Set("preimage term " + std::to_string(i + 1), w.preimage[i]);
  }
  rec.Set("halflink (1,q) homology", w.halflink_homology.ToString());
  rec.Set("class nonzero", YesNo(w.class_nonzero()));
  rec.passed = !w.stated_system_consistent && w.class_nonzero();
  return rec;
}

CheckRecord RotaSmallRecord() {
  CheckRecord rec{kRotaName,
                  "the order complex of proper flats is a wedge of |mu| "
                  "spheres of dimension r-2",
                  true,
                  {}};
  for (const Named& nm : SmallMatroids()) {
    const Matroid& m = nm.matroid;
    const OrderComplex oc = BuildOrderComplex(ProperLattice(m));
    const WedgeResult w = WedgeProfile(oc.complex, m.rank() - 2);
    BigInt mu = Mobius(m);
    if (mu < 0) mu = -mu;
    const bool ok = w.passed && BigInt(w.sphere_count) == mu;
    rec.passed = rec.passed && ok;
    rec.Set(nm.name, "|mu|=" + ToString(mu) + " spheres=" +
                         std::to_string(w.sphere_count) + " " +
                         (ok ? "match" : "MISMATCH"));
  }
  return rec;
}

CheckRecord ComplementDimensionRecord() {
  CheckRecord rec{kComplementName,
                  "the complement of the nonspanning sets in the boolean "
                  "order complex has dimension at most n-r-1",
                  true,
                  {}};
  for (const Named& nm : SmallMatroids()) {
    const Matroid& m = nm.matroid;
    const OrderComplex boolean = BuildOrderComplex(ProperLattice(Boolean(m.n())));
    std::vector<int> nonspanning;
    for (std::size_t v = 0; v < boolean.labels.size(); ++v) {
      if (!m.IsSpanning(boolean.labels[v])) {
        nonspanning.push_back(static_cast<int>(v));
      }
    }
    const SimplicialComplex complement =
        DeleteVertices(boolean.complex, nonspanning);
    const int bound = m.n() - m.rank() - 1;
    const bool ok = complement.dimension() <= bound;
    rec.passed = rec.passed && ok;
    rec.Set(nm.name, "dim=" + std::to_string(complement.dimension()) +
                         " bound=" + std::to_string(bound));
  }
  return rec;
}

CheckRecord DualityIdentificationRecord() {
  CheckRecord rec{kDualityName,
                  "the cospanning complex of M and the alexander dual of its "
                  "nonspanning complex both equal the independence complex "
                  "of the dual matroid",
                  true,
                  {}};
  for (const Named& nm : SmallMatroids()) {
    const Matroid& m = nm.matroid;
    const SimplicialComplex ind_dual = IndependenceComplex(Dual(m));
    const bool cospanning = CospanningComplex(m) == ind_dual;
    const bool alexander =
        AlexanderDual(NonspanningComplex(m), GroundVector(m.n())) == ind_dual;
    rec.passed = rec.passed && cospanning && alexander;
    rec.Set(nm.name, std::string("cospanning=") +
                         (cospanning ? "equal" : "DIFFERENT") +
                         " alexander=" + (alexander ? "equal" : "DIFFERENT"));
  }
  return rec;
}

Report PaperExamplesReport() {
  Report report("paper-examples");
  report.Add(DisconnectedFiltrationRecord());
  report.Add(FanoDefectRecord());
  report.Add(U34WitnessRecord());
  report.Add(RotaSmallRecord());
  report.Add(ComplementDimensionRecord());
  report.Add(DualityIdentificationRecord());
  return report;
}

}  // namespace trophom
