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

#include "trophom/suite.h"

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "trophom/bergman.h"
#include "trophom/chain_complex.h"
#include "trophom/error.h"
#include "trophom/hodge.h"
#include "trophom/homology.h"
#include "trophom/lattice.h"
#include "trophom/paper_examples.h"
#include "trophom/poset.h"
#include "trophom/shelling.h"
#include "trophom/simplicial_complex.h"
#include "trophom/smith.h"

namespace trophom {
namespace {

// Boundary matrices above this many entries skip the dense certificate.
constexpr long long kDenseSmithEntryCap = 40000;
constexpr int kAlternateCircuitMaxN = 5;
constexpr int kHermiteConesPerFan = 12;

class Sampler {
 public:
  Sampler(std::uint64_t seed, int stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream)};
    rng_.seed(seq);
  }

  int Uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  std::vector<long long> Vector(int length) {
    std::vector<long long> v(length);
    for (auto& x : v) x = Uniform(-kWeightBound, kWeightBound);
    return v;
  }

  Weight GenericWeight(int n) {
    while (true) {
      Weight w = Weight::FromIntegers(Vector(n));
      if (w.generic()) return w;
    }
  }

  Halfspace GenericHalfspace(const CircuitRealization& circuit) {
    while (true) {
      Halfspace h;
      for (long long x : Vector(circuit.d())) h.normal.push_back(BigInt(x));
      if (InducedWeight(circuit, h).generic()) return h;
    }
  }

  // t = min{0, ω·[n]} - k/2 with k in [0, 60].
  Rational AdmissibleT(const Weight& omega) {
    const Rational m = std::min(Rational(0), omega.Total());
    return m - Rational(Uniform(0, 60), 2);
  }

 private:
  std::mt19937_64 rng_;
};

// Counts checks and remembers the first failure.
struct Tally {
  long long checked = 0;
  long long failed = 0;
  std::string first_failure;

  void Record(bool ok, const std::string& what) {
    ++checked;
    if (!ok) {
      if (failed == 0) first_failure = what;
      ++failed;
    }
  }
  void Finish(CheckRecord& rec, const std::string& unit) const {
    rec.Set(unit + " checked", std::to_string(checked));
    rec.Set(unit + " failed", std::to_string(failed));
    if (failed > 0) rec.Set("first failure", first_failure);
    rec.passed = failed == 0 && checked > 0;
  }
};

std::vector<int> GroundVector(int n) {
  std::vector<int> ground;
  for (int i = 1; i <= n; ++i) ground.push_back(i);
  return ground;
}

// Reduced homology, all zero for the void complex.
HomologyProfile SafeReducedHomology(const SimplicialComplex& complex) {
  if (complex.is_void()) return HomologyProfile{};
  return ReducedHomology(complex);
}

std::string Context(const NamedMatroid& nm, const Weight& omega) {
  return nm.name + " omega=" + omega.ToString();
}

std::string Context(const NamedMatroid& nm, const Weight& omega,
                    const Rational& t) {
  return Context(nm, omega) + " t=" + ToString(t);
}

// ---------------------------------------------------------------------------

CheckRecord FilteredCm(const SuiteOptions& opt,
                       const std::vector<NamedMatroid>& suite) {
  CheckRecord rec{"filtered lattice cohen-macaulay",
                  "for generic integer weights and admissible t the filtered "
                  "lattice is pure of dimension r-2, cohen-macaulay over Z "
                  "and a homology wedge of (r-2)-spheres",
                  false,
                  {}};
  Sampler sampler(opt.seed, 1);
  Tally tally;
  long long distinct = 0;
  for (const NamedMatroid& nm : suite) {
    const Matroid& m = nm.matroid;
    const Poset lattice = ProperLattice(m);
    std::map<std::vector<Subset>, bool> seen;
    for (int k = 0; k < opt.weights_per_matroid; ++k) {
      const Weight omega = sampler.GenericWeight(m.n());
      const Rational t = sampler.AdmissibleT(omega);
      const Poset filtered = Filtered(lattice, omega, t);
      auto it = seen.find(filtered.elements());
      bool ok;
      std::string why;
      if (it != seen.end()) {
        ok = it->second;
      } else {
        ++distinct;
        const OrderComplex oc = BuildOrderComplex(filtered);
        const SimplicialComplex& c = oc.complex;
        const bool pure = c.IsPure() && c.dimension() == m.rank() - 2;
        const CmResult cm = CmOverZ(c);
        const WedgeResult wedge = WedgeProfile(c, m.rank() - 2);
        const bool euler = EulerCheck(c, wedge.homology);
        ok = filtered.filter()->t_in_range && pure && cm.passed() &&
             wedge.passed && euler;
        if (!ok) {
          why = " pure=" + std::to_string(pure) + " cm=" + cm.ToString() +
                " homology=" + wedge.homology.ToString();
        }
        seen.emplace(filtered.elements(), ok);
      }
      tally.Record(ok, Context(nm, omega, t) + why);
    }
  }
  rec.Set("matroids", std::to_string(suite.size()));
  rec.Set("weights per matroid", std::to_string(opt.weights_per_matroid));
  rec.Set("distinct filtered lattices", std::to_string(distinct));
  tally.Finish(rec, "samples");
  return rec;
}

CheckRecord BooleanShelling(const SuiteOptions& opt) {
  CheckRecord rec{"boolean lexicographic shelling",
                  "the lexicographic order of edge-label words shells the "
                  "filtered boolean lattice, starting with the decreasing "
                  "chain",
                  false,
                  {}};
  Sampler sampler(opt.seed, 2);
  Tally tally;
  const int top = std::min(opt.max_n, 7);
  for (int n = 2; n <= top; ++n) {
    for (int k = 0; k < opt.shelling_samples_per_n; ++k) {
      const Weight omega = sampler.GenericWeight(n);
      const Rational t = sampler.AdmissibleT(omega);
      const ShellingOrder order = LexShellingBoolean(n, omega, t);
      const ShellingVerdict v =
          VerifyShelling(order.order_complex.complex, order.facets);
      std::vector<int> decreasing = GroundVector(n);
      std::sort(decreasing.begin(), decreasing.end(), [&](int a, int b) {
        if (omega[a] != omega[b]) return omega[a] > omega[b];
        return a > b;
      });
      const bool first_ok =
          !order.permutations.empty() && order.permutations[0] == decreasing;
      tally.Record(v.passed && first_ok,
                   "n=" + std::to_string(n) + " omega=" + omega.ToString() +
                       " t=" + ToString(t) + " violating facet " +
                       std::to_string(v.violating_index) +
                       " first facet decreasing=" + std::to_string(first_ok));
    }
  }
  rec.Set("ground sets", "n=2.." + std::to_string(top));
  rec.Set("samples per n", std::to_string(opt.shelling_samples_per_n));
  tally.Finish(rec, "samples");
  return rec;
}

CheckRecord RotaIdentity(const std::vector<NamedMatroid>& suite) {
  CheckRecord rec{"rota identity",
                  "the order complex of proper flats has |mu(0,1)| spheres "
                  "in dimension r-2",
                  false,
                  {}};
  Tally tally;
  std::string profile;
  for (const NamedMatroid& nm : suite) {
    const Matroid& m = nm.matroid;
    const OrderComplex oc = BuildOrderComplex(ProperLattice(m));
    const WedgeResult w = WedgeProfile(oc.complex, m.rank() - 2);
    BigInt mu = Mobius(m);
    if (mu < 0) mu = -mu;
    tally.Record(w.passed && BigInt(w.sphere_count) == mu,
                 nm.name + " |mu|=" + ToString(mu) + " homology=" +
                     w.homology.ToString());
    if (!profile.empty()) profile += " ";
    profile += nm.name + ":" + ToString(mu);
  }
  rec.Set("|mu| by matroid", profile);
  tally.Finish(rec, "matroids");
  return rec;
}

CheckRecord RelativePair(const SuiteOptions& opt,
                         const std::vector<NamedMatroid>& suite) {
  CheckRecord rec{"relative lefschetz pair",
                  "for admissible t' < t the pair (L^{>t'}, L^{>t}) has "
                  "relative homology free and concentrated in degree r-2, "
                  "and the top betti number grows as t decreases",
                  false,
                  {}};
  Sampler sampler(opt.seed, 4);
  Tally pairs;
  Tally monotone;
  Tally halfspaces;
  constexpr int kSweeps = 3;
  constexpr int kSteps = 4;
  for (const NamedMatroid& nm : suite) {
    const Matroid& m = nm.matroid;
    const int top = m.rank() - 2;
    const Poset lattice = ProperLattice(m);
    for (int s = 0; s < kSweeps; ++s) {
      const Weight omega = sampler.GenericWeight(m.n());
      std::vector<Rational> ts = {std::min(Rational(0), omega.Total())};
      for (int k = 0; k < kSteps; ++k) {
        ts.push_back(ts.back() - Rational(sampler.Uniform(1, 40), 2));
      }
      std::vector<OrderComplex> complexes;
      for (const Rational& t : ts) {
        complexes.push_back(
            BuildOrderComplex(Filtered(lattice, omega, t), lattice));
      }
      int previous_top = -1;
      for (std::size_t k = 0; k < ts.size(); ++k) {
        const int betti = SafeReducedHomology(complexes[k].complex).At(top).betti;
        monotone.Record(betti >= previous_top,
                        Context(nm, omega, ts[k]) + " top betti " +
                            std::to_string(betti) + " after " +
                            std::to_string(previous_top));
        previous_top = betti;
        if (k == 0) continue;
        const HomologyProfile rel =
            RelativeHomology(complexes[k].complex, complexes[k - 1].complex);
        pairs.Record(rel.ConcentratedIn(top) && rel.TorsionFree(),
                     Context(nm, omega) + " t'=" + ToString(ts[k]) +
                         " t=" + ToString(ts[k - 1]) + " " + rel.ToString());
      }
    }
    const BergmanFan fan(m);
    for (int s = 0; s < opt.lefschetz_halfspaces; ++s) {
      const Halfspace h = sampler.GenericHalfspace(fan.circuit());
      const LefschetzResult r = LefschetzPair(fan, h);
      halfspaces.Record(r.passed, nm.name + " normal=" + h.ToString() + " " +
                                      r.homology.ToString());
    }
  }
  rec.Set("sweeps per matroid", std::to_string(kSweeps) + " of " +
                                    std::to_string(kSteps) + " steps");
  rec.Set("monotonicity checked", std::to_string(monotone.checked));
  rec.Set("monotonicity failed", std::to_string(monotone.failed));
  rec.Set("halfspace pairs checked", std::to_string(halfspaces.checked));
  rec.Set("halfspace pairs failed", std::to_string(halfspaces.failed));
  Tally all = pairs;
  for (const Tally* other : {&monotone, &halfspaces}) {
    all.checked += other->checked;
    if (all.failed == 0 && other->failed > 0) {
      all.first_failure = other->first_failure;
    }
    all.failed += other->failed;
  }
  rec.Set("relative pairs checked", std::to_string(pairs.checked));
  all.Finish(rec, "total");
  return rec;
}

CheckRecord ComplementModel(const std::vector<NamedMatroid>& suite) {
  CheckRecord rec{"complement model",
                  "the complements B-L and B-NS in the boolean order complex "
                  "have equal homology, free and concentrated in n-r-1, "
                  "matching the independence complex of the dual",
                  false,
                  {}};
  Tally tally;
  std::map<int, OrderComplex> boolean;
  for (const NamedMatroid& nm : suite) {
    const Matroid& m = nm.matroid;
    const int n = m.n();
    if (!boolean.contains(n)) {
      boolean.emplace(n, BuildOrderComplex(ProperLattice(Boolean(n))));
    }
    const OrderComplex& b = boolean.at(n);
    std::vector<int> flats;
    std::vector<int> nonspanning;
    for (std::size_t v = 0; v < b.labels.size(); ++v) {
      if (m.IsFlat(b.labels[v])) flats.push_back(static_cast<int>(v));
      if (!m.IsSpanning(b.labels[v])) nonspanning.push_back(static_cast<int>(v));
    }
    const SimplicialComplex minus_l = DeleteVertices(b.complex, flats);
    const SimplicialComplex minus_ns = DeleteVertices(b.complex, nonspanning);
    const HomologyProfile hl = SafeReducedHomology(minus_l);
    const HomologyProfile hns = SafeReducedHomology(minus_ns);
    const Matroid dual = Dual(m);
    const SimplicialComplex ind_dual = IndependenceComplex(dual);
    const HomologyProfile hind = SafeReducedHomology(ind_dual);
    const int d = n - m.rank() - 1;
    const bool concentrated = hl.ConcentratedIn(d) && hl.TorsionFree();
    const bool equal = hl == hns && hl == hind;
    const bool identical = CospanningComplex(m) == ind_dual;
    const bool bounded = minus_ns.dimension() <= d;
    tally.Record(concentrated && equal && identical && bounded,
                 nm.name + " B-L " + hl.ToString() + " B-NS " +
                     hns.ToString() + " Ind(M*) " + hind.ToString() +
                     " cospanning identical=" + std::to_string(identical) +
                     " dim(B-NS)=" + std::to_string(minus_ns.dimension()));
  }
  tally.Finish(rec, "matroids");
  return rec;
}

CheckRecord AlexanderDuality(const std::vector<NamedMatroid>& suite,
                             int max_n) {
  CheckRecord rec{"combinatorial alexander duality",
                  "reduced homology of a complex on n vertices matches the "
                  "reduced cohomology of its alexander dual in degree n-i-3",
                  false,
                  {}};
  std::vector<NamedMatroid> matroids = suite;
  if (max_n >= 7) {
    for (int r = 2; r <= 8; ++r) {
      matroids.push_back({"U(" + std::to_string(r) + ",8)", Uniform(r, 8)});
    }
  }
  Tally tally;
  for (const NamedMatroid& nm : matroids) {
    const Matroid& m = nm.matroid;
    const int n = m.n();
    const std::vector<int> ground = GroundVector(n);
    const std::pair<std::string, SimplicialComplex> complexes[] = {
        {"independence", IndependenceComplex(m)},
        {"nonspanning", NonspanningComplex(m)},
        {"cospanning", CospanningComplex(m)}};
    for (const auto& [kind, delta] : complexes) {
      const SimplicialComplex dual = AlexanderDual(delta, ground);
      const bool involution = AlexanderDual(dual, ground) == delta;
      const HomologyProfile h = SafeReducedHomology(delta);
      const HomologyProfile hd = SafeReducedHomology(dual);
      bool ok = involution;
      for (int i = -1; i <= n; ++i) {
        // H̃^j has betti_j free part and the torsion of H̃_{j-1}.
        const int j = n - i - 3;
        ok = ok && h.At(i).betti == hd.At(j).betti &&
             h.At(i).torsion == hd.At(j - 1).torsion;
      }
      tally.Record(ok, nm.name + " " + kind + " " + h.ToString() +
                           " dual " + hd.ToString() +
                           " involution=" + std::to_string(involution));
    }
  }
  rec.Set("matroids", std::to_string(matroids.size()));
  rec.Set("complex kinds", "independence nonspanning cospanning");
  tally.Finish(rec, "complexes");
  return rec;
}

CheckRecord Balancing(const SuiteOptions& opt,
                      const std::vector<NamedMatroid>& suite) {
  CheckRecord rec{"bergman fan balancing",
                  "every codimension-one cone of the bergman fan is "
                  "balanced, with cone dimension equal to chain length",
                  false,
                  {}};
  Sampler sampler(opt.seed, 7);
  Tally tally;
  Tally alternate;
  long long codim_one = 0;
  for (const NamedMatroid& nm : suite) {
    const Matroid& m = nm.matroid;
    std::vector<BergmanFan> fans;
    fans.emplace_back(m);
    if (m.n() <= kAlternateCircuitMaxN) {
      fans.emplace_back(m, AlternateCircuit(m.n()));
    }
    for (std::size_t f = 0; f < fans.size(); ++f) {
      const BergmanFan& fan = fans[f];
      const std::string label = nm.name + (f == 0 ? "" : " alternate circuit");
      bool ok = fan.circuit().SumsToZero() &&
                fan.circuit().EverySubsetUnimodular() &&
                fan.ConeDimensionsMatchChains();
      std::string bad;
      for (const auto& chain : CodimensionOneChains(fan)) {
        ++codim_one;
        const BalanceResult b = BalancingCheck(fan, chain);
        if (!b.passed && bad.empty()) {
          bad = " unbalanced at " + std::to_string(chain.size()) + "-chain";
        }
        ok = ok && b.passed;
      }
      tally.Record(ok, label + bad);
    }
    if (fans.size() < 2) continue;
    // Transport halfspaces to the alternate circuit: same induced weight,
    // so positive parts and F_1 indices must agree.
    IntMatrix rows(m.n() - 1, m.n() - 1);
    for (int i = 0; i < m.n() - 1; ++i) {
      for (int j = 0; j < m.n() - 1; ++j) {
        rows(i, j) = fans[1].circuit().vectors[i][j];
      }
    }
    for (int s = 0; s < 3; ++s) {
      const Halfspace h = sampler.GenericHalfspace(fans[0].circuit());
      const Weight omega = InducedWeight(fans[0].circuit(), h);
      IntVector target;
      for (int i = 1; i < m.n(); ++i) target.push_back(numerator(omega[i]));
      const std::optional<IntVector> solved = SolveInteger(rows, target);
      bool ok = solved.has_value();
      if (ok) {
        const Halfspace moved{*solved};
        const PositivePart a = ComputePositivePart(fans[0], h);
        const PositivePart b = ComputePositivePart(fans[1], moved);
        const PComparison ca = HalfspacePComparison(fans[0], h, 1, Ring::kInt);
        const PComparison cb =
            HalfspacePComparison(fans[1], moved, 1, Ring::kInt);
        ok = a.poset == b.poset && ca.index == cb.index;
      }
      alternate.Record(ok, nm.name + " normal=" + h.ToString());
    }
  }
  rec.Set("codimension-one cones", std::to_string(codim_one));
  rec.Set("circuit transports checked", std::to_string(alternate.checked));
  rec.Set("circuit transports failed", std::to_string(alternate.failed));
  if (alternate.failed > 0 && tally.failed == 0) {
    tally.first_failure = alternate.first_failure;
  }
  tally.failed += alternate.failed;
  tally.Finish(rec, "fans");
  return rec;
}

CheckRecord GoldenRecord(const std::string& name, const std::string& title,
                         const std::string& anchor, const CheckRecord& actual,
                         const std::string& golden) {
  CheckRecord rec{title, anchor, false, {}};
  const std::string rendered = actual.Render();
  const std::string expected = RecordBlock(golden, name);
  const bool matches = !expected.empty() && rendered == expected;
  rec.Set("record", name);
  rec.Set("record verdict", actual.passed ? "PASS" : "FAIL");
  rec.Set("golden file", expected.empty() ? "record missing"
                                          : (matches ? "identical" : "differs"));
  for (const auto& [key, value] : actual.data) rec.Set(key, value);
  rec.passed = actual.passed && matches;
  return rec;
}

CheckRecord RationalFraming(const SuiteOptions& opt,
                            const std::vector<NamedMatroid>& suite) {
  CheckRecord rec{"rational framing",
                  "over Q the positive half of the bergman fan spans F_p for "
                  "every p < r-1",
                  false,
                  {}};
  Sampler sampler(opt.seed, 10);
  Tally tally;
  for (const NamedMatroid& nm : suite) {
    const BergmanFan fan(nm.matroid);
    PGroupCache cache(fan);
    for (int s = 0; s < opt.halfspaces_per_matroid; ++s) {
      const Halfspace h = sampler.GenericHalfspace(fan.circuit());
      for (int p = 0; p < nm.matroid.rank() - 1; ++p) {
        const PComparison c = HalfspacePComparison(cache, h, p, Ring::kRat);
        tally.Record(c.rank_equal,
                     nm.name + " normal=" + h.ToString() + " p=" +
                         std::to_string(p) + " ranks " +
                         std::to_string(c.positive.rank()) + "/" +
                         std::to_string(c.full.rank()));
      }
    }
  }
  rec.Set("halfspaces per matroid", std::to_string(opt.halfspaces_per_matroid));
  tally.Finish(rec, "comparisons");
  return rec;
}

CheckRecord HalflinkVanishing(const SuiteOptions& opt,
                              const std::vector<NamedMatroid>& suite) {
  CheckRecord rec{"halflink (p,q) vanishing",
                  "rational (p,q) homology of the positive half link "
                  "vanishes for p+q <= r-3",
                  false,
                  {}};
  Sampler sampler(opt.seed, 11);
  Tally tally;
  for (const NamedMatroid& nm : suite) {
    const int r = nm.matroid.rank();
    const BergmanFan fan(nm.matroid);
    for (int s = 0; s < opt.halflink_halfspaces; ++s) {
      const Halfspace h = sampler.GenericHalfspace(fan.circuit());
      for (int p = 0; p <= r - 2; ++p) {
        const PQComplex k = BuildPQComplex(fan, Region::kHalfLink, p,
                                           Ring::kRat, &h);
        const HomologyProfile hom = PQHomology(k);
        bool ok = true;
        for (int q = -1; q <= r - 3 - p; ++q) ok = ok && hom.At(q).IsZero();
        tally.Record(ok, nm.name + " normal=" + h.ToString() + " p=" +
                             std::to_string(p) + " " + hom.ToString());
      }
    }
  }
  rec.Set("halfspaces per matroid", std::to_string(opt.halflink_halfspaces));
  tally.Finish(rec, "(matroid, halfspace, p) triples");
  return rec;
}

CheckRecord ConeIsomorphism(const std::vector<NamedMatroid>& suite) {
  CheckRecord rec{"cone isomorphism",
                  "H_{q-1}(Link; F_p) and H_q(Ball, Link; F_p) agree in rank "
                  "and torsion for p <= r-1",
                  false,
                  {}};
  Tally tally;
  for (const NamedMatroid& nm : suite) {
    const BergmanFan fan(nm.matroid);
    for (int p = 0; p <= nm.matroid.rank() - 1; ++p) {
      const ConeIsoResult r = ConeIsoCheck(fan, p, Ring::kInt);
      tally.Record(r.passed, nm.name + " p=" + std::to_string(p) + " link " +
                                 r.link.ToString() + " relative " +
                                 r.relative.ToString());
    }
  }
  tally.Finish(rec, "(matroid, p) pairs");
  return rec;
}

CheckRecord Infrastructure(const SuiteOptions& opt,
                           const std::vector<NamedMatroid>& suite,
                           long long complexes_before) {
  CheckRecord rec{"infrastructure certificates",
                  "boundary maps square to zero, smith and hermite forms are "
                  "certified by multiplication, duality is an involution and "
                  "filtered intervals are filtered minors",
                  false,
                  {}};
  Sampler sampler(opt.seed, 14);
  Tally smith;
  Tally hermite;
  Tally duals;
  Tally heredity;
  long long skipped = 0;

  auto certify = [&](const ChainComplexZ& chains, const std::string& label) {
    for (int q = chains.min_degree() + 1; q <= chains.max_degree(); ++q) {
      const SparseIntMatrix& b = chains.boundary(q);
      if (static_cast<long long>(b.rows()) * b.cols() > kDenseSmithEntryCap) {
        ++skipped;
        continue;
      }
      const IntMatrix dense = b.ToDense();
      const SmithForm snf = SmithNormalForm(dense);
      SmithInvariants from_dense;
      from_dense.rank = snf.rank();
      for (const BigInt& f : snf.invariant_factors) {
        if (f > 1) from_dense.torsion.push_back(f);
      }
      smith.Record(VerifySmithCertificate(dense, snf) &&
                       from_dense == SparseSmithInvariants(b),
                   label + " boundary " + std::to_string(q));
    }
  };

  for (const NamedMatroid& nm : suite) {
    const Matroid& m = nm.matroid;
    certify(SimplicialChains(BuildOrderComplex(ProperLattice(m)).complex),
            nm.name + " order complex");
    duals.Record(Dual(Dual(m)) == m, nm.name);

    const BergmanFan fan(m);
    for (int p = 1; p <= std::min(2, m.rank() - 1); ++p) {
      IntMatrix generators(0, static_cast<int>(Binomial(fan.d(), p)));
      const auto cones = fan.MaximalCones();
      for (int c = 0; c < std::min<int>(kHermiteConesPerFan, cones.size());
           ++c) {
        const IntMatrix rays = fan.Generators(cones[c]);
        for (const auto& subset : ExteriorBasis(rays.rows(), p)) {
          IntMatrix picked(0, rays.cols());
          for (int i : subset) picked.AppendRow(rays.Row(i));
          generators.AppendRow(Wedge(picked));
        }
      }
      hermite.Record(VerifyHermiteBasis(generators, HermiteBasis(generators)),
                     nm.name + " p=" + std::to_string(p));
    }

    if (m.n() <= 7) {
      const std::vector<Subset> flats = m.Flats();
      for (int s = 0; s < 2; ++s) {
        const Weight omega = sampler.GenericWeight(m.n());
        const Rational t = sampler.AdmissibleT(omega);
        bool ok = true;
        std::string bad;
        for (Subset sigma : flats) {
          for (Subset tau : flats) {
            if (!sigma.IsProperSubsetOf(tau)) continue;
            if (!HeredityCheck(m, omega, t, sigma, tau)) {
              if (ok) bad = " at " + sigma.ToString() + "<" + tau.ToString();
              ok = false;
            }
          }
        }
        heredity.Record(ok, Context(nm, omega, t) + bad);
      }
    }
  }
  const BergmanFan fano(Fano());
  certify(BuildPQComplex(fano, Region::kLink, 1, Ring::kInt).Chains(),
          "fano (1,q) link");
  certify(BuildPQComplex(fano, Region::kBall, 1, Ring::kInt).Chains(),
          "fano (1,q) ball");

  const long long complexes = ChainComplexZ::VerifiedCount() - complexes_before;
  rec.Set("chain complexes with verified d^2=0", std::to_string(complexes));
  rec.Set("smith certificates", std::to_string(smith.checked));
  rec.Set("smith skipped above " + std::to_string(kDenseSmithEntryCap) +
              " entries",
          std::to_string(skipped));
  rec.Set("hermite certificates", std::to_string(hermite.checked));
  rec.Set("double duals", std::to_string(duals.checked));
  rec.Set("heredity samples", std::to_string(heredity.checked));
  Tally all;
  for (const Tally* t : {&smith, &hermite, &duals, &heredity}) {
    all.checked += t->checked;
    if (all.failed == 0 && t->failed > 0) all.first_failure = t->first_failure;
    all.failed += t->failed;
  }
  all.Finish(rec, "certificates");
  rec.passed = rec.passed && complexes > 0;
  return rec;
}

}  // namespace

std::vector<NamedMatroid> SuiteMatroids(int max_n) {
  std::vector<NamedMatroid> out;
  for (int n = 2; n <= max_n; ++n) {
    for (int r = 2; r <= n; ++r) {
      out.push_back({"U(" + std::to_string(r) + "," + std::to_string(n) + ")",
                     Uniform(r, n)});
    }
  }
  if (max_n >= 6) {
    out.push_back(
        {"M(K4)", Graphic({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}})});
  }
  if (max_n >= 7) out.push_back({"fano", Fano()});
  return out;
}

std::vector<CheckRecord> RunSuite(const SuiteOptions& opt,
                                  const std::string& golden) {
  if (opt.max_n < 2 || opt.max_n > kSuiteMaxGroundSet) {
    throw Error(ErrorCode::kInvalidParameters,
                "max-n must lie in [2, " + std::to_string(kSuiteMaxGroundSet) +
                    "], got " + std::to_string(opt.max_n));
  }
  const long long complexes_before = ChainComplexZ::VerifiedCount();
  const std::vector<NamedMatroid> suite = SuiteMatroids(opt.max_n);
  std::vector<CheckRecord> out;
  auto run = [&](auto&& make) {
    const auto start = std::chrono::steady_clock::now();
    out.push_back(make());
    if (opt.progress) {
      const std::chrono::duration<double> elapsed =
          std::chrono::steady_clock::now() - start;
      opt.progress(out.back().name, elapsed.count());
    }
  };
  run([&] { return FilteredCm(opt, suite); });
  run([&] { return BooleanShelling(opt); });
  run([&] { return RotaIdentity(suite); });
  run([&] { return RelativePair(opt, suite); });
  run([&] { return ComplementModel(suite); });
  run([&] { return AlexanderDuality(suite, opt.max_n); });
  run([&] { return Balancing(opt, suite); });
  run([&] {
    return GoldenRecord(kDisconnectedName, "disconnected filtration example",
                        "the worked example reproduces a disconnected "
                        "filtered lattice that fails cohen-macaulayness",
                        DisconnectedFiltrationRecord(), golden);
  });
  run([&] {
    return GoldenRecord(kFanoName, "fano integral defect",
                        "F_1 of the positive fano fan has index 2 in Z^6",
                        FanoDefectRecord(), golden);
  });
  run([&] { return RationalFraming(opt, suite); });
  run([&] { return HalflinkVanishing(opt, suite); });
  run([&] { return ConeIsomorphism(suite); });
  run([&] {
    return GoldenRecord(kU34Name, "U(3,4) halflink witness",
                        "the stated system is inconsistent and the cycle c "
                        "defines a nonzero halflink class",
                        U34WitnessRecord(), golden);
  });
  run([&] { return Infrastructure(opt, suite, complexes_before); });
  return out;
}

Report SuiteReport(const SuiteOptions& opt, const std::string& golden) {
  Report report("suite --seed " + std::to_string(opt.seed) + " --max-n " +
                std::to_string(opt.max_n));
  report.AddInput("paper examples golden file", golden);
  for (CheckRecord& rec : RunSuite(opt, golden)) report.Add(std::move(rec));
  return report;
}

}  // namespace trophom
