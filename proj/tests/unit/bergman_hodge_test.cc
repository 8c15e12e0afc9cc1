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

#include <gtest/gtest.h>

#include <algorithm>

#include "trophom/bergman.h"
#include "trophom/error.h"
#include "trophom/hodge.h"
#include "trophom/homology.h"

namespace trophom {
namespace {

Halfspace Normal(std::initializer_list<long long> entries) {
  Halfspace h;
  for (long long x : entries) h.normal.push_back(BigInt(x));
  return h;
}

TEST(CircuitTest, StandardAndAlternate) {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& c : {StandardCircuit(n), AlternateCircuit(n)}) {
      EXPECT_TRUE(c.SumsToZero());
      EXPECT_TRUE(c.EverySubsetUnimodular());
      EXPECT_EQ(c.d(), n - 1);
    }
  }
  EXPECT_EQ(StandardCircuit(3).Ray(Subset::Of({1, 3})), (IntVector{0, -1}));
}

TEST(BergmanFanTest, ConesAndDimensions) {
  const BergmanFan u23(Uniform(2, 3));
  EXPECT_EQ(u23.lattice().size(), 3);
  EXPECT_EQ(u23.MaximalCones().size(), 3u);
  EXPECT_TRUE(u23.ConeDimensionsMatchChains());

  const BergmanFan fano(Fano());
  EXPECT_EQ(fano.MaximalCones().size(), 21u);  // flag (point, line) pairs
  EXPECT_EQ(fano.ConesOfDimension(1).size(), 14u);
  EXPECT_EQ(fano.ConeDimension({Subset::Of({1}), Subset::Of({1, 2, 3})}), 2);
  EXPECT_TRUE(fano.ConeDimensionsMatchChains());
}

TEST(BergmanFanTest, Balancing) {
  const BergmanFan u23(Uniform(2, 3));
  const BalanceResult origin = BalancingCheck(u23, {});
  EXPECT_TRUE(origin.passed);
  EXPECT_EQ(origin.completions, 3);
  EXPECT_EQ(origin.sum, (IntVector{0, 0}));

  const BergmanFan fano(Fano());
  const BalanceResult point = BalancingCheck(fano, {Subset::Of({1})});
  EXPECT_TRUE(point.passed);
  EXPECT_EQ(point.completions, 3);
  for (const auto& chain : CodimensionOneChains(fano)) {
    EXPECT_TRUE(BalancingCheck(fano, chain).passed);
  }
  EXPECT_THROW(BalancingCheck(fano, {Subset::Of({1, 2})}), Error);
  EXPECT_THROW(BalancingCheck(fano, {Subset::Of({1}), Subset::Of({1, 2, 3})}),
               Error);
}

TEST(BergmanFanTest, AlternateCircuitStillBalances) {
  const BergmanFan fan(Uniform(3, 5), AlternateCircuit(5));
  for (const auto& chain : CodimensionOneChains(fan)) {
    EXPECT_TRUE(BalancingCheck(fan, chain).passed);
  }
}

TEST(BergmanFanTest, LocalFans) {
  const auto [restriction, contraction] = LocalFans(Fano(), Subset::Of({1, 2, 3}));
  EXPECT_EQ(restriction.matroid, Uniform(2, 3));
  EXPECT_EQ(contraction.matroid, Uniform(1, 4));
  EXPECT_THROW(LocalFans(Fano(), Subset::Of({1, 2})), Error);
}

TEST(HalfspaceTest, InducedWeightAndPositivePart) {
  const BergmanFan fano(Fano());
  const Halfspace h = Normal({4, 4, 4, -3, -3, -3});
  EXPECT_EQ(InducedWeight(fano.circuit(), h).ToString(), "(4,4,4,-3,-3,-3,-3)");
  const PositivePart plus = ComputePositivePart(fano, h);
  EXPECT_EQ(plus.poset.ToString(), "{{1},{2},{3},{1,2,3}}");
  const PositivePart minus = ComputePositivePart(fano, h.Negated());
  std::vector<Subset> all = plus.poset.elements();
  all.insert(all.end(), minus.poset.elements().begin(), minus.poset.elements().end());
  std::sort(all.begin(), all.end(), CanonicalLess);
  EXPECT_EQ(all, fano.lattice().elements());
  EXPECT_EQ(Halfspace::FromRationals({Rational(1, 2), Rational(-1, 3)}).normal,
            (IntVector{3, -2}));
  EXPECT_THROW(ComputePositivePart(BergmanFan(Uniform(3, 4)), Normal({1, -1, 0})),
               Error);
}

TEST(HalfspaceTest, LefschetzPair) {
  const LefschetzResult r = LefschetzPair(BergmanFan(Uniform(3, 4)), Normal({1, 1, 1}));
  EXPECT_TRUE(r.passed);
  EXPECT_TRUE(r.homology.ConcentratedIn(1));
  const LefschetzResult f = LefschetzPair(BergmanFan(Fano()), Normal({4, 4, 4, -3, -3, -3}));
  EXPECT_TRUE(f.passed);
  const LefschetzResult u = LefschetzPair(BergmanFan(Uniform(2, 3)), Normal({2, -1}));
  EXPECT_TRUE(u.passed);
  EXPECT_TRUE(u.homology.ConcentratedIn(0));
  EXPECT_EQ(u.homology.At(0).betti, 2);
}

TEST(PGroupTest, FanoIntegralDefect) {
  const FanoWitness w = TorsionWitnessFano();
  EXPECT_TRUE(w.full_is_standard);
  ASSERT_TRUE(w.comparison.index.has_value());
  EXPECT_EQ(*w.comparison.index, 2);
  EXPECT_TRUE(w.theta_even_on_generators);
  EXPECT_EQ(w.theta_on_4, 1);
  EXPECT_TRUE(w.rational_comparison.rank_equal);
}

TEST(PGroupTest, CacheMatchesDirectComputation) {
  const BergmanFan fan(Uniform(3, 5));
  PGroupCache cache(fan);
  for (const Halfspace& h : {Normal({5, -1, 11, -2}), Normal({-7, 2, 1, 9})}) {
    for (int p = 0; p <= 3; ++p) {
      const PComparison direct = HalfspacePComparison(fan, h, p, Ring::kInt);
      const PComparison cached = HalfspacePComparison(cache, h, p, Ring::kInt);
      EXPECT_EQ(direct.index, cached.index);
      EXPECT_EQ(direct.full, cache.Full(p));
    }
  }
  EXPECT_EQ(cache.Full(1), PLattice::Full(4, 1));
}

TEST(PQTest, LinkWithTrivialCoefficientsIsTheOrderComplex) {
  for (const Matroid& m : {Uniform(2, 4), Uniform(3, 5), Fano()}) {
    const BergmanFan fan(m);
    const HomologyProfile pq = PQHomology(BuildPQComplex(fan, Region::kLink, 0, Ring::kInt));
    const HomologyProfile h = ReducedHomology(fan.cones().complex);
    for (int q = -1; q <= m.rank(); ++q) EXPECT_EQ(pq.At(q), h.At(q)) << q;
  }
}

TEST(PQTest, ConeIsomorphismOnSmallFans) {
  for (const Matroid& m : {Uniform(3, 4), Fano()}) {
    const BergmanFan fan(m);
    for (int p = 0; p < m.rank(); ++p) {
      EXPECT_TRUE(ConeIsoCheck(fan, p, Ring::kInt).passed) << p;
      EXPECT_TRUE(ConeIsoCheck(fan, p, Ring::kRat).passed) << p;
    }
  }
}

TEST(PQTest, HalfLinkNeedsAHalfspace) {
  const BergmanFan fan(Uniform(3, 4));
  EXPECT_THROW(BuildPQComplex(fan, Region::kHalfLink, 1, Ring::kRat), Error);
  const Halfspace h = Normal({1, 1, 1});
  const PQComplex k = BuildPQComplex(fan, Region::kHalfLink, 0, Ring::kRat, &h);
  EXPECT_EQ(PQHomology(k).At(-1), HomologyGroup{});
}

TEST(PQTest, U34Witness) {
  const U34Witness w = MakeU34Witness();
  EXPECT_FALSE(w.stated_system_consistent);
  EXPECT_TRUE(w.boundary_system_consistent);
  EXPECT_TRUE(w.c_is_cycle);
  EXPECT_TRUE(w.c_is_boundary);
  EXPECT_FALSE(w.class_nonzero());
  EXPECT_EQ(w.preimage.size(), 6u);
  EXPECT_TRUE(w.halflink_homology.AllZero());
}

}  // namespace
}  // namespace trophom
