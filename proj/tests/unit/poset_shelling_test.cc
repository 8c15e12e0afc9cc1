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
#include <random>

#include "trophom/error.h"
#include "trophom/homology.h"
#include "trophom/paper_examples.h"
#include "trophom/poset.h"
#include "trophom/shelling.h"

namespace trophom {
namespace {

TEST(PosetTest, ProperLatticeOfBoolean) {
  const Poset p = ProperLattice(Boolean(3));
  EXPECT_EQ(p.size(), 6);
  EXPECT_EQ(p.Height(), 2);
  EXPECT_EQ(p.MaximalChains().size(), 6u);
  EXPECT_EQ(p.MinimalElements().size(), 3u);
  EXPECT_TRUE(p.Less(p.IndexOf(Subset::Of({1})), p.IndexOf(Subset::Of({1, 2}))));
  EXPECT_THROW(ProperLattice(Uniform(1, 3)), Error);
  EXPECT_EQ(FullLattice(Boolean(3)).size(), 8);
}

TEST(PosetTest, FilteredUniformExamples) {
  // Exactly one positive weight: L^{>0} is a single point.
  const Poset p = Filtered(ProperLattice(Uniform(2, 3)),
                           Weight::FromIntegers({2, -1, -1}), 0);
  EXPECT_EQ(p.ToString(), "{{1}}");
  ASSERT_TRUE(p.filter().has_value());
  EXPECT_TRUE(p.filter()->t_in_range);
  EXPECT_TRUE(p.filter()->fully_generic);
  EXPECT_TRUE(ReducedHomology(BuildOrderComplex(p).complex).AllZero());
}

TEST(PosetTest, FilteredBooleanProperPart) {
  const Poset p = Filtered(ProperLattice(Boolean(3)), Weight::FromIntegers({5, -1, -3}), 0);
  EXPECT_EQ(p.ToString(), "{{1},{1,2},{1,3}}");
}

TEST(PosetTest, FilteredRejectsWeightVanishingOnAnElement) {
  EXPECT_THROW(Filtered(ProperLattice(Uniform(2, 3)),
                        Weight::FromIntegers({0, 1, 2}), -10),
               Error);
  // Vanishing on a non-flat is only recorded.
  const Poset p = Filtered(ProperLattice(Uniform(2, 3)),
                           Weight::FromIntegers({1, -1, 5}), -10);
  EXPECT_FALSE(p.filter()->fully_generic);
}

TEST(PosetTest, TInRange) {
  const Weight w = Weight::FromIntegers({3, -5, 1});
  EXPECT_TRUE(TInRange(w, -1));
  EXPECT_FALSE(TInRange(w, Rational(-1, 2)));
  EXPECT_TRUE(TInRange(Weight::FromIntegers({1, 2}), 0));
}

TEST(PosetTest, DisconnectedExample) {
  const Poset p = Filtered(ProperLattice(DisconnectedExampleMatroid()),
                           Weight::FromIntegers({1, 1, -3, -3, -3, 1, 1}), 0);
  EXPECT_EQ(p.ToString(), "{{1},{2},{6},{7},{1,2},{6,7}}");
  EXPECT_FALSE(p.filter()->t_in_range);
  const OrderComplex oc = BuildOrderComplex(p);
  EXPECT_EQ(ReducedHomology(oc.complex).At(0).betti, 1);
  EXPECT_EQ(CmOverZ(oc.complex).verdict, CmResult::Verdict::kFail);
}

TEST(PosetTest, PrintedExampleFlatsViolateThePartitionAxiom) {
  std::vector<Subset> flats = PrintedExampleFlats();
  flats.push_back(Subset());
  flats.push_back(Subset::Full(7));
  try {
    (void)Matroid::FromFlats(7, flats);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPartitionAxiomFails);
  }
}

TEST(PosetTest, IntervalsAndOrderComplex) {
  const Poset full = FullLattice(Fano());
  const Poset below = Lower(full, Subset::Of({1, 2, 3}));
  EXPECT_EQ(below.ToString(), "{{},{1},{2},{3}}");
  const Poset open = Interval(full, Subset(), Subset::Of({1, 2, 3}));
  EXPECT_EQ(open.size(), 3);
  EXPECT_EQ(Upper(full, Subset::Of({1})).size(), 4);  // three lines, [7]
  EXPECT_THROW(Interval(full, Subset::Of({1}), Subset::Of({2, 4, 6})), Error);

  const OrderComplex empty = BuildOrderComplex(Poset(3, {}));
  EXPECT_EQ(empty.complex, SimplicialComplex::EmptyFace());

  const Poset lattice = ProperLattice(Uniform(3, 4));
  const Poset sub = Filtered(lattice, Weight::FromIntegers({5, 2, -3, -7}), -4);
  const OrderComplex ambient = BuildOrderComplex(lattice);
  const OrderComplex inside = BuildOrderComplex(sub, lattice);
  for (const Face& f : inside.complex.facets()) {
    EXPECT_TRUE(ambient.complex.Contains(f));
  }
}

TEST(PosetTest, HeredityOnAllIntervals) {
  std::mt19937 rng(3);
  for (const Matroid& m : {Uniform(3, 5), Fano(), Boolean(4)}) {
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<long long> raw(m.n());
      Weight w;
      do {
        for (auto& x : raw) x = static_cast<long long>(rng() % 41) - 20;
        w = Weight::FromIntegers(raw);
      } while (!w.generic());
      const Rational t = std::min(Rational(0), w.Total()) - 1;
      const auto flats = m.Flats();
      for (Subset a : flats) {
        for (Subset b : flats) {
          if (a.IsProperSubsetOf(b)) {
            EXPECT_TRUE(HeredityCheck(m, w, t, a, b));
          }
        }
      }
    }
  }
  EXPECT_THROW(HeredityCheck(Fano(), Weight::FromIntegers({1, 2, 4, 8, 16, 32, 64}),
                             -1, Subset::Of({1, 2}), Subset::Full(7)),
               Error);
}

TEST(ShellingTest, BooleanLexShelling) {
  const Weight w = Weight::FromIntegers({3, -1, 2, -6});
  const ShellingOrder order = LexShellingBoolean(4, w, -2);
  ASSERT_FALSE(order.facets.empty());
  EXPECT_EQ(order.permutations[0], (std::vector<int>{1, 3, 2, 4}));
  EXPECT_TRUE(VerifyShelling(order.order_complex.complex, order.facets).passed);
  EXPECT_EQ(order.facets.size(), order.order_complex.complex.facets().size());
  EXPECT_THROW(LexShellingBoolean(4, w, 0), Error);  // 0 > ω·[n] = -2
}

TEST(ShellingTest, LexShellingSmallExamples) {
  const ShellingOrder three = LexShellingBoolean(3, Weight::FromIntegers({5, -1, -3}), 0);
  EXPECT_EQ(three.order_complex.FacetString(), "[({1}<{1,2}),({1}<{1,3})]");
  EXPECT_TRUE(VerifyShelling(three.order_complex.complex, three.facets).passed);

  // The weight vanishes on {2,3}; the tie-break still orders the labels.
  const ShellingOrder four = LexShellingBoolean(4, Weight::FromIntegers({3, 1, -1, -2}), 0);
  EXPECT_EQ(four.permutations[0], (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(four.facets.size(), 6u);
  EXPECT_TRUE(VerifyShelling(four.order_complex.complex, four.facets).passed);
}

TEST(ShellingTest, VerifyShellingDetectsBadOrders) {
  // A path 1-2-3-4: starting at both ends breaks the condition.
  const auto path = SimplicialComplex::FromFacets({{1, 2}, {2, 3}, {3, 4}});
  EXPECT_TRUE(VerifyShelling(path, {{1, 2}, {2, 3}, {3, 4}}).passed);
  const ShellingVerdict bad = VerifyShelling(path, {{1, 2}, {3, 4}, {2, 3}});
  EXPECT_FALSE(bad.passed);
  EXPECT_EQ(bad.violating_index, 2);
  EXPECT_THROW(VerifyShelling(path, {{1, 2}, {2, 3}}), Error);
  EXPECT_THROW(VerifyShelling(SimplicialComplex::FromFacets({{1, 2}, {3}}),
                              {{1, 2}, {3}}),
               Error);
}

TEST(ShellingTest, BruteForce) {
  const auto path = SimplicialComplex::FromFacets({{1, 2}, {3, 4}, {2, 3}});
  const auto order = BruteForceShellable(path);
  ASSERT_TRUE(order.has_value());
  EXPECT_TRUE(VerifyShelling(path, *order).passed);
  EXPECT_FALSE(
      BruteForceShellable(SimplicialComplex::FromFacets({{1, 2}, {3, 4}}))
          .has_value());
  std::vector<Face> many;
  for (int v = 1; v <= kBruteForceFacetCap + 1; ++v) many.push_back({v});
  EXPECT_THROW(BruteForceShellable(SimplicialComplex::FromFacets(many)), Error);
}

}  // namespace
}  // namespace trophom
