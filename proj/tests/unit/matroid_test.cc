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

#include "trophom/error.h"
#include "trophom/matroid.h"
#include "trophom/numeric.h"
#include "trophom/subset.h"

namespace trophom {
namespace {

TEST(SubsetTest, BasicOperations) {
  const Subset a = Subset::Of({1, 3});
  const Subset b = Subset::Of({1, 2, 3});
  EXPECT_EQ(a.size(), 2);
  EXPECT_TRUE(a.IsProperSubsetOf(b));
  EXPECT_FALSE(b.IsSubsetOf(a));
  EXPECT_EQ(b.Minus(a), Subset::Of({2}));
  EXPECT_EQ(a.Complement(4), Subset::Of({2, 4}));
  EXPECT_EQ(a.ToString(), "{1,3}");
  EXPECT_EQ(Subset().ToString(), "{}");
  EXPECT_EQ(b.max_element(), 3);
}

TEST(SubsetTest, CanonicalOrderIsBySizeThenLexicographic) {
  EXPECT_TRUE(CanonicalLess(Subset::Of({3}), Subset::Of({1, 2})));
  EXPECT_TRUE(CanonicalLess(Subset::Of({1, 3}), Subset::Of({2, 3})));
}

TEST(SubsetTest, GroundSetCap) {
  EXPECT_NO_THROW(CheckGroundSetSize(kMaxGroundSet));
  EXPECT_THROW(CheckGroundSetSize(kMaxGroundSet + 1), Error);
}

TEST(NumericTest, ParsesRationals) {
  EXPECT_EQ(ParseRational("-3/6"), Rational(-1, 2));
  EXPECT_EQ(ParseRational(" 7 "), Rational(7));
  EXPECT_EQ(ToString(Rational(4, 6)), "2/3");
  EXPECT_THROW(ParseRational("1/0"), Error);
  EXPECT_THROW(ParseRational("abc"), Error);
  const auto list = ParseRationalList("1, -3/2,4");
  ASSERT_EQ(list.size(), 3u);
  EXPECT_EQ(list[1], Rational(-3, 2));
}

TEST(MatroidTest, UniformFlatCounts) {
  const Matroid m = Uniform(2, 3);
  EXPECT_EQ(m.rank(), 2);
  EXPECT_EQ(m.ProperFlats().size(), 3u);
  const Matroid u35 = Uniform(3, 5);
  EXPECT_EQ(u35.ProperFlats().size(), 5u + 10u);
  EXPECT_TRUE(u35.IsFlat(Subset::Of({1, 2})));
  EXPECT_FALSE(u35.IsFlat(Subset::Of({1, 2, 3})));
  EXPECT_EQ(u35.Closure(Subset::Of({1, 2, 3})), Subset::Full(5));
}

TEST(MatroidTest, FanoHasSevenPointsAndSevenLines) {
  const Matroid f = Fano();
  EXPECT_EQ(f.rank(), 3);
  ASSERT_EQ(f.flats_by_rank().size(), 4u);
  EXPECT_EQ(f.flats_by_rank()[1].size(), 7u);
  EXPECT_EQ(f.flats_by_rank()[2].size(), 7u);
  for (Subset line : f.flats_by_rank()[2]) EXPECT_EQ(line.size(), 3);
}

TEST(MatroidTest, GraphicK4) {
  const Matroid k4 =
      Graphic({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  EXPECT_EQ(k4.n(), 6);
  EXPECT_EQ(k4.rank(), 3);
  // Four triangles and three pairs of disjoint edges.
  EXPECT_EQ(k4.flats_by_rank()[2].size(), 7u);
}

TEST(MatroidTest, RankAndIndependence) {
  const Matroid f = Fano();
  EXPECT_EQ(f.RankOf(Subset::Of({1, 2, 3})), 2);  // a line
  EXPECT_TRUE(f.IsIndependent(Subset::Of({1, 2, 4})));
  EXPECT_TRUE(f.IsSpanning(Subset::Of({1, 2, 4})));
}

TEST(MatroidTest, FromBasesMatchesUniform) {
  const Matroid m = Matroid::FromBases(
      3, {Subset::Of({1, 2}), Subset::Of({1, 3}), Subset::Of({2, 3})});
  EXPECT_EQ(m, Uniform(2, 3));
}

TEST(MatroidTest, RejectsInvalidFlatFamilies) {
  auto code_of = [](const std::vector<Subset>& flats) {
    try {
      (void)Matroid::FromFlats(4, flats);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInternal;
  };
  // Two lines through {1,2}: not closed under intersection.
  EXPECT_EQ(code_of({Subset(), Subset::Of({1}), Subset::Of({2}),
                     Subset::Of({3}), Subset::Of({4}), Subset::Of({1, 2, 3}),
                     Subset::Of({1, 2, 4}), Subset::Full(4)}),
            ErrorCode::kNotALattice);
  // A lattice in which the covers of {1} miss 3 and 4.
  EXPECT_EQ(code_of({Subset(), Subset::Of({1}), Subset::Of({2}),
                     Subset::Of({3}), Subset::Of({4}), Subset::Of({1, 2}),
                     Subset::Of({3, 4}), Subset::Full(4)}),
            ErrorCode::kPartitionAxiomFails);
}

TEST(MatroidTest, DualOfUniform) {
  EXPECT_EQ(Dual(Uniform(2, 3)), Uniform(1, 3));
  EXPECT_EQ(Dual(Uniform(2, 5)), Uniform(3, 5));
  EXPECT_EQ(Dual(Dual(Fano())), Fano());
}

TEST(MatroidTest, MobiusMatchesCharacteristicPolynomialValues) {
  // |mu| of U(r,n) is binom(n-1, r-1).
  EXPECT_EQ(Mobius(Uniform(2, 3)), BigInt(2));
  EXPECT_EQ(abs(Mobius(Uniform(3, 6))), BigInt(10));
  EXPECT_EQ(abs(Mobius(Boolean(5))), BigInt(1));
  // chi_Fano(q) = (q-1)(q-2)(q-4), so mu = chi(0) = -8.
  EXPECT_EQ(Mobius(Fano()), BigInt(-8));
}

TEST(MatroidTest, RestrictionAndContraction) {
  const Matroid f = Fano();
  const Minor line = Restrict(f, Subset::Of({1, 2, 3}));
  EXPECT_EQ(line.matroid, Uniform(2, 3));
  const Minor contracted = Contract(f, Subset::Of({1}));
  EXPECT_EQ(contracted.matroid.rank(), 2);
  EXPECT_EQ(contracted.matroid.n(), 6);
  EXPECT_EQ(contracted.matroid.ProperFlats().size(), 3u);
  EXPECT_THROW(Contract(f, Subset::Of({1, 2})), Error);
}

TEST(WeightTest, Genericity) {
  EXPECT_TRUE(Weight::FromIntegers({1, 2, 4}).generic());
  const Weight w = Weight::FromIntegers({1, 1, -2, 5});
  EXPECT_FALSE(w.generic());
  EXPECT_EQ(w.Dot(w.zero_subset()), 0);
  EXPECT_EQ(w.Dot(Subset::Of({1, 4})), 6);
  EXPECT_EQ(w.Total(), 5);
}

}  // namespace
}  // namespace trophom
