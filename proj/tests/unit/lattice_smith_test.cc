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

#include <random>

#include "trophom/int_matrix.h"
#include "trophom/lattice.h"
#include "trophom/smith.h"

namespace trophom {
namespace {

IntMatrix RandomMatrix(std::mt19937& rng, int rows, int cols, int bound) {
  IntMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      m(r, c) = static_cast<long long>(rng() % (2 * bound + 1)) - bound;
    }
  }
  return m;
}

TEST(SmithTest, KnownForm) {
  const IntMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  const SmithForm snf = SmithNormalForm(a);
  EXPECT_TRUE(VerifySmithCertificate(a, snf));
  ASSERT_EQ(snf.rank(), 3);
  EXPECT_EQ(snf.invariant_factors[0], 2);
  EXPECT_EQ(snf.invariant_factors[1], 6);
  EXPECT_EQ(snf.invariant_factors[2], 12);
  EXPECT_EQ(abs(Determinant(a)), 144);
}

TEST(SmithTest, CertificateRejectsTamperedForm) {
  const IntMatrix a{{2, 0}, {0, 3}};
  SmithForm snf = SmithNormalForm(a);
  EXPECT_EQ(snf.invariant_factors, (std::vector<BigInt>{1, 6}));
  snf.d(1, 1) = 7;
  EXPECT_FALSE(VerifySmithCertificate(a, snf));
}

TEST(SmithTest, DenseAndSparseAgreeOnRandomMatrices) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 7);
    const int cols = 1 + static_cast<int>(rng() % 7);
    const IntMatrix a = RandomMatrix(rng, rows, cols, trial % 2 ? 3 : 40);
    const SmithForm snf = SmithNormalForm(a);
    ASSERT_TRUE(VerifySmithCertificate(a, snf)) << a.ToString();
    for (int k = 1; k < snf.rank(); ++k) {
      EXPECT_EQ(snf.invariant_factors[k] % snf.invariant_factors[k - 1], 0);
    }
    EXPECT_EQ(DenseSmithInvariants(a), SparseSmithInvariants(SparseIntMatrix::FromDense(a)));
    if (rows == cols) {
      BigInt product = 1;
      for (const BigInt& f : snf.invariant_factors) product *= f;
      EXPECT_EQ(snf.rank() == rows ? product : BigInt(0), abs(Determinant(a)));
    }
  }
}

TEST(SmithTest, SparseFallsBackOnOverflow) {
  const long long big = 1LL << 40;
  const IntMatrix a{{big, 3, 0}, {5, big, 7}, {0, 11, big}};
  EXPECT_EQ(DenseSmithInvariants(a), SparseSmithInvariants(SparseIntMatrix::FromDense(a)));
}

TEST(LatticeTest, HermiteBasis) {
  const IntMatrix g{{2, 4}, {4, 2}};
  const IntMatrix h = HermiteBasis(g);
  EXPECT_EQ(h, (IntMatrix{{2, 4}, {0, 6}}));
  EXPECT_TRUE(VerifyHermiteBasis(g, h));
  EXPECT_FALSE(VerifyHermiteBasis(g, IntMatrix{{2, 0}, {0, 6}}));
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const IntMatrix a = RandomMatrix(rng, 1 + trial % 6, 4, 9);
    EXPECT_TRUE(VerifyHermiteBasis(a, HermiteBasis(a)));
  }
}

TEST(LatticeTest, SolveKernelSaturation) {
  EXPECT_FALSE(SolveInteger(IntMatrix{{2}}, {BigInt(3)}).has_value());
  EXPECT_EQ(*SolveInteger(IntMatrix{{2}}, {BigInt(4)}), (IntVector{2}));
  const IntMatrix k = IntegerKernel(IntMatrix{{1, 1, 1}});
  EXPECT_EQ(k.rows(), 2);
  for (int r = 0; r < k.rows(); ++r) {
    EXPECT_EQ(k(r, 0) + k(r, 1) + k(r, 2), 0);
  }
  EXPECT_EQ(Saturation(IntMatrix{{2, 4}}), (IntMatrix{{1, 2}}));
  EXPECT_EQ(*CoordinatesIn(IntMatrix{{2, 4}, {0, 6}}, {BigInt(2), BigInt(10)}),
            (IntVector{1, 1}));
  EXPECT_FALSE(CoordinatesIn(IntMatrix{{2, 4}, {0, 6}}, {BigInt(1), BigInt(0)}));
}

TEST(LatticeTest, ExteriorPowers) {
  EXPECT_EQ(ExteriorBasis(4, 2).size(), 6u);
  EXPECT_EQ(Binomial(6, 3), 20);
  EXPECT_EQ(Wedge(IntMatrix{{1, 0, 0}, {0, 1, 0}}), (IntVector{1, 0, 0}));
  EXPECT_EQ(Wedge(IntMatrix{{0, 1, 0}, {1, 0, 0}}), (IntVector{-1, 0, 0}));
  // (1,1,0) ∧ (0,1,1) = e01 + e02 + e12.
  EXPECT_EQ(Wedge(IntMatrix{{1, 1, 0}, {0, 1, 1}}), (IntVector{1, 1, 1}));
  EXPECT_EQ(PLattice::ExteriorPower(3, 2, IntMatrix::Identity(3)),
            PLattice::Full(3, 2));
  EXPECT_EQ(PLattice::Full(3, 0).rank(), 1);
}

TEST(LatticeTest, IndexAndContainment) {
  const PLattice full = PLattice::Full(2, 1);
  const PLattice sub = PLattice::FromGenerators(2, 1, IntMatrix{{2, 0}, {1, 1}});
  EXPECT_TRUE(full.Contains(sub));
  EXPECT_FALSE(sub.Contains(IntVector{1, 0}));
  EXPECT_EQ(*LatticeIndex(sub, full), 2);
  const PLattice line = PLattice::FromGenerators(2, 1, IntMatrix{{1, 1}});
  EXPECT_FALSE(LatticeIndex(line, full).has_value());
  EXPECT_EQ(line.Sum(PLattice::FromGenerators(2, 1, IntMatrix{{1, -1}})), sub);
}

}  // namespace
}  // namespace trophom
