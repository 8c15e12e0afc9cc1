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
#include <vector>

#include "trophom/error.h"
#include "trophom/homology.h"
#include "trophom/matroid.h"
#include "trophom/simplicial_complex.h"

namespace trophom {
namespace {

SimplicialComplex ProjectivePlane() {
  return SimplicialComplex::FromFacets(
      {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
       {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}});
}

SimplicialComplex Boundary(int n) {  // boundary of the simplex on [n]
  std::vector<Face> facets;
  for (int skip = 1; skip <= n; ++skip) {
    Face f;
    for (int v = 1; v <= n; ++v) {
      if (v != skip) f.push_back(v);
    }
    facets.push_back(f);
  }
  return SimplicialComplex::FromFacets(facets);
}

// Rank over Q by Gaussian elimination on rationals.
int RationalRank(std::vector<std::vector<Rational>> m) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (int k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Reduced rational Betti numbers from scratch: faces by size, boundary
// ranks by elimination.
std::vector<int> OracleBetti(const SimplicialComplex& c) {
  const auto& by_dim = c.FacesByDimension();  // index 0 is the empty face
  const int top = static_cast<int>(by_dim.size());
  std::vector<int> ranks(top + 1, 0);
  for (int k = 1; k < top; ++k) {
    std::vector<std::vector<Rational>> m(
        by_dim[k - 1].size(), std::vector<Rational>(by_dim[k].size(), 0));
    for (std::size_t j = 0; j < by_dim[k].size(); ++j) {
      const Face& f = by_dim[k][j];
      for (std::size_t drop = 0; drop < f.size(); ++drop) {
        Face g = f;
        g.erase(g.begin() + drop);
        const auto it =
            std::find(by_dim[k - 1].begin(), by_dim[k - 1].end(), g);
        m[it - by_dim[k - 1].begin()][j] = drop % 2 == 0 ? 1 : -1;
      }
    }
    ranks[k] = RationalRank(m);
  }
  std::vector<int> betti;
  for (int k = 0; k < top; ++k) {
    betti.push_back(static_cast<int>(by_dim[k].size()) - ranks[k] -
                    ranks[k + 1]);
  }
  return betti;  // betti[k] is H̃_{k-1}
}

TEST(ComplexTest, FacetsAreReduced) {
  const auto c = SimplicialComplex::FromFacets({{1, 2}, {1}, {2, 3}, {1, 2}});
  EXPECT_EQ(c.facets().size(), 2u);
  EXPECT_TRUE(c.Contains({1}));
  EXPECT_TRUE(c.Contains({}));
  EXPECT_FALSE(c.Contains({1, 3}));
  EXPECT_EQ(c.dimension(), 1);
  EXPECT_EQ(c.NumFaces(), 6u);  // ∅, 3 vertices, 2 edges
}

TEST(ComplexTest, LinkStarAndDeletion) {
  const SimplicialComplex s = SimplicialComplex::Simplex({1, 2, 3});
  EXPECT_EQ(Link(s, {1}), SimplicialComplex::FromFacets({{2, 3}}));
  EXPECT_EQ(Star(Boundary(3), {1}),
            SimplicialComplex::FromFacets({{1, 2}, {1, 3}}));
  EXPECT_EQ(DeleteVertices(s, {2}), SimplicialComplex::FromFacets({{1, 3}}));
  EXPECT_EQ(InducedSubcomplex(Boundary(4), {1, 2, 3}),
            SimplicialComplex::Simplex({1, 2, 3}));
  EXPECT_THROW(Link(s, {4}), Error);
}

TEST(ComplexTest, JoinAndCone) {
  const auto points = SimplicialComplex::FromFacets({{1}, {2}});
  const auto other = SimplicialComplex::FromFacets({{3}, {4}});
  const auto square = Join(points, other);
  EXPECT_EQ(square.facets().size(), 4u);
  EXPECT_EQ(ReducedHomology(square).At(1).betti, 1);
  EXPECT_THROW(Join(points, points), Error);
  EXPECT_TRUE(ReducedHomology(Cone(ProjectivePlane())).AllZero());
}

TEST(ComplexTest, MatroidComplexes) {
  const Matroid m = Uniform(2, 3);
  EXPECT_EQ(IndependenceComplex(m), Boundary(3));
  EXPECT_EQ(NonspanningComplex(m),
            SimplicialComplex::FromFacets({{1}, {2}, {3}}));
  EXPECT_EQ(CospanningComplex(m), IndependenceComplex(Dual(m)));
}

TEST(ComplexTest, AlexanderDualOfNonspanningComplex) {
  const auto dual = AlexanderDual(NonspanningComplex(Uniform(2, 3)), {1, 2, 3});
  EXPECT_EQ(dual, IndependenceComplex(Uniform(1, 3)));
  // The dual of the empty-face complex is the boundary of the simplex.
  EXPECT_EQ(AlexanderDual(SimplicialComplex::EmptyFace(), {1, 2, 3, 4}),
            Boundary(4));
  EXPECT_TRUE(AlexanderDual(SimplicialComplex::Simplex({1, 2}), {1, 2}).is_void());
}

TEST(HomologyTest, SpheresAndPoints) {
  for (int n = 2; n <= 6; ++n) {
    const HomologyProfile h = ReducedHomology(Boundary(n));
    EXPECT_TRUE(h.ConcentratedIn(n - 2));
    EXPECT_EQ(h.At(n - 2).betti, 1);
  }
  const HomologyProfile empty = ReducedHomology(SimplicialComplex::EmptyFace());
  EXPECT_EQ(empty.At(-1).betti, 1);
  EXPECT_THROW(ReducedHomology(SimplicialComplex::Void()), Error);
}

TEST(HomologyTest, ProjectivePlaneHasTwoTorsion) {
  const HomologyProfile h = ReducedHomology(ProjectivePlane());
  EXPECT_EQ(h.At(0), HomologyGroup{});
  EXPECT_EQ(h.At(1), (HomologyGroup{0, {BigInt(2)}}));
  EXPECT_EQ(h.At(2), HomologyGroup{});
  EXPECT_EQ(h.At(1).ToString(), "Z/2");
  EXPECT_TRUE(EulerCheck(ProjectivePlane(), h));
}

TEST(HomologyTest, MatchesRationalOracleOnRandomComplexes) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Face> facets;
    const int count = 2 + static_cast<int>(rng() % 6);
    for (int k = 0; k < count; ++k) {
      Face f;
      for (int v = 1; v <= 7; ++v) {
        if (rng() % 2) f.push_back(v);
      }
      if (f.size() > 4) f.resize(4);
      facets.push_back(f);
    }
    const auto c = SimplicialComplex::FromFacets(facets);
    const HomologyProfile h = ReducedHomology(c);
    const std::vector<int> oracle = OracleBetti(c);
    for (std::size_t k = 0; k < oracle.size(); ++k) {
      EXPECT_EQ(h.At(static_cast<int>(k) - 1).betti, oracle[k])
          << c.ToString() << " degree " << static_cast<int>(k) - 1;
    }
    EXPECT_TRUE(EulerCheck(c, h));
  }
}

TEST(HomologyTest, RelativeHomology) {
  const auto disk = SimplicialComplex::Simplex({1, 2, 3});
  const HomologyProfile rel = RelativeHomology(disk, Boundary(3));
  EXPECT_TRUE(rel.ConcentratedIn(2));
  EXPECT_EQ(rel.At(2).betti, 1);
  // Relative to the empty face: unreduced homology.
  const auto points = SimplicialComplex::FromFacets({{1}, {2}, {3}});
  EXPECT_EQ(RelativeHomology(points, SimplicialComplex::EmptyFace()).At(0).betti,
            3);
  EXPECT_THROW(RelativeHomology(Boundary(3), SimplicialComplex::Simplex({1, 4})),
               Error);
}

TEST(CohenMacaulayTest, Verdicts) {
  EXPECT_TRUE(CmOverZ(Boundary(4)).passed());
  EXPECT_TRUE(CmOverZ(SimplicialComplex::Simplex({1, 2, 3})).passed());

  const CmResult disjoint =
      CmOverZ(SimplicialComplex::FromFacets({{1, 2}, {3, 4}}));
  EXPECT_EQ(disjoint.verdict, CmResult::Verdict::kFail);
  EXPECT_TRUE(disjoint.witness.empty());
  EXPECT_EQ(disjoint.degree, 0);

  // Two triangles sharing a vertex: the link of that vertex is disconnected.
  const CmResult bowtie =
      CmOverZ(SimplicialComplex::FromFacets({{1, 2, 3}, {3, 4, 5}}));
  EXPECT_EQ(bowtie.verdict, CmResult::Verdict::kFail);
  EXPECT_EQ(bowtie.witness, Face({3}));

  EXPECT_EQ(CmOverZ(SimplicialComplex::FromFacets({{1, 2}, {3}})).verdict,
            CmResult::Verdict::kNotPure);
}

TEST(CohenMacaulayTest, ProjectivePlaneFailsOverZ) {
  const CmResult r = CmOverZ(ProjectivePlane());
  EXPECT_EQ(r.verdict, CmResult::Verdict::kFail);
  EXPECT_EQ(r.degree, 1);
  EXPECT_EQ(r.group.ToString(), "Z/2");
}

TEST(WedgeTest, Profiles) {
  const auto three_points = SimplicialComplex::FromFacets({{1}, {2}, {3}});
  const WedgeResult w = WedgeProfile(three_points, 0);
  EXPECT_TRUE(w.passed);
  EXPECT_EQ(w.sphere_count, 2);
  EXPECT_FALSE(WedgeProfile(ProjectivePlane(), 2).passed);
  EXPECT_FALSE(WedgeProfile(Boundary(4), 1).passed);
}

}  // namespace
}  // namespace trophom
