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

#ifndef TROPHOM_MATROID_H_
#define TROPHOM_MATROID_H_

#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "trophom/numeric.h"
#include "trophom/subset.h"

namespace trophom {

// A matroid on {1..n} stored by its lattice of flats, grouped by rank.
//
// Invariants (checked by every constructor):
//   * flats_by_rank()[0] holds exactly one flat, the closure of the empty
//     set; it is empty unless the matroid has loops;
//   * flats_by_rank()[rank()] holds exactly {1..n};
//   * the flats are closed under intersection;
//   * for every flat F of rank k < rank(), the rank-(k+1) flats above F
//     partition the complement of F.
//
// Only duals of matroids with coloops carry loops; every public
// constructor that takes user data rejects them.
class Matroid {
 public:
  // Validates a list of flats (order irrelevant, duplicates ignored).
  // Throws kNotALattice, kPartitionAxiomFails or kLoops.
  static Matroid FromFlats(int n, std::vector<Subset> flats);
  // Throws kExchangeAxiomFails or kLoops.
  static Matroid FromBases(int n, const std::vector<Subset>& bases);
  // Builds the flats from a rank oracle by repeated closure. The oracle is
  // trusted to be a matroid rank function; loops are permitted.
  static Matroid FromRankFunction(int n,
                                  const std::function<int(Subset)>& rank);

  int n() const { return n_; }
  int rank() const { return rank_; }
  Subset ground() const { return Subset::Full(n_); }
  Subset loops() const { return flats_by_rank_[0][0]; }
  bool loopless() const { return loops().empty(); }

  const std::vector<std::vector<Subset>>& flats_by_rank() const {
    return flats_by_rank_;
  }
  // Every flat, ordered by rank and canonically within a rank.
  std::vector<Subset> Flats() const;
  // Flats of rank 1..r-1.
  std::vector<Subset> ProperFlats() const;
  bool IsFlat(Subset s) const { return flat_rank_.contains(s); }
  // Rank of a flat; -1 if `s` is not a flat.
  int FlatRank(Subset s) const;

  Subset Closure(Subset s) const;
  int RankOf(Subset s) const;
  bool IsIndependent(Subset s) const { return RankOf(s) == s.size(); }
  bool IsSpanning(Subset s) const { return RankOf(s) == rank_; }

  // Flat-set equality (the canonical representation makes this exact).
  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.n_ == b.n_ && a.flats_by_rank_ == b.flats_by_rank_;
  }

  std::string Summary() const;

 private:
  Matroid(int n, std::vector<std::vector<Subset>> flats_by_rank);

  int n_ = 0;
  int rank_ = 0;
  std::vector<std::vector<Subset>> flats_by_rank_;
  std::unordered_map<Subset, int> flat_rank_;
};

// Uniform matroid U_{r,n}: every r-subset is a basis. Requires 0 <= r <= n.
Matroid Uniform(int r, int n);
// Free matroid on n elements, equal to Uniform(n, n).
Matroid Boolean(int n);
// The Fano plane with lines 123, 145, 167, 246, 257, 347, 356.
Matroid Fano();
// Cycle matroid of a loopless multigraph; edge i (1-based, in input order)
// joins the two listed vertices. Vertex labels are arbitrary integers.
Matroid Graphic(const std::vector<std::pair<int, int>>& edges);
// Simple rank-3 matroid whose lines with three or more points are `lines`;
// every pair of points not on a listed line spans a two-point line.
// Throws kInvalidParameters if two lines share more than one point.
Matroid FromLongLines(int n, const std::vector<Subset>& lines);

// A minor together with the dense relabeling of its ground set.
struct Minor {
  Matroid matroid;
  // to_original[i-1] is the element of the parent matroid that became i.
  std::vector<int> to_original;

  Subset ToOriginal(Subset s) const;
  // `s` must lie inside the minor's ground set, read in parent labels.
  Subset FromOriginal(Subset s) const;
};

// M|S on the elements of S, relabeled 1..|S| in increasing order.
Minor Restrict(const Matroid& m, Subset s);
// M/F on the complement of the flat F. Throws kNotAFlat for non-flats,
// since contracting a non-closed set creates loops.
Minor Contract(const Matroid& m, Subset flat);
// Matroid dual; rank(M*) = n - rank(M). Duals of matroids with coloops
// have loops.
Matroid Dual(const Matroid& m);

// mu(0^, 1^) of the lattice of flats.
BigInt Mobius(const Matroid& m);

// An exact rational weight on the ground set.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<Rational> entries);
  static Weight FromIntegers(const std::vector<long long>& entries);

  int n() const { return static_cast<int>(entries_.size()); }
  const std::vector<Rational>& entries() const { return entries_; }
  const Rational& operator[](int element) const {
    return entries_[element - 1];
  }
  Rational Dot(Subset s) const;
  Rational Total() const { return Dot(Subset::Full(n())); }
  // omega.sigma != 0 for every proper nonempty sigma; decided over all
  // 2^n subsets.
  bool generic() const { return generic_; }
  // First proper nonempty subset with zero weight, when not generic.
  Subset zero_subset() const { return zero_subset_; }
  // Weight restricted to `s`, relabeled densely.
  Weight Restrict(Subset s) const;

  std::string ToString() const;

 private:
  std::vector<Rational> entries_;
  bool generic_ = false;
  Subset zero_subset_;
};

}  // namespace trophom

#endif  // TROPHOM_MATROID_H_
