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

#include "trophom/matroid.h"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "trophom/error.h"

namespace trophom {
namespace {

void SortCanonical(std::vector<Subset>& v) {
  std::sort(v.begin(), v.end(), CanonicalLess);
}

// Checks the cover-partition axiom for every flat of rank < r.
void CheckPartitionAxiom(int n,
                         const std::vector<std::vector<Subset>>& by_rank) {
  const int r = static_cast<int>(by_rank.size()) - 1;
  for (int k = 0; k < r; ++k) {
    for (Subset f : by_rank[k]) {
      std::uint32_t covered = 0;
      for (Subset g : by_rank[k + 1]) {
        if (!f.IsSubsetOf(g)) continue;
        std::uint32_t part = g.Minus(f).bits();
        if (covered & part) {
          throw Error(ErrorCode::kPartitionAxiomFails,
                      "covers of " + f.ToString() + " overlap outside it");
        }
        covered |= part;
      }
      if (covered != f.Complement(n).bits()) {
        throw Error(ErrorCode::kPartitionAxiomFails,
                    "covers of " + f.ToString() + " miss " +
                        Subset(f.Complement(n).bits() & ~covered).ToString());
      }
    }
  }
}

}  // namespace

Matroid::Matroid(int n, std::vector<std::vector<Subset>> flats_by_rank)
    : n_(n),
      rank_(static_cast<int>(flats_by_rank.size()) - 1),
      flats_by_rank_(std::move(flats_by_rank)) {
  for (auto& level : flats_by_rank_) SortCanonical(level);
  for (int k = 0; k <= rank_; ++k) {
    for (Subset f : flats_by_rank_[k]) flat_rank_[f] = k;
  }
}

Matroid Matroid::FromFlats(int n, std::vector<Subset> flats) {
  CheckGroundSetSize(n);
  if (flats.empty()) {
    throw Error(ErrorCode::kInvalidParameters, "empty flat list");
  }
  for (Subset f : flats) {
    if (!f.FitsIn(n)) {
      throw Error(ErrorCode::kInvalidParameters,
                  "flat " + f.ToString() + " not inside the ground set");
    }
  }
  std::sort(flats.begin(), flats.end(), CanonicalLess);
  flats.erase(std::unique(flats.begin(), flats.end()), flats.end());
  std::unordered_set<Subset> lookup(flats.begin(), flats.end());
  if (!lookup.contains(Subset::Full(n))) {
    throw Error(ErrorCode::kNotALattice, "ground set is not listed as a flat");
  }
  for (std::size_t i = 0; i < flats.size(); ++i) {
    for (std::size_t j = i + 1; j < flats.size(); ++j) {
      Subset meet = flats[i].Intersect(flats[j]);
      if (!lookup.contains(meet)) {
        throw Error(ErrorCode::kNotALattice,
                    "intersection of " + flats[i].ToString() + " and " +
                        flats[j].ToString() + " is not a flat");
      }
    }
  }
  // Closed under intersection, so the first (smallest) flat is the minimum.
  if (!flats.front().empty()) {
    throw Error(ErrorCode::kLoops,
                "minimal flat " + flats.front().ToString() + " is nonempty");
  }
  // Rank = length of the longest chain from the bottom. Flats are sorted by
  // cardinality, so every proper subflat precedes its superflats.
  std::vector<int> rank(flats.size(), 0);
  for (std::size_t i = 1; i < flats.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (flats[j].IsProperSubsetOf(flats[i])) {
        rank[i] = std::max(rank[i], rank[j] + 1);
      }
    }
  }
  const int r = rank.back();
  std::vector<std::vector<Subset>> by_rank(r + 1);
  for (std::size_t i = 0; i < flats.size(); ++i) {
    by_rank[rank[i]].push_back(flats[i]);
  }
  if (by_rank[r].size() != 1) {
    throw Error(ErrorCode::kNotALattice, "more than one flat of top rank");
  }
  CheckPartitionAxiom(n, by_rank);
  return Matroid(n, std::move(by_rank));
}

Matroid Matroid::FromBases(int n, const std::vector<Subset>& bases) {
  CheckGroundSetSize(n);
  if (bases.empty()) {
    throw Error(ErrorCode::kInvalidParameters, "empty basis list");
  }
  std::unordered_set<Subset> lookup;
  const int r = bases.front().size();
  std::uint32_t covered = 0;
  for (Subset b : bases) {
    if (!b.FitsIn(n)) {
      throw Error(ErrorCode::kInvalidParameters,
                  "basis " + b.ToString() + " not inside the ground set");
    }
    if (b.size() != r) {
      throw Error(ErrorCode::kInvalidParameters,
                  "bases are not equicardinal");
    }
    lookup.insert(b);
    covered |= b.bits();
  }
  for (Subset b1 : lookup) {
    for (Subset b2 : lookup) {
      for (int x : b1.Minus(b2).Elements()) {
        bool found = false;
        for (int y : b2.Minus(b1).Elements()) {
          if (lookup.contains(b1.Minus(Subset::Singleton(x)).With(y))) {
            found = true;
            break;
          }
        }
        if (!found) {
          throw Error(ErrorCode::kExchangeAxiomFails,
                      "no exchange for " + std::to_string(x) + " from " +
                          b1.ToString() + " into " + b2.ToString());
        }
      }
    }
  }
  if (covered != Subset::Full(n).bits()) {
    throw Error(ErrorCode::kLoops,
                "elements " +
                    Subset::Full(n).Minus(Subset(covered)).ToString() +
                    " lie in no basis");
  }
  std::vector<Subset> list(lookup.begin(), lookup.end());
  return FromRankFunction(n, [list](Subset s) {
    int best = 0;
    for (Subset b : list) best = std::max(best, b.Intersect(s).size());
    return best;
  });
}

Matroid Matroid::FromRankFunction(int n,
                                  const std::function<int(Subset)>& rank) {
  CheckGroundSetSize(n);
  auto closure = [&](Subset s) {
    const int rs = rank(s);
    Subset out = s;
    for (int e = 1; e <= n; ++e) {
      if (!s.contains(e) && rank(s.With(e)) == rs) out = out.With(e);
    }
    return out;
  };
  const Subset ground = Subset::Full(n);
  std::vector<std::vector<Subset>> by_rank;
  by_rank.push_back({closure(Subset())});
  while (by_rank.back().front() != ground) {
    std::unordered_set<Subset> next;
    for (Subset f : by_rank.back()) {
      for (int e = 1; e <= n; ++e) {
        if (!f.contains(e)) next.insert(closure(f.With(e)));
      }
    }
    by_rank.emplace_back(next.begin(), next.end());
  }
  return Matroid(n, std::move(by_rank));
}

std::vector<Subset> Matroid::Flats() const {
  std::vector<Subset> out;
  for (const auto& level : flats_by_rank_) {
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Subset> Matroid::ProperFlats() const {
  std::vector<Subset> out;
  for (int k = 1; k < rank_; ++k) {
    out.insert(out.end(), flats_by_rank_[k].begin(), flats_by_rank_[k].end());
  }
  return out;
}

int Matroid::FlatRank(Subset s) const {
  auto it = flat_rank_.find(s);
  return it == flat_rank_.end() ? -1 : it->second;
}

Subset Matroid::Closure(Subset s) const {
  // Walk up the lattice: each step moves to the unique cover of the current
  // flat that contains a missing element.
  Subset current = loops();
  int k = 0;
  while (!s.IsSubsetOf(current)) {
    const int e = s.Minus(current).Elements().front();
    for (Subset g : flats_by_rank_[k + 1]) {
      if (current.IsSubsetOf(g) && g.contains(e)) {
        current = g;
        break;
      }
    }
    ++k;
  }
  return current;
}

int Matroid::RankOf(Subset s) const { return FlatRank(Closure(s)); }

std::string Matroid::Summary() const {
  std::ostringstream os;
  os << "n=" << n_ << " rank=" << rank_ << " flats_by_rank=[";
  for (int k = 0; k <= rank_; ++k) {
    os << (k ? "," : "") << flats_by_rank_[k].size();
  }
  os << "]";
  return os.str();
}

Matroid Uniform(int r, int n) {
  CheckGroundSetSize(n);
  if (r < 1 || r > n) {
    throw Error(ErrorCode::kInvalidParameters,
                "uniform matroid needs 1 <= r <= n");
  }
  return Matroid::FromRankFunction(
      n, [r](Subset s) { return std::min(s.size(), r); });
}

Matroid Boolean(int n) { return Uniform(n, n); }

Matroid Fano() {
  std::vector<Subset> flats = {Subset(), Subset::Full(7)};
  for (int e = 1; e <= 7; ++e) flats.push_back(Subset::Singleton(e));
  for (auto line : {Subset::Of({1, 2, 3}), Subset::Of({1, 4, 5}),
                    Subset::Of({1, 6, 7}), Subset::Of({2, 4, 6}),
                    Subset::Of({2, 5, 7}), Subset::Of({3, 4, 7}),
                    Subset::Of({3, 5, 6})}) {
    flats.push_back(line);
  }
  return Matroid::FromFlats(7, flats);
}

Matroid Graphic(const std::vector<std::pair<int, int>>& edges) {
  const int n = static_cast<int>(edges.size());
  CheckGroundSetSize(n);
  if (n == 0) {
    throw Error(ErrorCode::kInvalidParameters, "graph has no edges");
  }
  std::vector<int> labels;
  for (auto [u, v] : edges) {
    if (u == v) {
      throw Error(ErrorCode::kInvalidParameters,
                  "edge at vertex " + std::to_string(u) + " is a loop");
    }
    labels.push_back(u);
    labels.push_back(v);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  std::vector<std::pair<int, int>> dense;
  for (auto [u, v] : edges) {
    auto index = [&](int x) {
      return static_cast<int>(
          std::lower_bound(labels.begin(), labels.end(), x) - labels.begin());
    };
    dense.emplace_back(index(u), index(v));
  }
  const int vertices = static_cast<int>(labels.size());
  return Matroid::FromRankFunction(n, [dense, vertices](Subset s) {
    std::vector<int> parent(vertices);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int merged = 0;
    for (int e : s.Elements()) {
      int a = find(dense[e - 1].first);
      int b = find(dense[e - 1].second);
      if (a != b) {
        parent[a] = b;
        ++merged;
      }
    }
    return merged;
  });
}

Matroid FromLongLines(int n, const std::vector<Subset>& lines) {
  CheckGroundSetSize(n);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (!lines[i].FitsIn(n) || lines[i].size() < 2) {
      throw Error(ErrorCode::kInvalidParameters,
                  "bad line " + lines[i].ToString());
    }
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (lines[i].Intersect(lines[j]).size() > 1) {
        throw Error(ErrorCode::kInvalidParameters,
                    "lines " + lines[i].ToString() + " and " +
                        lines[j].ToString() + " share two points");
      }
    }
  }
  if (n < 3 || (lines.size() == 1 && lines[0] == Subset::Full(n))) {
    throw Error(ErrorCode::kInvalidParameters, "points do not span rank 3");
  }
  return Matroid::FromRankFunction(n, [lines](Subset s) {
    if (s.size() <= 2) return s.size();
    for (Subset line : lines) {
      if (s.IsSubsetOf(line)) return 2;
    }
    return 3;
  });
}

namespace {

Subset Relabel(const std::vector<int>& to_original, Subset s) {
  std::uint32_t bits = 0;
  for (int e : s.Elements()) {
    bits |= Subset::Singleton(to_original[e - 1]).bits();
  }
  return Subset(bits);
}

}  // namespace

Subset Minor::ToOriginal(Subset s) const { return Relabel(to_original, s); }

Subset Minor::FromOriginal(Subset s) const {
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < to_original.size(); ++i) {
    if (s.contains(to_original[i])) bits |= 1u << i;
  }
  if (Subset(bits).size() != s.size()) {
    throw Error(ErrorCode::kInvalidParameters,
                s.ToString() + " leaves the minor's ground set");
  }
  return Subset(bits);
}

Minor Restrict(const Matroid& m, Subset s) {
  if (!s.FitsIn(m.n())) {
    throw Error(ErrorCode::kInvalidParameters, "restriction set too large");
  }
  std::vector<int> map = s.Elements();
  Matroid restricted = Matroid::FromRankFunction(
      s.size(), [&](Subset t) { return m.RankOf(Relabel(map, t)); });
  return Minor{std::move(restricted), std::move(map)};
}

Minor Contract(const Matroid& m, Subset flat) {
  if (!m.IsFlat(flat)) {
    throw Error(ErrorCode::kNotAFlat, flat.ToString() + " is not a flat");
  }
  std::vector<int> map = flat.Complement(m.n()).Elements();
  const int base = m.FlatRank(flat);
  Matroid contracted =
      Matroid::FromRankFunction(static_cast<int>(map.size()), [&](Subset t) {
        return m.RankOf(Relabel(map, t).Union(flat)) - base;
      });
  return Minor{std::move(contracted), std::move(map)};
}

Matroid Dual(const Matroid& m) {
  const int n = m.n();
  const int r = m.rank();
  return Matroid::FromRankFunction(n, [&](Subset s) {
    return s.size() + m.RankOf(s.Complement(n)) - r;
  });
}

BigInt Mobius(const Matroid& m) {
  const std::vector<Subset> flats = m.Flats();
  std::vector<BigInt> mu(flats.size());
  mu[0] = 1;
  for (std::size_t i = 1; i < flats.size(); ++i) {
    BigInt sum = 0;
    for (std::size_t j = 0; j < i; ++j) {
      if (flats[j].IsProperSubsetOf(flats[i])) sum += mu[j];
    }
    mu[i] = -sum;
  }
  return mu.back();
}

Weight::Weight(std::vector<Rational> entries) : entries_(std::move(entries)) {
  const int n = this->n();
  CheckGroundSetSize(n);
  // Scale to integers; sums then fit in 64 bits whenever every scaled entry
  // is below 2^58 in magnitude (at most 24 terms).
  BigInt lcm = 1;
  for (const Rational& q : entries_) {
    lcm = boost::multiprecision::lcm(lcm, denominator(q));
  }
  std::vector<BigInt> scaled;
  bool small = true;
  const BigInt limit = BigInt(1) << 58;
  for (const Rational& q : entries_) {
    scaled.push_back(numerator(q) * (lcm / denominator(q)));
    if (abs(scaled.back()) >= limit) small = false;
  }
  generic_ = true;
  if (n < 2) return;  // no proper nonempty subsets
  const std::uint32_t full = Subset::Full(n).bits();
  // Gray-code walk over all subsets.
  if (small) {
    std::vector<long long> w;
    for (const BigInt& z : scaled) w.push_back(static_cast<long long>(z));
    long long sum = 0;
    std::uint32_t mask = 0;
    for (std::uint32_t i = 1; i < (1u << n); ++i) {
      const int bit = std::countr_zero(i);
      mask ^= 1u << bit;
      sum += (mask >> bit & 1u) ? w[bit] : -w[bit];
      if (sum == 0 && mask != full) {
        generic_ = false;
        zero_subset_ = Subset(mask);
        return;
      }
    }
  } else {
    BigInt sum = 0;
    std::uint32_t mask = 0;
    for (std::uint32_t i = 1; i < (1u << n); ++i) {
      const int bit = std::countr_zero(i);
      mask ^= 1u << bit;
      if (mask >> bit & 1u) {
        sum += scaled[bit];
      } else {
        sum -= scaled[bit];
      }
      if (sum == 0 && mask != full) {
        generic_ = false;
        zero_subset_ = Subset(mask);
        return;
      }
    }
  }
}

Weight Weight::FromIntegers(const std::vector<long long>& entries) {
  std::vector<Rational> q;
  for (long long x : entries) q.emplace_back(x);
  return Weight(std::move(q));
}

Rational Weight::Dot(Subset s) const {
  Rational sum = 0;
  for (int e : s.Elements()) sum += entries_[e - 1];
  return sum;
}

Weight Weight::Restrict(Subset s) const {
  std::vector<Rational> out;
  for (int e : s.Elements()) out.push_back(entries_[e - 1]);
  return Weight(std::move(out));
}

std::string Weight::ToString() const {
  std::string out = "(";
  for (int i = 0; i < n(); ++i) {
    if (i) out += ",";
    out += trophom::ToString(entries_[i]);
  }
  return out + ")";
}

}  // namespace trophom
