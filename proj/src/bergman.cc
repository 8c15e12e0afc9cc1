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

#include "trophom/bergman.h"

#include <algorithm>
#include <set>

#include "trophom/error.h"
#include "trophom/homology.h"
#include "trophom/smith.h"

namespace trophom {
namespace {

int RationalRank(const IntMatrix& rows) {
  return rows.rows() == 0 ? 0 : HermiteBasis(rows).rows();
}

void RequireGeneric(const Weight& omega) {
  if (!omega.generic()) {
    throw Error(ErrorCode::kNonGenericHalfspace,
                "normal is orthogonal to e_" + omega.zero_subset().ToString());
  }
}

}  // namespace

IntVector CircuitRealization::Ray(Subset flat) const {
  IntVector out(d());
  for (int i : flat.Elements()) {
    for (int k = 0; k < d(); ++k) out[k] += vectors[i - 1][k];
  }
  return out;
}

bool CircuitRealization::SumsToZero() const {
  const IntVector total = Ray(Subset::Full(n));
  return std::all_of(total.begin(), total.end(),
                     [](const BigInt& x) { return x == 0; });
}

bool CircuitRealization::EverySubsetUnimodular() const {
  for (int skip = 0; skip < n; ++skip) {
    IntMatrix m(0, d());
    for (int i = 0; i < n; ++i) {
      if (i != skip) m.AppendRow(vectors[i]);
    }
    if (abs(Determinant(m)) != 1) return false;
  }
  return true;
}

CircuitRealization StandardCircuit(int n) {
  if (n < 2) {
    throw Error(ErrorCode::kInvalidParameters, "a circuit needs n >= 2");
  }
  CheckGroundSetSize(n);
  CircuitRealization out{n, {}};
  for (int i = 0; i < n - 1; ++i) {
    IntVector e(n - 1);
    e[i] = 1;
    out.vectors.push_back(std::move(e));
  }
  out.vectors.push_back(IntVector(n - 1, BigInt(-1)));
  return out;
}

CircuitRealization AlternateCircuit(int n) {
  CircuitRealization out = StandardCircuit(n);
  for (IntVector& e : out.vectors) {
    IntVector image(e.size());
    for (std::size_t k = 0; k < e.size(); ++k) {
      image[k] = e[k] + (k + 1 < e.size() ? e[k + 1] : BigInt(0));
    }
    e = std::move(image);
  }
  return out;
}

BergmanFan::BergmanFan(Matroid m, CircuitRealization circuit)
    : matroid_(std::move(m)), circuit_(std::move(circuit)) {
  if (matroid_.rank() < 1) {
    throw Error(ErrorCode::kRankTooSmall, "Bergman fan needs rank >= 1");
  }
  if (circuit_.n != matroid_.n()) {
    throw Error(ErrorCode::kInvalidParameters,
                "circuit and matroid have different ground sets");
  }
  lattice_ = Poset(matroid_.n(), matroid_.ProperFlats());
  cones_ = BuildOrderComplex(lattice_);
}

BergmanFan::BergmanFan(Matroid m)
    : BergmanFan(m, StandardCircuit(m.n())) {}

IntMatrix BergmanFan::Generators(const std::vector<Subset>& chain) const {
  IntMatrix out(0, d());
  for (Subset f : chain) out.AppendRow(Ray(f));
  return out;
}

int BergmanFan::ConeDimension(const std::vector<Subset>& chain) const {
  return RationalRank(Generators(chain));
}

std::vector<std::vector<Subset>> BergmanFan::ConesOfDimension(int k) const {
  std::vector<std::vector<Subset>> out;
  const auto& levels = cones_.complex.FacesByDimension();
  if (k < 0 || k >= static_cast<int>(levels.size())) return out;
  for (const Face& f : levels[k]) out.push_back(Chain(f));
  return out;
}

std::vector<std::vector<Subset>> BergmanFan::MaximalCones() const {
  std::vector<std::vector<Subset>> out;
  for (const Face& f : cones_.complex.facets()) out.push_back(Chain(f));
  return out;
}

bool BergmanFan::ConeDimensionsMatchChains() const {
  for (const auto& chain : MaximalCones()) {
    if (ConeDimension(chain) != static_cast<int>(chain.size())) return false;
  }
  return true;
}

BalanceResult BalancingCheck(const BergmanFan& fan,
                             const std::vector<Subset>& chain) {
  const Matroid& m = fan.matroid();
  std::vector<Subset> sorted = chain;
  std::sort(sorted.begin(), sorted.end(), CanonicalLess);
  bool valid = static_cast<int>(sorted.size()) == m.rank() - 2;
  for (std::size_t i = 0; valid && i < sorted.size(); ++i) {
    const int rank = m.FlatRank(sorted[i]);
    valid = rank >= 1 && rank < m.rank() &&
            (i == 0 || sorted[i - 1].IsProperSubsetOf(sorted[i]));
  }
  if (!valid) {
    throw Error(ErrorCode::kNotASubchain,
                "not a maximal chain of proper flats minus one flat");
  }
  // The gap of rank two between consecutive members (with the bottom and
  // top flats as sentinels) is where completing flats fit.
  std::vector<Subset> bounded = {m.loops()};
  bounded.insert(bounded.end(), sorted.begin(), sorted.end());
  bounded.push_back(m.ground());
  BalanceResult out;
  out.sum.assign(fan.d(), 0);
  for (std::size_t i = 0; i + 1 < bounded.size(); ++i) {
    const Subset low = bounded[i];
    const Subset high = bounded[i + 1];
    if (m.FlatRank(high) - m.FlatRank(low) != 2) continue;
    for (Subset g : m.flats_by_rank()[m.FlatRank(low) + 1]) {
      if (!low.IsProperSubsetOf(g) || !g.IsProperSubsetOf(high)) continue;
      ++out.completions;
      const IntVector e = fan.Ray(g);
      for (int k = 0; k < fan.d(); ++k) out.sum[k] += e[k];
    }
  }
  IntMatrix span = fan.Generators(sorted);
  const int before = RationalRank(span);
  span.AppendRow(out.sum);
  out.passed = RationalRank(span) == before;
  return out;
}

std::vector<std::vector<Subset>> CodimensionOneChains(const BergmanFan& fan) {
  std::set<std::vector<Subset>> seen;
  std::vector<std::vector<Subset>> out;
  for (const auto& chain : fan.MaximalCones()) {
    if (chain.empty()) continue;
    for (std::size_t skip = 0; skip < chain.size(); ++skip) {
      std::vector<Subset> sub;
      for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i != skip) sub.push_back(chain[i]);
      }
      if (seen.insert(sub).second) out.push_back(std::move(sub));
    }
  }
  return out;
}

std::pair<Minor, Minor> LocalFans(const Matroid& m, Subset flat) {
  if (!m.IsFlat(flat) || flat == m.loops() || flat == m.ground()) {
    throw Error(ErrorCode::kNotAFlat,
                flat.ToString() + " is not a proper nonempty flat");
  }
  return {Restrict(m, flat), Contract(m, flat)};
}

Halfspace Halfspace::FromRationals(const std::vector<Rational>& normal) {
  BigInt scale = 1;
  for (const Rational& x : normal) scale = lcm(scale, denominator(x));
  Halfspace out;
  for (const Rational& x : normal) {
    out.normal.push_back(numerator(x) * (scale / denominator(x)));
  }
  return out;
}

Halfspace Halfspace::Negated() const {
  Halfspace out = *this;
  for (BigInt& x : out.normal) x = -x;
  return out;
}

std::string Halfspace::ToString() const {
  std::string out = "(";
  for (std::size_t i = 0; i < normal.size(); ++i) {
    out += (i ? "," : "") + normal[i].str();
  }
  return out + ")";
}

Weight InducedWeight(const CircuitRealization& circuit, const Halfspace& h) {
  if (static_cast<int>(h.normal.size()) != circuit.d()) {
    throw Error(ErrorCode::kInvalidParameters,
                "normal must have " + std::to_string(circuit.d()) +
                    " entries");
  }
  std::vector<Rational> omega;
  for (const IntVector& e : circuit.vectors) {
    BigInt dot = 0;
    for (int k = 0; k < circuit.d(); ++k) dot += h.normal[k] * e[k];
    omega.emplace_back(dot);
  }
  return Weight(std::move(omega));
}

PositivePart ComputePositivePart(const BergmanFan& fan, const Halfspace& h) {
  PositivePart out;
  out.omega = InducedWeight(fan.circuit(), h);
  RequireGeneric(out.omega);
  out.poset = Filtered(fan.lattice(), out.omega, Rational(0));
  out.complex = BuildOrderComplex(out.poset, fan.lattice());
  for (Subset f : out.poset.elements()) out.rays.push_back(fan.Ray(f));
  return out;
}

LefschetzResult LefschetzPair(const BergmanFan& fan, const Halfspace& h) {
  const PositivePart positive = ComputePositivePart(fan, h);
  LefschetzResult out;
  out.homology =
      RelativeHomology(fan.cones().complex, positive.complex.complex);
  out.passed = out.homology.ConcentratedIn(fan.matroid().rank() - 2);
  return out;
}

}  // namespace trophom
