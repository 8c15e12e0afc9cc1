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

#include "trophom/hodge.h"

#include <algorithm>
#include <map>

#include "trophom/error.h"
#include "trophom/smith.h"

namespace trophom {
namespace {

int RationalRank(const IntMatrix& rows) {
  return rows.rows() == 0 ? 0 : HermiteBasis(rows).rows();
}

// Interned coefficient lattices; equal lattices share an id.
class LatticeTable {
 public:
  int Intern(PLattice lattice) {
    const std::string key = lattice.basis().ToString();
    auto [it, inserted] = ids_.emplace(key, static_cast<int>(items_.size()));
    if (inserted) items_.push_back(std::move(lattice));
    return it->second;
  }
  const PLattice& operator[](int id) const { return items_[id]; }
  std::vector<PLattice> Release() { return std::move(items_); }

 private:
  std::vector<PLattice> items_;
  std::map<std::string, int> ids_;
};

// Star coefficient ids for every face of Δ(L), indexed like
// FacesByDimension().
std::vector<std::vector<int>> StarCoefficients(const BergmanFan& fan, int p,
                                               LatticeTable& table) {
  const SimplicialComplex& delta = fan.cones().complex;
  const auto& levels = delta.FacesByDimension();
  const int top = static_cast<int>(levels.size()) - 1;
  const PLattice full = PLattice::Full(fan.d(), p);
  std::vector<std::vector<int>> ids(levels.size());
  ids[top].resize(levels[top].size());
  for (std::size_t i = 0; i < levels[top].size(); ++i) {
    const IntMatrix span = Saturation(fan.Generators(fan.Chain(levels[top][i])));
    ids[top][i] = table.Intern(PLattice::ExteriorPower(fan.d(), p, span));
  }
  Face sub;
  for (int k = top - 1; k >= 0; --k) {
    std::vector<std::vector<int>> above(levels[k].size());
    for (std::size_t i = 0; i < levels[k + 1].size(); ++i) {
      const Face& f = levels[k + 1][i];
      for (std::size_t j = 0; j < f.size(); ++j) {
        sub.assign(f.begin(), f.end());
        sub.erase(sub.begin() + j);
        above[delta.IndexOf(sub)].push_back(ids[k + 1][i]);
      }
    }
    ids[k].resize(levels[k].size());
    for (std::size_t i = 0; i < levels[k].size(); ++i) {
      std::vector<int>& sources = above[i];
      std::sort(sources.begin(), sources.end());
      sources.erase(std::unique(sources.begin(), sources.end()),
                    sources.end());
      PLattice sum(fan.d(), p);
      for (int id : sources) {
        if (sum == full) break;
        sum = sum.Sum(table[id]);
      }
      ids[k][i] = table.Intern(std::move(sum));
    }
  }
  return ids;
}

std::int64_t ToInt64(const BigInt& x) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::kInternal, "transport entry exceeds 64 bits");
  }
  return static_cast<std::int64_t>(x);
}

IntVector Apply(const IntMatrix& a, const IntVector& x) {
  IntVector out(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
  }
  return out;
}

std::string VectorString(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    out += (i ? "," : "") + v[i].str();
  }
  return out + ")";
}

HomologyProfile DropTorsion(HomologyProfile h) {
  for (HomologyGroup& g : h.groups) g.torsion.clear();
  return h;
}

}  // namespace

std::string RingName(Ring ring) { return ring == Ring::kInt ? "int" : "rat"; }

std::string RegionName(Region region) {
  switch (region) {
    case Region::kLink:
      return "link";
    case Region::kHalfLink:
      return "halflink";
    case Region::kBall:
      return "ball";
  }
  return "";
}

PLattice ConeLattice(const BergmanFan& fan, const std::vector<Subset>& chain,
                     int p) {
  return PLattice::ExteriorPower(fan.d(), p,
                                 Saturation(fan.Generators(chain)));
}

PLattice PGroup(const BergmanFan& fan,
                const std::vector<std::vector<Subset>>& cones, int p) {
  PLattice out(fan.d(), p);
  for (const auto& chain : cones) out = out.Sum(ConeLattice(fan, chain, p));
  return out;
}

std::vector<std::vector<Subset>> PositiveMaximalCones(const BergmanFan& fan,
                                                      const Weight& omega) {
  std::vector<std::vector<Subset>> out;
  for (const auto& chain : fan.MaximalCones()) {
    if (std::any_of(chain.begin(), chain.end(),
                    [&](Subset f) { return omega.Dot(f) > 0; })) {
      out.push_back(chain);
    }
  }
  return out;
}

PGroupCache::PGroupCache(const BergmanFan& fan)
    : fan_(fan), cones_(fan.MaximalCones()) {
  for (const auto& chain : cones_) {
    saturated_.push_back(Saturation(fan.Generators(chain)));
  }
}

const std::vector<PLattice>& PGroupCache::Lattices(int p) {
  auto it = by_p_.find(p);
  if (it == by_p_.end()) {
    std::vector<PLattice> lattices;
    for (const IntMatrix& span : saturated_) {
      lattices.push_back(PLattice::ExteriorPower(fan_.d(), p, span));
    }
    it = by_p_.emplace(p, std::move(lattices)).first;
  }
  return it->second;
}

PLattice PGroupCache::SumOver(const std::vector<bool>& use, int p,
                              bool rank_only) {
  const std::vector<PLattice>& lattices = Lattices(p);
  const PLattice full = PLattice::Full(fan_.d(), p);
  PLattice out(fan_.d(), p);
  for (std::size_t i = 0; i < lattices.size(); ++i) {
    if (!use[i]) continue;
    out = out.Sum(lattices[i]);
    if (rank_only ? out.rank() == full.rank() : out == full) break;
  }
  return out;
}

PLattice PGroupCache::Full(int p) {
  return SumOver(std::vector<bool>(cones_.size(), true), p, false);
}

PComparison HalfspacePComparison(PGroupCache& cache, const Halfspace& h,
                                 int p, Ring ring) {
  const BergmanFan& fan = cache.fan();
  const Weight omega = InducedWeight(fan.circuit(), h);
  if (!omega.generic()) {
    throw Error(ErrorCode::kNonGenericHalfspace,
                "normal is orthogonal to e_" + omega.zero_subset().ToString());
  }
  std::vector<bool> use;
  for (const auto& chain : fan.MaximalCones()) {
    use.push_back(std::any_of(chain.begin(), chain.end(),
                              [&](Subset f) { return omega.Dot(f) > 0; }));
  }
  const bool rank_only = ring == Ring::kRat;
  PComparison out{ring, cache.SumOver(use, p, rank_only), cache.Full(p),
                  false, std::nullopt};
  out.rank_equal = out.positive.rank() == out.full.rank();
  if (out.rank_equal) {
    out.index = rank_only ? std::optional<BigInt>(1)
                          : LatticeIndex(out.positive, out.full);
  }
  return out;
}

PComparison HalfspacePComparison(const BergmanFan& fan, const Halfspace& h,
                                 int p, Ring ring) {
  PGroupCache cache(fan);
  return HalfspacePComparison(cache, h, p, ring);
}

FanoWitness TorsionWitnessFano() {
  FanoWitness out;
  const BergmanFan fan(Fano());
  out.halfspace = Halfspace{{4, 4, 4, -3, -3, -3}};
  out.omega = InducedWeight(fan.circuit(), out.halfspace);
  out.positive_flats =
      Filtered(fan.lattice(), out.omega, Rational(0)).elements();
  std::vector<Subset> generating;
  for (const auto& chain : PositiveMaximalCones(fan, out.omega)) {
    generating.insert(generating.end(), chain.begin(), chain.end());
  }
  std::sort(generating.begin(), generating.end(), CanonicalLess);
  generating.erase(std::unique(generating.begin(), generating.end()),
                   generating.end());
  out.generating_flats = generating;
  const Weight theta = Weight::FromIntegers({0, 0, 0, 1, 1, 1, 1});
  out.theta_even_on_generators = true;
  for (Subset s : generating) {
    const int value = static_cast<int>(numerator(theta.Dot(s)));
    out.theta_on_generators.push_back(value);
    if (value % 2 != 0) out.theta_even_on_generators = false;
  }
  out.theta_on_4 = static_cast<int>(numerator(theta.Dot(Subset::Of({4}))));
  out.comparison = HalfspacePComparison(fan, out.halfspace, 1, Ring::kInt);
  out.rational_comparison =
      HalfspacePComparison(fan, out.halfspace, 1, Ring::kRat);
  out.full_is_standard = out.comparison.full == PLattice::Full(6, 1);
  // e_i ↦ ϑ_i is well defined mod 2 because ϑ·[7] is even.
  out.theta_vanishes_on_positive_basis = true;
  const IntMatrix& basis = out.comparison.positive.basis();
  for (int i = 0; i < basis.rows(); ++i) {
    BigInt value = 0;
    for (int k = 0; k < 6; ++k) value += numerator(theta[k + 1]) * basis(i, k);
    if (value % 2 != 0) out.theta_vanishes_on_positive_basis = false;
  }
  return out;
}

std::string PQCell::ToString() const {
  std::string out = cone ? "v" : "";
  if (cone && !chain.empty()) out += "*";
  if (!chain.empty() || !cone) {
    out += "(";
    for (std::size_t i = 0; i < chain.size(); ++i) {
      out += (i ? "<" : "") + chain[i].ToString();
    }
    out += ")";
  }
  return out;
}

int PQComplex::MinDegree() const {
  int lo = 0;
  for (const PQCell& c : cells) lo = std::min(lo, c.degree);
  return lo;
}

int PQComplex::IndexOf(const std::vector<Subset>& chain, bool cone) const {
  for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
    if (cells[i].cone == cone && cells[i].chain == chain) return i;
  }
  return -1;
}

std::vector<int> PQComplex::Offsets(const std::vector<bool>& keep) const {
  std::map<int, int> next;
  std::vector<int> offsets(cells.size(), -1);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!keep[i]) continue;
    int& at = next[cells[i].degree];
    offsets[i] = at;
    at += Coefficient(cells[i]).rank();
  }
  return offsets;
}

ChainComplexZ PQComplex::Chains() const {
  return Chains(std::vector<bool>(cells.size(), true));
}

ChainComplexZ PQComplex::Chains(const std::vector<bool>& keep) const {
  const int lo = MinDegree();
  int hi = lo;
  for (const PQCell& c : cells) hi = std::max(hi, c.degree);
  const int count = hi - lo + 1;
  std::vector<int> ranks(count, 0);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (keep[i]) ranks[cells[i].degree - lo] += Coefficient(cells[i]).rank();
  }
  const std::vector<int> offsets = Offsets(keep);
  std::vector<SparseIntMatrix> boundaries;
  boundaries.emplace_back(0, ranks[0]);
  for (int q = lo + 1; q <= hi; ++q) {
    boundaries.emplace_back(ranks[q - 1 - lo], ranks[q - lo]);
  }
  std::map<std::pair<int, int>, std::vector<IntVector>> transport;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!keep[i]) continue;
    const PQCell& cell = cells[i];
    const PLattice& source = Coefficient(cell);
    for (const auto& [target, sign] : cell.boundary) {
      if (!keep[target]) continue;
      const PQCell& down = cells[target];
      auto key = std::make_pair(cell.coefficient, down.coefficient);
      auto it = transport.find(key);
      if (it == transport.end()) {
        std::vector<IntVector> coords;
        for (int r = 0; r < source.rank(); ++r) {
          auto x = CoordinatesIn(Coefficient(down).basis(),
                                 source.basis().Row(r));
          if (!x) {
            throw Error(ErrorCode::kInternal,
                        "coefficient of " + cell.ToString() +
                            " does not include into that of " +
                            down.ToString());
          }
          coords.push_back(std::move(*x));
        }
        it = transport.emplace(key, std::move(coords)).first;
      }
      SparseIntMatrix& d = boundaries[cell.degree - lo];
      for (int r = 0; r < source.rank(); ++r) {
        const IntVector& x = it->second[r];
        for (std::size_t s = 0; s < x.size(); ++s) {
          if (x[s] != 0) {
            d.Add(offsets[target] + static_cast<int>(s), offsets[i] + r,
                  sign * ToInt64(x[s]));
          }
        }
      }
    }
  }
  for (SparseIntMatrix& d : boundaries) d.Normalize();
  return ChainComplexZ(lo, std::move(ranks), std::move(boundaries));
}

PQComplex BuildPQComplex(const BergmanFan& fan, Region region, int p,
                         Ring ring, const Halfspace* h) {
  PQComplex out;
  out.region = region;
  out.p = p;
  out.ring = ring;
  out.d = fan.d();
  LatticeTable table;
  const std::vector<std::vector<int>> star = StarCoefficients(fan, p, table);
  const SimplicialComplex& delta = fan.cones().complex;
  const auto& levels = delta.FacesByDimension();

  std::vector<bool> allowed(fan.lattice().size(), true);
  if (region == Region::kHalfLink) {
    if (h == nullptr) {
      throw Error(ErrorCode::kInvalidParameters, "halflink needs a halfspace");
    }
    const PositivePart positive = ComputePositivePart(fan, *h);
    std::fill(allowed.begin(), allowed.end(), false);
    for (Subset f : positive.poset.elements()) {
      allowed[fan.lattice().IndexOf(f)] = true;
    }
  }
  const bool augmented = region != Region::kBall;
  // cell_of[k][i]: simplex cell of face i on level k, or -1.
  std::vector<std::vector<int>> cell_of(levels.size());
  Face sub;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    cell_of[k].assign(levels[k].size(), -1);
    if (k == 0 && !augmented) continue;
    for (std::size_t i = 0; i < levels[k].size(); ++i) {
      const Face& f = levels[k][i];
      if (!std::all_of(f.begin(), f.end(), [&](int v) { return allowed[v]; })) {
        continue;
      }
      PQCell cell;
      cell.chain = fan.Chain(f);
      cell.degree = static_cast<int>(k) - 1;
      cell.coefficient = star[k][i];
      for (std::size_t j = 0; k >= 1 && j < f.size(); ++j) {
        sub.assign(f.begin(), f.end());
        sub.erase(sub.begin() + j);
        const int target = cell_of[k - 1][delta.IndexOf(sub)];
        if (target >= 0) cell.boundary.emplace_back(target, j % 2 ? -1 : 1);
      }
      cell_of[k][i] = static_cast<int>(out.cells.size());
      out.cells.push_back(std::move(cell));
    }
  }
  if (region == Region::kBall) {
    // Apex v, then v*C with ∂(v*C) = C - v*∂C and ∂(v*{F}) = {F} - v.
    std::vector<std::vector<int>> cone_of(levels.size());
    cone_of[0] = {static_cast<int>(out.cells.size())};
    out.cells.push_back({{}, true, 0, star[0][0], {}});
    for (std::size_t k = 1; k < levels.size(); ++k) {
      cone_of[k].resize(levels[k].size());
      for (std::size_t i = 0; i < levels[k].size(); ++i) {
        const Face& f = levels[k][i];
        PQCell cell{fan.Chain(f), true, static_cast<int>(k), star[k][i], {}};
        cell.boundary.emplace_back(cell_of[k][i], 1);
        for (std::size_t j = 0; j < f.size(); ++j) {
          sub.assign(f.begin(), f.end());
          sub.erase(sub.begin() + j);
          cell.boundary.emplace_back(cone_of[k - 1][delta.IndexOf(sub)],
                                     j % 2 ? 1 : -1);
        }
        cone_of[k][i] = static_cast<int>(out.cells.size());
        out.cells.push_back(std::move(cell));
      }
    }
  }
  out.lattices = std::make_shared<const std::vector<PLattice>>(table.Release());
  return out;
}

HomologyProfile PQHomology(const PQComplex& k) {
  HomologyProfile h = k.Chains().Homology();
  return k.ring == Ring::kRat ? DropTorsion(std::move(h)) : h;
}

HomologyProfile PQRelativeHomology(const PQComplex& ball) {
  if (ball.region != Region::kBall) {
    throw Error(ErrorCode::kInvalidParameters,
                "relative groups are taken for the ball modulo the link");
  }
  std::vector<bool> keep;
  for (const PQCell& c : ball.cells) keep.push_back(c.cone);
  HomologyProfile h = ball.Chains(keep).Homology();
  return ball.ring == Ring::kRat ? DropTorsion(std::move(h)) : h;
}

ConeIsoResult ConeIsoCheck(const BergmanFan& fan, int p, Ring ring) {
  ConeIsoResult out;
  out.link = PQHomology(BuildPQComplex(fan, Region::kLink, p, ring));
  out.relative = PQRelativeHomology(BuildPQComplex(fan, Region::kBall, p, ring));
  out.passed = true;
  const int hi = std::max(out.link.max_degree() + 1, out.relative.max_degree());
  for (int q = 0; q <= hi; ++q) {
    if (!(out.link.At(q - 1) == out.relative.At(q))) out.passed = false;
  }
  return out;
}

U34Witness MakeU34Witness() {
  U34Witness out;
  const BergmanFan fan(Uniform(3, 4));
  out.halfspace = Halfspace{{1, 1, 1}};
  out.omega = InducedWeight(fan.circuit(), out.halfspace);
  out.halflink_vertices =
      Filtered(fan.lattice(), out.omega, Rational(0)).elements();
  const auto e = [&](int i) { return fan.circuit().vectors[(i + 2) % 3]; };

  // Unknowns (a_1, a_2, a_3, b_1, b_2, b_3); a_i is column i - 1.
  {
    IntMatrix system(0, 6);
    IntMatrix augmented(0, 7);
    auto add = [&](std::vector<std::pair<int, int>> terms, int rhs) {
      IntVector row(6);
      for (auto [col, coef] : terms) row[col] += coef;
      system.AppendRow(row);
      row.push_back(rhs);
      augmented.AppendRow(row);
    };
    for (int i = 0; i < 3; ++i) {
      const int next = (i + 1) % 3;
      add({{3 + i, 1}, {next, 1}, {3 + next, 1}}, 0);
      add({{next, 1}, {3 + next, -1}}, 0);
      add({{i, 1}}, 1);
    }
    out.stated_system_consistent =
        RationalRank(system) == RationalRank(augmented);
  }
  {
    // coef_i = a_i (e_i - e_{i+1}) + b_i e_{i+1}; the coefficient of σ_j in
    // ∂γ is coef_{j-1} - coef_j, to be matched with e_{j-1} - e_j.
    IntMatrix system(0, 6);
    IntVector rhs;
    for (int j = 1; j <= 3; ++j) {
      const int prev = j == 1 ? 3 : j - 1;
      for (int k = 0; k < 3; ++k) {
        IntVector row(6);
        auto add_coef = [&](int i, int sign) {
          const int nxt = i % 3 + 1;
          row[i - 1] += sign * (e(i)[k] - e(nxt)[k]);
          row[3 + i - 1] += sign * e(nxt)[k];
        };
        add_coef(prev, 1);
        add_coef(j, -1);
        system.AppendRow(row);
        rhs.push_back(e(prev)[k] - e(j)[k]);
      }
    }
    const auto solution = SolveInteger(system, rhs);
    out.boundary_system_consistent = solution.has_value();
    if (solution) {
      for (const BigInt& x : *solution) {
        out.boundary_system_solution.emplace_back(x);
      }
    }
  }

  const PQComplex k =
      BuildPQComplex(fan, Region::kHalfLink, 1, Ring::kInt, &out.halfspace);
  const ChainComplexZ chains = k.Chains();
  out.halflink_homology = chains.Homology();
  const std::vector<int> offsets =
      k.Offsets(std::vector<bool>(k.cells.size(), true));
  IntVector c(chains.rank(0));
  for (int i = 1; i <= 3; ++i) {
    const int cell = k.IndexOf({Subset::Of({i})}, false);
    const PLattice& coef = k.Coefficient(k.cells[cell]);
    IntVector v(3);
    for (int t = 0; t < 3; ++t) v[t] = e(i == 1 ? 3 : i - 1)[t] - e(i)[t];
    const auto x = CoordinatesIn(coef.basis(), v);
    if (!x) throw Error(ErrorCode::kInternal, "c is not a (1,0)-chain");
    for (std::size_t s = 0; s < x->size(); ++s) c[offsets[cell] + s] = (*x)[s];
  }
  const IntVector dc = Apply(chains.boundary(0).ToDense(), c);
  out.c_is_cycle = std::all_of(dc.begin(), dc.end(),
                               [](const BigInt& x) { return x == 0; });
  const IntMatrix d1 = chains.boundary(1).ToDense();
  const auto y = SolveInteger(d1, c);
  out.c_is_boundary = y.has_value() && Apply(d1, *y) == c;
  if (y) {
    for (std::size_t i = 0; i < k.cells.size(); ++i) {
      const PQCell& cell = k.cells[i];
      if (cell.degree != 1) continue;
      const PLattice& coef = k.Coefficient(cell);
      IntVector value(3);
      bool nonzero = false;
      for (int r = 0; r < coef.rank(); ++r) {
        const BigInt& t = (*y)[offsets[i] + r];
        if (t == 0) continue;
        nonzero = true;
        for (int s = 0; s < 3; ++s) value[s] += t * coef.basis()(r, s);
      }
      if (nonzero) out.preimage.push_back(VectorString(value) + cell.ToString());
    }
  }
  return out;
}

}  // namespace trophom
