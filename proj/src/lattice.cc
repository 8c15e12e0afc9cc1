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

#include "trophom/lattice.h"

#include <algorithm>
#include <utility>

#include "trophom/error.h"
#include "trophom/smith.h"

namespace trophom {
namespace {

void SubtractRow(IntMatrix& a, int target, int source, const BigInt& q) {
  if (q == 0) return;
  for (int c = 0; c < a.cols(); ++c) {
    if (a(source, c) != 0) a(target, c) -= q * a(source, c);
  }
}

void SwapRows(IntMatrix& a, int i, int j) {
  if (i == j) return;
  for (int c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

BigInt FloorDiv(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

IntMatrix FromRows(int cols, const std::vector<IntVector>& rows) {
  IntMatrix out(0, cols);
  for (const IntVector& r : rows) out.AppendRow(r);
  return out;
}

}  // namespace

IntMatrix HermiteBasis(const IntMatrix& generators) {
  IntMatrix a = generators;
  const int m = a.rows();
  int r = 0;
  for (int c = 0; c < a.cols() && r < m; ++c) {
    while (true) {
      int pivot = -1;
      for (int i = r; i < m; ++i) {
        if (a(i, c) != 0 && (pivot < 0 || abs(a(i, c)) < abs(a(pivot, c)))) {
          pivot = i;
        }
      }
      if (pivot < 0) break;
      SwapRows(a, r, pivot);
      bool done = true;
      for (int i = r + 1; i < m; ++i) {
        if (a(i, c) == 0) continue;
        SubtractRow(a, i, r, a(i, c) / a(r, c));
        if (a(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0) {
      for (int j = c; j < a.cols(); ++j) a(r, j) = -a(r, j);
    }
    for (int i = 0; i < r; ++i) SubtractRow(a, i, r, FloorDiv(a(i, c), a(r, c)));
    ++r;
  }
  IntMatrix out(0, a.cols());
  for (int i = 0; i < r; ++i) out.AppendRow(a.Row(i));
  return out;
}

std::optional<IntVector> CoordinatesIn(const IntMatrix& basis,
                                       const IntVector& v) {
  IntVector rest = v;
  IntVector coords(basis.rows());
  int c = 0;
  for (int j = 0; j < basis.rows(); ++j) {
    while (basis(j, c) == 0) {
      if (rest[c] != 0) return std::nullopt;
      ++c;
    }
    if (rest[c] % basis(j, c) != 0) return std::nullopt;
    coords[j] = rest[c] / basis(j, c);
    for (int k = c; k < basis.cols(); ++k) rest[k] -= coords[j] * basis(j, k);
  }
  for (const BigInt& x : rest) {
    if (x != 0) return std::nullopt;
  }
  return coords;
}

std::optional<IntVector> SolveInteger(const IntMatrix& a, const IntVector& b) {
  if (a.cols() == 0) {
    for (const BigInt& x : b) {
      if (x != 0) return std::nullopt;
    }
    return IntVector{};
  }
  const SmithForm snf = SmithNormalForm(a);
  IntMatrix column(static_cast<int>(b.size()), 1);
  for (std::size_t i = 0; i < b.size(); ++i) column(i, 0) = b[i];
  const IntMatrix ub = snf.u * column;
  IntMatrix z(a.cols(), 1);
  for (int i = 0; i < a.rows(); ++i) {
    if (i < snf.rank()) {
      if (ub(i, 0) % snf.invariant_factors[i] != 0) return std::nullopt;
      z(i, 0) = ub(i, 0) / snf.invariant_factors[i];
    } else if (ub(i, 0) != 0) {
      return std::nullopt;
    }
  }
  const IntMatrix x = snf.v * z;
  IntVector out(a.cols());
  for (int i = 0; i < a.cols(); ++i) out[i] = x(i, 0);
  return out;
}

bool VerifyHermiteBasis(const IntMatrix& generators, const IntMatrix& basis) {
  const int n = generators.cols();
  if (basis.rows() > 0 && basis.cols() != n) return false;
  // Shape: strictly increasing positive pivots, reduced entries above them.
  int last = -1;
  for (int i = 0; i < basis.rows(); ++i) {
    int c = 0;
    while (c < n && basis(i, c) == 0) ++c;
    if (c == n || c <= last || basis(i, c) <= 0) return false;
    for (int k = 0; k < i; ++k) {
      if (basis(k, c) < 0 || basis(k, c) >= basis(i, c)) return false;
    }
    last = c;
  }
  IntMatrix x(generators.rows(), basis.rows());
  for (int i = 0; i < generators.rows(); ++i) {
    const auto coords = CoordinatesIn(basis, generators.Row(i));
    if (!coords) return false;
    for (int j = 0; j < basis.rows(); ++j) x(i, j) = (*coords)[j];
  }
  if (basis.rows() > 0 && !(x * basis == generators)) return false;
  if (basis.rows() == 0) return generators.IsZero();
  const IntMatrix gt = generators.Transpose();
  IntMatrix y(basis.rows(), generators.rows());
  for (int i = 0; i < basis.rows(); ++i) {
    const auto combo = SolveInteger(gt, basis.Row(i));
    if (!combo) return false;
    for (int j = 0; j < generators.rows(); ++j) y(i, j) = (*combo)[j];
  }
  return y * generators == basis;
}

IntMatrix IntegerKernel(const IntMatrix& a) {
  const int n = a.cols();
  if (a.rows() == 0) return IntMatrix::Identity(n);
  const SmithForm snf = SmithNormalForm(a);
  IntMatrix out(0, n);
  for (int j = snf.rank(); j < n; ++j) {
    IntVector column(n);
    for (int i = 0; i < n; ++i) column[i] = snf.v(i, j);
    out.AppendRow(column);
  }
  return out;
}

IntMatrix Saturation(const IntMatrix& a) {
  return HermiteBasis(IntegerKernel(IntegerKernel(a)));
}

std::vector<std::vector<int>> ExteriorBasis(int d, int p) {
  std::vector<std::vector<int>> out;
  if (p < 0 || p > d) return out;
  std::vector<int> current(p);
  for (int i = 0; i < p; ++i) current[i] = i;
  while (true) {
    out.push_back(current);
    int i = p - 1;
    while (i >= 0 && current[i] == d - p + i) --i;
    if (i < 0) break;
    ++current[i];
    for (int j = i + 1; j < p; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

IntVector Wedge(const IntMatrix& vectors) {
  const int p = vectors.rows();
  const auto basis = ExteriorBasis(vectors.cols(), p);
  IntVector out;
  out.reserve(basis.size());
  for (const auto& columns : basis) {
    IntMatrix minor(p, p);
    for (int i = 0; i < p; ++i) {
      for (int j = 0; j < p; ++j) minor(i, j) = vectors(i, columns[j]);
    }
    out.push_back(Determinant(minor));
  }
  return out;
}

BigInt Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

PLattice::PLattice(int d, int p)
    : d_(d), p_(p), basis_(0, static_cast<int>(Binomial(d, p))) {
  if (p < 0 || p > d) {
    throw Error(ErrorCode::kInvalidParameters,
                "degree p = " + std::to_string(p) + " outside [0, " +
                    std::to_string(d) + "]");
  }
}

PLattice PLattice::FromGenerators(int d, int p, const IntMatrix& generators) {
  PLattice out(d, p);
  if (generators.rows() > 0) {
    if (generators.cols() != out.ambient_rank()) {
      throw Error(ErrorCode::kInvalidParameters,
                  "generator length does not match the exterior power");
    }
    out.basis_ = HermiteBasis(generators);
  }
  return out;
}

PLattice PLattice::ExteriorPower(int d, int p, const IntMatrix& rows) {
  PLattice out(d, p);
  if (p > rows.rows()) return out;
  std::vector<IntVector> wedges;
  for (const auto& pick : ExteriorBasis(rows.rows(), p)) {
    IntMatrix chosen(0, d);
    for (int i : pick) chosen.AppendRow(rows.Row(i));
    wedges.push_back(p == 0 ? IntVector{1} : Wedge(chosen));
  }
  return FromGenerators(d, p, FromRows(out.ambient_rank(), wedges));
}

PLattice PLattice::Full(int d, int p) {
  PLattice out(d, p);
  out.basis_ = IntMatrix::Identity(out.ambient_rank());
  return out;
}

bool PLattice::Contains(const IntVector& v) const {
  return CoordinatesIn(basis_, v).has_value();
}

bool PLattice::Contains(const PLattice& other) const {
  for (int i = 0; i < other.rank(); ++i) {
    if (!Contains(other.basis_.Row(i))) return false;
  }
  return true;
}

PLattice PLattice::Sum(const PLattice& other) const {
  IntMatrix stacked = basis_;
  for (int i = 0; i < other.rank(); ++i) stacked.AppendRow(other.basis_.Row(i));
  return FromGenerators(d_, p_, stacked);
}

std::optional<BigInt> LatticeIndex(const PLattice& sub, const PLattice& super) {
  if (!super.Contains(sub)) {
    throw Error(ErrorCode::kInvalidParameters,
                "index of a lattice not contained in the other");
  }
  if (sub.rank() != super.rank()) return std::nullopt;
  const int k = sub.rank();
  IntMatrix coords(k, k);
  for (int i = 0; i < k; ++i) {
    const IntVector x = *CoordinatesIn(super.basis(), sub.basis().Row(i));
    for (int j = 0; j < k; ++j) coords(i, j) = x[j];
  }
  return abs(Determinant(coords));
}

}  // namespace trophom
