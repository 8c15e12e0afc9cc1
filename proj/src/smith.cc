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

#include "trophom/smith.h"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <utility>

#include "trophom/error.h"

namespace trophom {
namespace {

// Elimination state for the dense algorithm. Row operations are mirrored
// into `u` and column operations into `v` when certificates are wanted.
class DenseSmith {
 public:
  DenseSmith(IntMatrix a, bool certificates)
      : a_(std::move(a)), certificates_(certificates) {
    if (certificates_) {
      u_ = IntMatrix::Identity(a_.rows());
      v_ = IntMatrix::Identity(a_.cols());
    }
  }

  std::vector<BigInt> Run() {
    const int m = a_.rows();
    const int n = a_.cols();
    std::vector<BigInt> factors;
    for (int t = 0; t < std::min(m, n); ++t) {
      auto [pi, pj] = SmallestEntry(t, t);
      if (pi < 0) break;
      SwapRows(t, pi);
      SwapCols(t, pj);
      while (true) {
        const BigInt& pivot = a_(t, t);
        for (int i = t + 1; i < m; ++i) {
          if (a_(i, t) != 0) AddRow(i, t, -(a_(i, t) / pivot));
        }
        if (int i = SmallestInColumn(t, t + 1); i >= 0) {
          SwapRows(t, i);
          continue;
        }
        for (int j = t + 1; j < n; ++j) {
          if (a_(t, j) != 0) AddCol(j, t, -(a_(t, j) / a_(t, t)));
        }
        if (int j = SmallestInRow(t, t + 1); j >= 0) {
          SwapCols(t, j);
          continue;
        }
        // Pivot now isolated; enforce divisibility of the remaining block.
        int bad = -1;
        for (int i = t + 1; i < m && bad < 0; ++i) {
          for (int j = t + 1; j < n; ++j) {
            if (a_(i, j) % a_(t, t) != 0) {
              bad = i;
              break;
            }
          }
        }
        if (bad < 0) break;
        AddRow(t, bad, 1);
      }
      if (a_(t, t) < 0) NegateRow(t);
      factors.push_back(a_(t, t));
    }
    return factors;
  }

  IntMatrix& a() { return a_; }
  IntMatrix& u() { return u_; }
  IntMatrix& v() { return v_; }

 private:
  std::pair<int, int> SmallestEntry(int r0, int c0) const {
    std::pair<int, int> best{-1, -1};
    BigInt best_abs;
    for (int i = r0; i < a_.rows(); ++i) {
      for (int j = c0; j < a_.cols(); ++j) {
        if (a_(i, j) == 0) continue;
        BigInt x = abs(a_(i, j));
        if (best.first < 0 || x < best_abs) {
          best = {i, j};
          best_abs = x;
          if (best_abs == 1) return best;
        }
      }
    }
    return best;
  }

  int SmallestInColumn(int c, int r0) const {
    int best = -1;
    BigInt best_abs;
    for (int i = r0; i < a_.rows(); ++i) {
      if (a_(i, c) == 0) continue;
      BigInt x = abs(a_(i, c));
      if (best < 0 || x < best_abs) {
        best = i;
        best_abs = x;
      }
    }
    return best;
  }

  int SmallestInRow(int r, int c0) const {
    int best = -1;
    BigInt best_abs;
    for (int j = c0; j < a_.cols(); ++j) {
      if (a_(r, j) == 0) continue;
      BigInt x = abs(a_(r, j));
      if (best < 0 || x < best_abs) {
        best = j;
        best_abs = x;
      }
    }
    return best;
  }

  void SwapRows(int i, int k) {
    if (i == k) return;
    for (int j = 0; j < a_.cols(); ++j) std::swap(a_(i, j), a_(k, j));
    if (certificates_) {
      for (int j = 0; j < u_.cols(); ++j) std::swap(u_(i, j), u_(k, j));
    }
  }

  void SwapCols(int j, int k) {
    if (j == k) return;
    for (int i = 0; i < a_.rows(); ++i) std::swap(a_(i, j), a_(i, k));
    if (certificates_) {
      for (int i = 0; i < v_.rows(); ++i) std::swap(v_(i, j), v_(i, k));
    }
  }

  // row_i += q * row_k
  void AddRow(int i, int k, const BigInt& q) {
    if (q == 0) return;
    for (int j = 0; j < a_.cols(); ++j) {
      if (a_(k, j) != 0) a_(i, j) += q * a_(k, j);
    }
    if (certificates_) {
      for (int j = 0; j < u_.cols(); ++j) {
        if (u_(k, j) != 0) u_(i, j) += q * u_(k, j);
      }
    }
  }

  // col_j += q * col_k
  void AddCol(int j, int k, const BigInt& q) {
    if (q == 0) return;
    for (int i = 0; i < a_.rows(); ++i) {
      if (a_(i, k) != 0) a_(i, j) += q * a_(i, k);
    }
    if (certificates_) {
      for (int i = 0; i < v_.rows(); ++i) {
        if (v_(i, k) != 0) v_(i, j) += q * v_(i, k);
      }
    }
  }

  void NegateRow(int i) {
    for (int j = 0; j < a_.cols(); ++j) a_(i, j) = -a_(i, j);
    if (certificates_) {
      for (int j = 0; j < u_.cols(); ++j) u_(i, j) = -u_(i, j);
    }
  }

  IntMatrix a_;
  IntMatrix u_;
  IntMatrix v_;
  bool certificates_;
};

SmithInvariants FromFactors(const std::vector<BigInt>& factors) {
  SmithInvariants out;
  out.rank = static_cast<int>(factors.size());
  for (const BigInt& d : factors) {
    if (d > 1) out.torsion.push_back(d);
  }
  return out;
}

struct Overflow {};

// Checked 64-bit arithmetic; BigInt needs no checks.
inline std::int64_t SubMul(std::int64_t a, std::int64_t f, std::int64_t b) {
  std::int64_t prod;
  std::int64_t out;
  if (__builtin_mul_overflow(f, b, &prod) ||
      __builtin_sub_overflow(a, prod, &out)) {
    throw Overflow{};
  }
  return out;
}
inline BigInt SubMul(const BigInt& a, const BigInt& f, const BigInt& b) {
  return a - f * b;
}
inline bool IsUnit(std::int64_t x) { return x == 1 || x == -1; }
inline bool IsUnit(const BigInt& x) { return x == 1 || x == -1; }

template <class T>
SmithInvariants SparseEliminate(const SparseIntMatrix& input) {
  using RowEntry = std::pair<int, T>;
  const int rows = input.rows();
  const int cols = input.cols();
  std::vector<std::vector<RowEntry>> row(rows);
  std::vector<std::vector<int>> col_rows(cols);
  std::vector<int> col_count(cols, 0);
  for (int c = 0; c < cols; ++c) {
    for (auto [r, v] : input.column(c)) {
      row[r].emplace_back(c, T(v));
      col_rows[c].push_back(r);
      ++col_count[c];
    }
  }
  std::vector<char> alive(rows, 1);
  using Key = std::pair<std::size_t, int>;
  std::priority_queue<Key, std::vector<Key>, std::greater<Key>> heap;
  for (int r = 0; r < rows; ++r) {
    if (!row[r].empty()) heap.emplace(row[r].size(), r);
  }
  auto find_entry = [&](int r, int c) -> RowEntry* {
    auto& entries = row[r];
    auto it = std::lower_bound(
        entries.begin(), entries.end(), c,
        [](const RowEntry& e, int col) { return e.first < col; });
    return (it != entries.end() && it->first == c) ? &*it : nullptr;
  };
  int rank = 0;
  std::vector<RowEntry> merged;
  while (!heap.empty()) {
    auto [len, i] = heap.top();
    heap.pop();
    if (!alive[i] || row[i].size() != len || len == 0) continue;
    int pivot_col = -1;
    T pivot_val{};
    for (const auto& [c, v] : row[i]) {
      if (IsUnit(v) && (pivot_col < 0 || col_count[c] < col_count[pivot_col])) {
        pivot_col = c;
        pivot_val = v;
      }
    }
    if (pivot_col < 0) continue;
    for (int k : col_rows[pivot_col]) {
      if (k == i || !alive[k]) continue;
      RowEntry* e = find_entry(k, pivot_col);
      if (e == nullptr) continue;
      const T factor = e->second * pivot_val;  // pivot_val is its own inverse
      merged.clear();
      auto& target = row[k];
      const auto& source = row[i];
      std::size_t a = 0;
      std::size_t b = 0;
      while (a < target.size() || b < source.size()) {
        if (b == source.size() ||
            (a < target.size() && target[a].first < source[b].first)) {
          merged.push_back(std::move(target[a++]));
        } else if (a == target.size() || source[b].first < target[a].first) {
          const int c = source[b].first;
          merged.emplace_back(c, SubMul(T(0), factor, source[b].second));
          col_rows[c].push_back(k);
          ++col_count[c];
          ++b;
        } else {
          const int c = source[b].first;
          T value = SubMul(target[a].second, factor, source[b].second);
          if (value == 0) {
            --col_count[c];
          } else {
            merged.emplace_back(c, std::move(value));
          }
          ++a;
          ++b;
        }
      }
      target.swap(merged);
      if (!target.empty()) heap.emplace(target.size(), k);
    }
    for (const auto& [c, v] : row[i]) --col_count[c];
    row[i].clear();
    alive[i] = 0;
    col_rows[pivot_col].clear();
    ++rank;
  }
  // Dense remainder.
  std::vector<int> live_rows;
  std::vector<int> col_index(cols, -1);
  int live_cols = 0;
  for (int r = 0; r < rows; ++r) {
    if (!alive[r] || row[r].empty()) continue;
    live_rows.push_back(r);
    for (const auto& [c, v] : row[r]) {
      if (col_index[c] < 0) col_index[c] = live_cols++;
    }
  }
  SmithInvariants out;
  if (!live_rows.empty()) {
    IntMatrix rest(static_cast<int>(live_rows.size()), live_cols);
    for (std::size_t i = 0; i < live_rows.size(); ++i) {
      for (const auto& [c, v] : row[live_rows[i]]) {
        rest(static_cast<int>(i), col_index[c]) = BigInt(v);
      }
    }
    out = DenseSmithInvariants(std::move(rest));
  }
  out.rank += rank;
  return out;
}

}  // namespace

SmithForm SmithNormalForm(const IntMatrix& a) {
  DenseSmith engine(a, /*certificates=*/true);
  SmithForm out;
  out.invariant_factors = engine.Run();
  out.d = std::move(engine.a());
  out.u = std::move(engine.u());
  out.v = std::move(engine.v());
  return out;
}

bool VerifySmithCertificate(const IntMatrix& a, const SmithForm& snf) {
  const int m = a.rows();
  const int n = a.cols();
  if (snf.u.rows() != m || snf.u.cols() != m || snf.v.rows() != n ||
      snf.v.cols() != n || snf.d.rows() != m || snf.d.cols() != n) {
    return false;
  }
  if (snf.u * a * snf.v != snf.d) return false;
  const int k = snf.rank();
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      const BigInt& x = snf.d(i, j);
      if (i == j && i < k) {
        if (x != snf.invariant_factors[i] || x <= 0) return false;
        if (i > 0 && x % snf.invariant_factors[i - 1] != 0) return false;
      } else if (x != 0) {
        return false;
      }
    }
  }
  return abs(Determinant(snf.u)) == 1 && abs(Determinant(snf.v)) == 1;
}

SmithInvariants DenseSmithInvariants(IntMatrix a) {
  DenseSmith engine(std::move(a), /*certificates=*/false);
  return FromFactors(engine.Run());
}

SmithInvariants SparseSmithInvariants(const SparseIntMatrix& a) {
  try {
    return SparseEliminate<std::int64_t>(a);
  } catch (const Overflow&) {
    return SparseEliminate<BigInt>(a);
  }
}

BigInt Determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) {
    throw Error(ErrorCode::kInvalidParameters, "determinant of non-square");
  }
  const int n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  BigInt previous = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i) {
        if (m(i, k) != 0) {
          swap = i;
          break;
        }
      }
      if (swap < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      }
      m(i, k) = 0;
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace trophom
