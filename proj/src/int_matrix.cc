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

#include "trophom/int_matrix.h"

#include <algorithm>
#include <sstream>

namespace trophom {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(static_cast<int>(rows.size())),
      cols_(rows.size() == 0 ? 0 : static_cast<int>(rows.begin()->size())) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    for (long long x : row) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::Identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::IsZero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const BigInt& x) { return x == 0; });
}

IntMatrix IntMatrix::Transpose() const {
  IntMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

std::vector<BigInt> IntMatrix::Row(int r) const {
  return std::vector<BigInt>(data_.begin() + r * cols_,
                             data_.begin() + (r + 1) * cols_);
}

void IntMatrix::AppendRow(const std::vector<BigInt>& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(row.size());
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const BigInt& x = a(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        if (b(k, j) != 0) c(i, j) += x * b(k, j);
      }
    }
  }
  return c;
}

std::string IntMatrix::ToString() const {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < rows_; ++r) {
    os << (r ? ",[" : "[");
    for (int c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

void SparseIntMatrix::Add(int row, int col, std::int64_t value) {
  if (value != 0) columns_[col].emplace_back(row, value);
}

void SparseIntMatrix::Normalize() {
  for (auto& column : columns_) {
    std::sort(column.begin(), column.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    std::vector<Entry> merged;
    for (const Entry& e : column) {
      if (!merged.empty() && merged.back().first == e.first) {
        merged.back().second += e.second;
      } else {
        merged.push_back(e);
      }
    }
    std::erase_if(merged, [](const Entry& e) { return e.second == 0; });
    column = std::move(merged);
  }
}

std::size_t SparseIntMatrix::NonZeros() const {
  std::size_t total = 0;
  for (const auto& column : columns_) total += column.size();
  return total;
}

IntMatrix SparseIntMatrix::ToDense() const {
  IntMatrix m(rows_, cols());
  for (int c = 0; c < cols(); ++c) {
    for (auto [r, v] : columns_[c]) m(r, c) = v;
  }
  return m;
}

SparseIntMatrix SparseIntMatrix::FromDense(const IntMatrix& m) {
  SparseIntMatrix s(m.rows(), m.cols());
  for (int c = 0; c < m.cols(); ++c) {
    for (int r = 0; r < m.rows(); ++r) {
      if (m(r, c) != 0) s.Add(r, c, static_cast<std::int64_t>(m(r, c)));
    }
  }
  return s;
}

bool SparseIntMatrix::ProductIsZero(const SparseIntMatrix& other) const {
  // (this * other)[:, j] = sum_k other[k, j] * this[:, k]
  std::vector<BigInt> accumulator(rows_);
  std::vector<int> touched;
  for (int j = 0; j < other.cols(); ++j) {
    touched.clear();
    for (auto [k, x] : other.column(j)) {
      for (auto [i, y] : columns_[k]) {
        if (accumulator[i] == 0) touched.push_back(i);
        accumulator[i] += BigInt(x) * y;
      }
    }
    bool zero = true;
    for (int i : touched) {
      if (accumulator[i] != 0) zero = false;
      accumulator[i] = 0;
    }
    if (!zero) return false;
  }
  return true;
}

}  // namespace trophom
