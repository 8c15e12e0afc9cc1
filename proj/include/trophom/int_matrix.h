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

#ifndef TROPHOM_INT_MATRIX_H_
#define TROPHOM_INT_MATRIX_H_

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "trophom/numeric.h"

namespace trophom {

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix Identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BigInt& operator()(int r, int c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(int r, int c) const { return data_[r * cols_ + c]; }

  bool IsZero() const;
  IntMatrix Transpose() const;
  std::vector<BigInt> Row(int r) const;
  void AppendRow(const std::vector<BigInt>& row);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::string ToString() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> data_;
};

// Sparse matrix stored by columns; entries are small in practice (boundary
// matrices), so the storage type is 64-bit. Structural zeros are never
// stored.
class SparseIntMatrix {
 public:
  using Entry = std::pair<int, std::int64_t>;  // (row, value)

  SparseIntMatrix() = default;
  SparseIntMatrix(int rows, int cols) : rows_(rows), columns_(cols) {}

  int rows() const { return rows_; }
  int cols() const { return static_cast<int>(columns_.size()); }
  // Adds `value` at (row, col). Entries in a column must be pushed with
  // strictly increasing rows unless Normalize() is called afterwards.
  void Add(int row, int col, std::int64_t value);
  // Sorts every column by row, merges duplicates and drops zeros.
  void Normalize();
  const std::vector<Entry>& column(int c) const { return columns_[c]; }
  std::size_t NonZeros() const;

  IntMatrix ToDense() const;
  static SparseIntMatrix FromDense(const IntMatrix& m);
  // Returns true iff this * other == 0 (this: A x B, other: B x C).
  bool ProductIsZero(const SparseIntMatrix& other) const;

 private:
  int rows_ = 0;
  std::vector<std::vector<Entry>> columns_;
};

}  // namespace trophom

#endif  // TROPHOM_INT_MATRIX_H_
