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

#include "mbw/finite_field.h"

#include <stdexcept>
#include <string>
#include <utility>

#include "mbw/errors.h"

namespace mbw {

bool IsPrime(std::int64_t value) {
  if (value < 2) return false;
  if (value < 4) return true;
  if (value % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= value; d += 2) {
    if (value % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::int64_t modulus) {
  if (modulus >= (std::int64_t{1} << 31) || !IsPrime(modulus)) {
    throw InputError("field modulus " + std::to_string(modulus) +
                     " is not a prime below 2^31 (only prime fields GF(p) "
                     "are supported)");
  }
  p_ = static_cast<Residue>(modulus);
}

Residue PrimeField::Reduce(std::int64_t value) const {
  std::int64_t r = value % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Residue>(r);
}

Residue PrimeField::Add(Residue a, Residue b) const {
  const std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<Residue>(s >= p_ ? s - p_ : s);
}

Residue PrimeField::Sub(Residue a, Residue b) const {
  return a >= b ? a - b : static_cast<Residue>(std::uint64_t{a} + p_ - b);
}

Residue PrimeField::Neg(Residue a) const { return a == 0 ? 0 : p_ - a; }

Residue PrimeField::Mul(Residue a, Residue b) const {
  return static_cast<Residue>((std::uint64_t{a} * b) % p_);
}

Residue PrimeField::Inv(Residue a) const {
  if (a % p_ == 0) throw std::domain_error("zero division");
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return Reduce(t);
}

FieldMatrix::FieldMatrix(PrimeField field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
  entries_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

FieldMatrix::FieldMatrix(PrimeField field, int rows, int cols,
                         std::span<const std::int64_t> entries)
    : FieldMatrix(field, rows, cols) {
  if (entries.size() != entries_.size()) {
    throw InputError("matrix has " + std::to_string(entries.size()) +
                     " entries, expected " + std::to_string(entries_.size()));
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    entries_[i] = field_.Reduce(entries[i]);
  }
}

FieldMatrix FieldMatrix::FromRows(
    PrimeField field, const std::vector<std::vector<std::int64_t>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  FieldMatrix m(field, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) {
      throw InputError("row " + std::to_string(i + 1) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " +
                       std::to_string(c));
    }
    for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

namespace {

// Row-reduces a dense rows x cols block in place and returns its rank.
int EliminateInPlace(const PrimeField& f, std::vector<Residue>& a, int rows,
                     int cols) {
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (a[static_cast<std::size_t>(r) * cols + c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int j = c; j < cols; ++j) {
        std::swap(a[static_cast<std::size_t>(pivot) * cols + j],
                  a[static_cast<std::size_t>(rank) * cols + j]);
      }
    }
    Residue* prow = &a[static_cast<std::size_t>(rank) * cols];
    const Residue inv = f.Inv(prow[c]);
    for (int j = c; j < cols; ++j) prow[j] = f.Mul(prow[j], inv);
    for (int r = rank + 1; r < rows; ++r) {
      Residue* row = &a[static_cast<std::size_t>(r) * cols];
      const Residue factor = row[c];
      if (factor == 0) continue;
      for (int j = c; j < cols; ++j) {
        row[j] = f.Sub(row[j], f.Mul(factor, prow[j]));
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int Rank(const FieldMatrix& m) {
  std::vector<Residue> a(m.entries().begin(), m.entries().end());
  return EliminateInPlace(m.field(), a, m.rows(), m.cols());
}

int ColumnRank(const FieldMatrix& m, std::span<const int> cols) {
  const int k = static_cast<int>(cols.size());
  if (k == 0 || m.rows() == 0) {
    for (int c : cols) {
      if (c < 0 || c >= m.cols()) {
        throw std::out_of_range("column index " + std::to_string(c) +
                                " out of range");
      }
    }
    return 0;
  }
  // Transposed layout: one row per selected column, so elimination runs
  // along the shorter dimension when |cols| is small.
  std::vector<Residue> a(static_cast<std::size_t>(k) * m.rows());
  for (int i = 0; i < k; ++i) {
    const int c = cols[i];
    if (c < 0 || c >= m.cols()) {
      throw std::out_of_range("column index " + std::to_string(c) +
                              " out of range");
    }
    for (int r = 0; r < m.rows(); ++r) {
      a[static_cast<std::size_t>(i) * m.rows() + r] = m.at(r, c);
    }
  }
  return EliminateInPlace(m.field(), a, k, m.rows());
}

int ColumnRank(const FieldMatrix& m, Subset cols) {
  if (m.cols() < 32 && (cols >> m.cols()) != 0) {
    throw std::out_of_range("column subset exceeds matrix width");
  }
  const std::vector<int> idx = Elements(cols);
  return ColumnRank(m, idx);
}

FieldMatrix Multiply(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols() != b.rows() || !(a.field() == b.field())) {
    throw InputError("incompatible matrix product");
  }
  const PrimeField& f = a.field();
  FieldMatrix out(f, a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      Residue acc = 0;
      for (int t = 0; t < a.cols(); ++t) {
        acc = f.Add(acc, f.Mul(a.at(i, t), b.at(t, j)));
      }
      out.set(i, j, acc);
    }
  }
  return out;
}

}  // namespace mbw
