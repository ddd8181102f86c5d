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

#ifndef MBW_FINITE_FIELD_H_
#define MBW_FINITE_FIELD_H_

#include <cstdint>
#include <span>
#include <vector>

#include "mbw/subset.h"

namespace mbw {

using Residue = std::uint32_t;

// The prime field GF(p). Only prime moduli are accepted.
class PrimeField {
 public:
  // Throws InputError if `modulus` is not a prime below 2^31.
  explicit PrimeField(std::int64_t modulus);

  Residue modulus() const { return p_; }

  Residue Reduce(std::int64_t value) const;
  Residue Add(Residue a, Residue b) const;
  Residue Sub(Residue a, Residue b) const;
  Residue Neg(Residue a) const;
  Residue Mul(Residue a, Residue b) const;
  // Throws std::domain_error("zero division") for a == 0.
  Residue Inv(Residue a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  Residue p_;
};

bool IsPrime(std::int64_t value);

// Dense row-major matrix with entries in GF(p).
class FieldMatrix {
 public:
  FieldMatrix(PrimeField field, int rows, int cols);
  // Entries are reduced mod p; throws InputError on a size mismatch.
  FieldMatrix(PrimeField field, int rows, int cols,
              std::span<const std::int64_t> entries);
  static FieldMatrix FromRows(PrimeField field,
                              const std::vector<std::vector<std::int64_t>>& rows);

  const PrimeField& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Residue at(int r, int c) const { return entries_[Index(r, c)]; }
  void set(int r, int c, std::int64_t value) {
    entries_[Index(r, c)] = field_.Reduce(value);
  }
  std::span<const Residue> entries() const { return entries_; }

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  std::size_t Index(int r, int c) const {
    return static_cast<std::size_t>(r) * cols_ + c;
  }

  PrimeField field_;
  int rows_;
  int cols_;
  std::vector<Residue> entries_;
};

// Rank of the whole matrix by exact Gaussian elimination.
int Rank(const FieldMatrix& m);

// Rank of the submatrix formed by the listed columns (0-based). Throws
// std::out_of_range on a bad index.
int ColumnRank(const FieldMatrix& m, std::span<const int> cols);
int ColumnRank(const FieldMatrix& m, Subset cols);

FieldMatrix Multiply(const FieldMatrix& a, const FieldMatrix& b);

}  // namespace mbw

#endif  // MBW_FINITE_FIELD_H_
