/*
 * Copyright 2026 The semilin Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SEMILIN_LINALG_HPP
#define SEMILIN_LINALG_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "semilin/gf.hpp"

namespace semilin {

// Coordinates with respect to the fixed ordered basis e of V. Subspaces are
// always carried as explicit basis sequences.
using Vector = std::vector<Code>;

/// Dense row-major matrix over a finite field.
class Matrix {
 public:
  /// Zero matrix.
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  /// Validates the entry count and that every code lies in the field.
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Code> entries);

  static Matrix identity(FieldPtr field, std::size_t n);
  /// Each vector becomes one row; `cols` fixes the width when `rows` is empty.
  static Matrix from_rows(FieldPtr field, std::size_t cols, std::span<const Vector> rows);
  /// Each vector becomes one column.
  static Matrix from_columns(FieldPtr field, std::size_t rows, std::span<const Vector> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldPtr& field() const { return field_; }

  Code operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Code& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  std::span<const Code> entries() const { return entries_; }
  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  std::vector<Vector> row_vectors() const;
  std::vector<Vector> column_vectors() const;

  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && *a.field_ == *b.field_ &&
           a.entries_ == b.entries_;
  }

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Code> entries_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Vector mat_apply(const Matrix& a, const Vector& v);
/// Applies tau to every entry.
Matrix map_entries(const Matrix& a, Automorphism tau);
Vector map_entries(const Field& field, const Vector& v, Automorphism tau);
Matrix transpose(const Matrix& a);

std::size_t rank(const Matrix& a);

/// Reduced row echelon form. Pivots are the leftmost nonzero entry of each
/// nonzero row, scanning rows top-down; pivot entries are 1, every other entry
/// of a pivot column is 0, and zero rows come last.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};
Echelon rref(const Matrix& a);

/// Basis of {v : a v = 0}; one vector per free column of rref(a).
std::vector<Vector> kernel_basis(const Matrix& a);
/// Throws DomainError for singular or non-square input.
Matrix mat_inverse(const Matrix& a);

/// Dimension of the span of `vs`. All vectors must have equal length.
std::size_t span_dim(const Field& field, std::span<const Vector> vs);
/// Nonzero rows of the rref of the matrix whose rows are `vs`.
std::vector<Vector> span_basis(const FieldPtr& field, std::size_t length,
                               std::span<const Vector> vs);
/// True when v lies in the span of `vs`.
bool in_span(const Field& field, std::span<const Vector> vs, const Vector& v);

namespace detail {

// In-place Gauss-Jordan elimination on a row-major rows x cols buffer.
// Returns the rank. With `reduce` false only forward elimination is done,
// which is enough for a rank. `pivots`, when given, receives pivot columns.
std::size_t eliminate(const Field& field, std::span<Code> buf, std::size_t rows,
                      std::size_t cols, bool reduce,
                      std::vector<std::size_t>* pivots = nullptr);

}  // namespace detail

}  // namespace semilin

#endif  // SEMILIN_LINALG_HPP
