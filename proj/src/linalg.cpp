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

#include "semilin/linalg.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace semilin {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, 0) {
  if (!field_) throw InvalidArgument("matrix without a field");
}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Code> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (!field_) throw InvalidArgument("matrix without a field");
  if (entries_.size() != rows * cols) {
    throw InvalidArgument("matrix needs " + std::to_string(rows * cols) + " entries, got " +
                          std::to_string(entries_.size()));
  }
  for (Code c : entries_) field_->check(c);
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix out(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

Matrix Matrix::from_rows(FieldPtr field, std::size_t cols, std::span<const Vector> rows) {
  std::vector<Code> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw InvalidArgument("row length mismatch");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return Matrix(std::move(field), rows.size(), cols, std::move(entries));
}

Matrix Matrix::from_columns(FieldPtr field, std::size_t rows, std::span<const Vector> columns) {
  Matrix out(std::move(field), rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw InvalidArgument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) {
      out.field_->check(columns[j][i]);
      out(i, j) = columns[j][i];
    }
  }
  return out;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

std::vector<Vector> Matrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

std::vector<Vector> Matrix::column_vectors() const {
  std::vector<Vector> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](Code c) { return c == 0; });
}

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
  if (!(*a.field() == *b.field())) throw InvalidArgument("matrices over different fields");
}

}  // namespace

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) {
    throw InvalidArgument("mat_mul: " + std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()) + " times " + std::to_string(b.rows()) +
                          "x" + std::to_string(b.cols()));
  }
  const Field& f = *a.field();
  Matrix out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Code aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) = f.add(out(i, j), f.mul(aik, b(k, j)));
      }
    }
  }
  return out;
}

Vector mat_apply(const Matrix& a, const Vector& v) {
  if (v.size() != a.cols()) throw InvalidArgument("mat_apply: dimension mismatch");
  const Field& f = *a.field();
  Vector out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Code acc = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) acc = f.add(acc, f.mul(a(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

Matrix map_entries(const Matrix& a, Automorphism tau) {
  const Field& f = *a.field();
  f.check(tau);
  std::vector<Code> entries(a.entries().begin(), a.entries().end());
  for (auto& c : entries) c = f.frobenius(c, tau);
  return Matrix(a.field(), a.rows(), a.cols(), std::move(entries));
}

Vector map_entries(const Field& field, const Vector& v, Automorphism tau) {
  field.check(tau);
  Vector out(v);
  for (auto& c : out) c = field.frobenius(c, tau);
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.field(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  }
  return out;
}

namespace detail {

std::size_t eliminate(const Field& field, std::span<Code> buf, std::size_t rows,
                      std::size_t cols, bool reduce, std::vector<std::size_t>* pivots) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot_row = rank;
    while (pivot_row < rows && buf[pivot_row * cols + col] == 0) ++pivot_row;
    if (pivot_row == rows) continue;
    if (pivot_row != rank) {
      std::swap_ranges(buf.begin() + static_cast<std::ptrdiff_t>(pivot_row * cols),
                       buf.begin() + static_cast<std::ptrdiff_t>((pivot_row + 1) * cols),
                       buf.begin() + static_cast<std::ptrdiff_t>(rank * cols));
    }
    Code* prow = buf.data() + rank * cols;
    if (reduce) {
      const Code scale = field.inv(prow[col]);
      for (std::size_t j = col; j < cols; ++j) prow[j] = field.mul(prow[j], scale);
    }
    const Code pivot_inv = reduce ? Code{1} : field.inv(prow[col]);
    for (std::size_t i = reduce ? 0 : rank + 1; i < rows; ++i) {
      if (i == rank) continue;
      Code* row = buf.data() + i * cols;
      if (row[col] == 0) continue;
      const Code factor = field.neg(field.mul(row[col], pivot_inv));
      for (std::size_t j = col; j < cols; ++j) {
        row[j] = field.add(row[j], field.mul(factor, prow[j]));
      }
    }
    if (pivots) pivots->push_back(col);
    ++rank;
  }
  return rank;
}

}  // namespace detail

std::size_t rank(const Matrix& a) {
  std::vector<Code> buf(a.entries().begin(), a.entries().end());
  return detail::eliminate(*a.field(), buf, a.rows(), a.cols(), false);
}

Echelon rref(const Matrix& a) {
  std::vector<Code> buf(a.entries().begin(), a.entries().end());
  std::vector<std::size_t> pivots;
  detail::eliminate(*a.field(), buf, a.rows(), a.cols(), true, &pivots);
  return {Matrix(a.field(), a.rows(), a.cols(), std::move(buf)), std::move(pivots)};
}

std::vector<Vector> kernel_basis(const Matrix& a) {
  const auto [r, pivots] = rref(a);
  const Field& f = *a.field();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> out;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(a.cols(), 0);
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = f.neg(r(k, free));
    out.push_back(std::move(v));
  }
  return out;
}

Matrix mat_inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw DomainError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return a;
  const std::size_t w = 2 * n;
  std::vector<Code> buf(n * w, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) buf[i * w + j] = a(i, j);
    buf[i * w + n + i] = 1;
  }
  std::vector<std::size_t> pivots;
  detail::eliminate(*a.field(), buf, n, w, true, &pivots);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw DomainError("matrix is singular");
  Matrix out(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = buf[i * w + n + j];
  }
  return out;
}

std::size_t span_dim(const Field& field, std::span<const Vector> vs) {
  if (vs.empty()) return 0;
  const std::size_t len = vs.front().size();
  std::vector<Code> buf;
  buf.reserve(vs.size() * len);
  for (const auto& v : vs) {
    if (v.size() != len) throw InvalidArgument("span_dim: vectors of different lengths");
    buf.insert(buf.end(), v.begin(), v.end());
  }
  return detail::eliminate(field, buf, vs.size(), len, false);
}

std::vector<Vector> span_basis(const FieldPtr& field, std::size_t length,
                               std::span<const Vector> vs) {
  const auto [r, pivots] = rref(Matrix::from_rows(field, length, vs));
  std::vector<Vector> out;
  out.reserve(pivots.size());
  for (std::size_t i = 0; i < pivots.size(); ++i) out.push_back(r.row(i));
  return out;
}

bool in_span(const Field& field, std::span<const Vector> vs, const Vector& v) {
  std::vector<Vector> extended(vs.begin(), vs.end());
  const std::size_t before = span_dim(field, extended);
  extended.push_back(v);
  return span_dim(field, extended) == before;
}

}  // namespace semilin
