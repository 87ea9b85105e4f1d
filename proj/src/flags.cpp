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

#include "semilin/flags.hpp"

#include <string>

namespace semilin {

Flag::Flag(FieldPtr field, std::size_t g, std::vector<Subspace> members)
    : field_(std::move(field)), g_(g), members_(std::move(members)) {
  if (!field_) throw InvalidArgument("flag without a field");
  std::size_t previous_dim = g_ + 1;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    const auto& m = members_[i];
    for (const auto& v : m) {
      if (v.size() != g_) throw InvalidArgument("flag member vector of wrong length");
      for (Code c : v) field_->check(c);
    }
    const std::size_t dim = span_dim(*field_, m);
    if (dim != m.size()) {
      throw InvalidArgument("flag member " + std::to_string(i) + " is not given by a basis");
    }
    if (dim >= previous_dim) {
      throw InvalidArgument("flag dimensions must strictly decrease");
    }
    if (i > 0) {
      for (const auto& v : m) {
        if (!in_span(*field_, members_[i - 1], v)) {
          throw InvalidArgument("flag member " + std::to_string(i) +
                                " is not contained in its predecessor");
        }
      }
    }
    previous_dim = dim;
  }
}

std::vector<std::size_t> Flag::dims() const {
  std::vector<std::size_t> out;
  out.reserve(members_.size());
  for (const auto& m : members_) out.push_back(m.size());
  return out;
}

std::vector<Vector> standard_basis(std::size_t g) {
  std::vector<Vector> out(g, Vector(g, 0));
  for (std::size_t i = 0; i < g; ++i) out[i][i] = 1;
  return out;
}

SubspaceAdaptation adapt_to_subspace(const FieldPtr& field, std::span<const Vector> e_basis,
                                     std::span<const Vector> u_basis,
                                     std::size_t frozen_tail) {
  const std::size_t g = e_basis.size();
  const Matrix e = Matrix::from_columns(field, g, e_basis);
  Matrix e_inv(field, 0, 0);
  try {
    e_inv = mat_inverse(e);
  } catch (const DomainError&) {
    throw InvalidArgument("adapt_to_subspace: ordered basis is not a basis of V");
  }
  for (const auto& u : u_basis) {
    if (u.size() != g) throw InvalidArgument("adapt_to_subspace: subspace vector of wrong length");
  }
  if (span_dim(*field, u_basis) != u_basis.size()) {
    throw InvalidArgument("adapt_to_subspace: subspace vectors are dependent");
  }

  // Coordinates of U with respect to e, one row per spanning vector.
  std::vector<Vector> coords;
  coords.reserve(u_basis.size());
  for (const auto& u : u_basis) coords.push_back(mat_apply(e_inv, u));
  const auto [reduced, pivots] = rref(Matrix::from_rows(field, g, coords));
  const std::size_t m = pivots.size();

  if (frozen_tail > m) {
    throw InvalidArgument("adapt_to_subspace: frozen tail longer than dim U");
  }
  const auto rows = reduced.row_vectors();
  const std::span<const Vector> row_span(rows.data(), m);
  for (std::size_t k = g - frozen_tail; k < g; ++k) {
    Vector unit(g, 0);
    unit[k] = 1;
    if (!in_span(*field, row_span, unit)) {
      throw InvalidArgument("adapt_to_subspace: frozen tail vector " + std::to_string(k + 1) +
                            " does not lie in U");
    }
  }

  SubspaceAdaptation out;
  out.pivots = pivots;
  out.basis.reserve(g);
  std::vector<bool> is_pivot(g, false);
  for (auto j : pivots) is_pivot[j] = true;
  for (std::size_t j = 0; j < g; ++j) {
    if (!is_pivot[j]) out.basis.push_back(e_basis[j]);
  }
  for (std::size_t k = 0; k < m; ++k) out.basis.push_back(mat_apply(e, rows[k]));

  for (std::size_t k = g - frozen_tail; k < g; ++k) {
    if (out.basis[k] != e_basis[k]) {
      throw InternalError("adapt_to_subspace: frozen tail moved");
    }
  }
  return out;
}

AdaptedBasis adapt_to_flag(std::span<const Vector> e_basis, const Flag& flag) {
  if (e_basis.size() != flag.dimension()) {
    throw InvalidArgument("adapt_to_flag: basis size differs from the flag's dimension");
  }
  AdaptedBasis out;
  out.vectors.assign(e_basis.begin(), e_basis.end());
  out.pivot_sets.resize(flag.size());
  const auto dims = flag.dims();
  for (std::size_t i = flag.size(); i-- > 0;) {
    const std::size_t frozen = i + 1 < flag.size() ? dims[i + 1] : 0;
    auto step = adapt_to_subspace(flag.field(), out.vectors, flag.member(i), frozen);
    out.vectors = std::move(step.basis);
    out.pivot_sets[i] = std::move(step.pivots);
  }
  return out;
}

Flag image_flag(const SemilinearMap& f) {
  const std::size_t g = f.dimension();
  std::vector<Subspace> members;
  members.push_back(standard_basis(g));
  while (true) {
    std::vector<Vector> images;
    images.reserve(members.back().size());
    for (const auto& v : members.back()) images.push_back(semilin::apply(f, v));
    auto next = span_basis(f.field(), g, images);
    if (next.size() == members.back().size()) break;
    members.push_back(std::move(next));
  }
  return Flag(f.field(), g, std::move(members));
}

}  // namespace semilin
