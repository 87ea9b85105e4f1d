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

#ifndef SEMILIN_FLAGS_HPP
#define SEMILIN_FLAGS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "semilin/semilinear.hpp"

namespace semilin {

using Subspace = std::vector<Vector>;  // a basis, in e-coordinates

/// A chain V_0 > V_1 > ... of subspaces with strictly decreasing dimension.
/// The last member may be nonzero (an image flag stops at the terminal image).
class Flag {
 public:
  /// Throws InvalidArgument unless every member is given by independent
  /// vectors of length g, dimensions strictly decrease, and each member lies
  /// inside its predecessor.
  Flag(FieldPtr field, std::size_t g, std::vector<Subspace> members);

  const FieldPtr& field() const { return field_; }
  std::size_t dimension() const { return g_; }
  std::size_t size() const { return members_.size(); }
  const std::vector<Subspace>& members() const { return members_; }
  const Subspace& member(std::size_t i) const { return members_[i]; }
  std::vector<std::size_t> dims() const;

 private:
  FieldPtr field_;
  std::size_t g_;
  std::vector<Subspace> members_;
};

/// Result of adapting an ordered basis to one subspace U.
struct SubspaceAdaptation {
  std::vector<Vector> basis;          // {e_j : j not in J}, then {u_j : j in J}
  std::vector<std::size_t> pivots;    // J, 0-based, increasing
};

/// An ordered basis adapted to every member of a flag.
struct AdaptedBasis {
  std::vector<Vector> vectors;
  // pivot_sets[i] is the J produced when adapting to flag member i.
  std::vector<std::vector<std::size_t>> pivot_sets;

  friend bool operator==(const AdaptedBasis&, const AdaptedBasis&) = default;
};

/// The canonical adaptation of the ordered basis `e_basis` to the subspace
/// spanned by `u_basis`.
///
/// With U_j = U n span{e_{j+1}, ..., e_g}, J is the set of j with
/// U_{j-1} != U_j. For each j in J, u_j is the unique vector of U whose
/// e-coordinates are 1 at j, 0 before j, and 0 at every later index of J.
/// In e-coordinates these are exactly the rows of the reduced row echelon
/// form of U, and J is its pivot set.
///
/// The returned basis lists the e_j with j not in J in their original order,
/// followed by the u_j in increasing j, so its last dim U vectors span U.
/// When `frozen_tail` = n, the last n vectors of `e_basis` must lie in U and
/// come back unchanged.
///
/// Throws InvalidArgument if `e_basis` is not a basis, `u_basis` is
/// dependent, or the frozen tail is not contained in U.
SubspaceAdaptation adapt_to_subspace(const FieldPtr& field, std::span<const Vector> e_basis,
                                     std::span<const Vector> u_basis,
                                     std::size_t frozen_tail = 0);

/// Adapts `e_basis` to each flag member in turn, deepest member first, each
/// step freezing the tail that spans the previously adapted member.
AdaptedBasis adapt_to_flag(std::span<const Vector> e_basis, const Flag& flag);

/// V_i = F^i(V) for i = 0, 1, ... until the dimension stabilizes. The first
/// member is V, the second im F (unless F is bijective), the last the
/// terminal image.
Flag image_flag(const SemilinearMap& f);

std::vector<Vector> standard_basis(std::size_t g);

}  // namespace semilin

#endif  // SEMILIN_FLAGS_HPP
