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

#ifndef SEMILIN_TEXT_FORMAT_HPP
#define SEMILIN_TEXT_FORMAT_HPP

// Plain-text matrix blocks:
//
//   # comment
//   tau 1            optional, attaches to the next block
//   2 2 2^1          rows cols fieldspec
//   0 1              one row per line, element codes separated by spaces
//   0 0
//
// A semilinear map is one square block whose column j is F(e_j). A vector
// tuple (x_1, ..., x_g) is one g x g block whose row i is x_i. Subspaces are
// blocks whose rows are basis vectors; "0 g fieldspec" is the zero subspace.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semilin/bijection.hpp"

namespace semilin::text {

struct Block {
  std::optional<unsigned> tau;
  Matrix matrix;
};

struct Document {
  bool standard_basis = false;  // set by a "basis standard" line
  std::vector<Block> blocks;
};

/// Throws ParseError on malformed input or when blocks use different fields.
Document parse(std::string_view text);

std::string format_matrix(const Matrix& m);
std::string format_map(const SemilinearMap& f);
std::string format_tuple(const FieldPtr& field, const VectorTuple& t);

/// Exactly one square block; tau defaults to 0.
SemilinearMap parse_map(std::string_view text);

struct TupleInput {
  FieldPtr field;
  VectorTuple tuple;
  std::optional<unsigned> tau;
};
TupleInput parse_tuple(std::string_view text);

/// Input of the `adapt` command: an ordered basis block (rows are the basis
/// vectors), or "basis standard", followed by flag members from largest to
/// smallest. V itself is prepended when the first member is proper.
struct AdaptInput {
  std::vector<Vector> basis;
  Flag flag;
};
AdaptInput parse_adapt(std::string_view text);

}  // namespace semilin::text

#endif  // SEMILIN_TEXT_FORMAT_HPP
