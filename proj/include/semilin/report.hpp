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

#ifndef SEMILIN_REPORT_HPP
#define SEMILIN_REPORT_HPP

// JSON renderings of every result. Keys appear in a fixed order and big
// counts are decimal strings, so output is byte-stable for fixed input.
// Pivot positions are 1-based (pivot j refers to basis vector e_j).

#include <optional>
#include <string>

#include "semilin/bijection.hpp"
#include "semilin/counting.hpp"

namespace semilin::report {

std::string field_info(const Field& field);

/// `only` restricts the cells array to one profile; totals and corollaries
/// always cover the whole table.
std::string counts(const VerifyReport& report, std::optional<RankProfile> only = {});

std::string roundtrip(const RoundtripReport& report);

std::string adapt(const Flag& flag, const AdaptedBasis& adapted);

std::string mu(const SemilinearMap& f, const VectorTuple& t);

std::string nu(const VectorTuple& t, const SemilinearMap& f);

}  // namespace semilin::report

#endif  // SEMILIN_REPORT_HPP
