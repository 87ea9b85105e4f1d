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

#include "semilin/report.hpp"

#include <json.hpp>

namespace semilin::report {

namespace {

using Json = nlohmann::ordered_json;

Json vectors(const std::vector<Vector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(v);
  return out;
}

Json matrix_rows(const Matrix& m) { return vectors(m.row_vectors()); }

Json profile_json(const RankProfile& p) { return Json{{"r", p.r}, {"s", p.s}}; }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string field_info(const Field& field) {
  Json autos = Json::array();
  for (unsigned i = 0; i < field.degree(); ++i) {
    autos.push_back(Json{{"exponent", i}, {"fixed_points", field.fixed_points(Automorphism{i})}});
  }
  Json j;
  j["field"] = field.spec();
  j["p"] = field.characteristic();
  j["d"] = field.degree();
  j["q"] = field.order();
  j["modulus"] = field.modulus();
  j["automorphisms"] = std::move(autos);
  return dump(j);
}

std::string counts(const VerifyReport& report, std::optional<RankProfile> only) {
  Json cells = Json::array();
  for (const auto& c : report.cells) {
    if (only && !(only->r == c.r && only->s == c.s)) continue;
    Json cell;
    cell["r"] = c.r;
    cell["s"] = c.s;
    cell["theorem"] = c.theorem.str();
    cell["staged"] = c.staged.str();
    cell["enumerated"] = c.enumerated ? Json(c.enumerated->str()) : Json(nullptr);
    cell["match"] = c.match;
    cells.push_back(std::move(cell));
  }
  Json j;
  j["field"] = report.field->spec();
  j["g"] = report.g;
  j["tau"] = report.tau ? Json(report.tau->exponent) : Json(nullptr);
  j["cells"] = std::move(cells);
  j["totals"] = Json{
      {"expected", report.expected_total.str()},
      {"theorem", report.theorem_total.str()},
      {"staged", report.staged_total.str()},
      {"enumerated", report.enumerated_total ? Json(report.enumerated_total->str()) : Json(nullptr)},
  };
  j["corollaries"] = Json{
      {"gl", report.corollaries.gl},
      {"nilpotent", report.corollaries.nilpotent},
      {"total_mass", report.corollaries.total_mass},
  };
  j["pass"] = report.ok();
  return dump(j);
}

std::string roundtrip(const RoundtripReport& report) {
  Json profiles = Json::array();
  for (const auto& [p, t] : report.profiles) {
    profiles.push_back(Json{{"r", p.r},
                            {"s", p.s},
                            {"maps", t.maps},
                            {"maps_passed", t.maps_passed},
                            {"tuples", t.tuples},
                            {"tuples_passed", t.tuples_passed}});
  }
  Json j;
  j["field"] = report.field->spec();
  j["g"] = report.g;
  j["tau"] = report.tau.exponent;
  j["mode"] = report.exhaustive ? "exhaustive" : "sampled";
  j["seed"] = report.exhaustive ? Json(nullptr) : Json(report.seed);
  j["maps"] = Json{{"checked", report.maps_checked}, {"passed", report.maps_passed()}};
  j["tuples"] = Json{{"checked", report.tuples_checked},
                     {"members", report.tuple_members()},
                     {"passed", report.tuples_passed()}};
  j["profiles"] = std::move(profiles);
  j["pass"] = report.passed();
  return dump(j);
}

std::string adapt(const Flag& flag, const AdaptedBasis& adapted) {
  Json pivots = Json::array();
  for (const auto& set : adapted.pivot_sets) {
    Json one = Json::array();
    for (auto p : set) one.push_back(p + 1);
    pivots.push_back(std::move(one));
  }
  Json j;
  j["field"] = flag.field()->spec();
  j["g"] = flag.dimension();
  j["flag_dims"] = flag.dims();
  j["basis"] = vectors(adapted.vectors);
  j["pivot_sets"] = std::move(pivots);
  return dump(j);
}

std::string mu(const SemilinearMap& f, const VectorTuple& t) {
  const Flag flag = image_flag(f);
  const AdaptedBasis adapted = adapt_to_flag(standard_basis(f.dimension()), flag);
  Json j;
  j["field"] = f.field()->spec();
  j["g"] = f.dimension();
  j["tau"] = f.tau().exponent;
  j["profile"] = profile_json(profile(f));
  j["image_flag_dims"] = flag.dims();
  j["adapted_basis"] = vectors(adapted.vectors);
  j["tuple"] = vectors(t);
  return dump(j);
}

std::string nu(const VectorTuple& t, const SemilinearMap& f) {
  Json j;
  j["field"] = f.field()->spec();
  j["g"] = f.dimension();
  j["tau"] = f.tau().exponent;
  j["profile"] = profile_json(profile(f));
  j["tuple"] = vectors(t);
  j["matrix"] = matrix_rows(f.matrix());
  return dump(j);
}

}  // namespace semilin::report
