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

// Command-line front end over the C API of libsemilin.
//
// Exit codes: 0 success, 1 a check failed, 2 bad arguments or input,
// 3 enumeration budget exceeded.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "semilin/semilin.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Options {
  std::string field;
  std::size_t g = 0;
  unsigned tau = 0;
  bool tau_given = false;
  long r = -1;
  long s = -1;
  std::uint64_t budget = std::uint64_t{1} << 26;
  unsigned threads = 1;
  std::uint64_t seed = 0;
  std::uint64_t samples = 1000;
  bool pretty = false;
  std::string out;
  std::string input = "-";
};

int exit_code_for(semilin_status status) {
  switch (status) {
    case SEMILIN_OK: return kExitOk;
    case SEMILIN_ERR_BUDGET: return kExitBudget;
    case SEMILIN_ERR_INTERNAL: return kExitMismatch;
    default: return kExitUsage;
  }
}

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

std::string render_vectors(const Json& vs) {
  std::ostringstream out;
  for (const auto& v : vs) {
    out << "  (";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i].get<unsigned>();
    out << ")\n";
  }
  return out.str();
}

std::string cell_text(const Json& j) { return j.is_null() ? "-" : j.get<std::string>(); }

std::string render_counts(const Json& j) {
  std::vector<std::vector<std::string>> rows{{"r", "s", "theorem", "staged", "enumerated", "match"}};
  for (const auto& c : j["cells"]) {
    rows.push_back({std::to_string(c["r"].get<unsigned>()), std::to_string(c["s"].get<unsigned>()),
                    cell_text(c["theorem"]), cell_text(c["staged"]), cell_text(c["enumerated"]),
                    c["match"].get<bool>() ? "yes" : "NO"});
  }
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
  }
  std::ostringstream out;
  out << "field " << j["field"].get<std::string>() << ", g = " << j["g"].get<unsigned>();
  if (!j["tau"].is_null()) out << ", tau = Frob^" << j["tau"].get<unsigned>();
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      out << (k ? "  " : "") << std::setw(static_cast<int>(width[k])) << row[k];
    }
    out << "\n";
  }
  const auto& t = j["totals"];
  out << "total " << cell_text(t["theorem"]) << " (expected " << cell_text(t["expected"]) << ")\n";
  const auto& c = j["corollaries"];
  out << "GL order: " << (c["gl"].get<bool>() ? "ok" : "FAIL")
      << ", nilpotent count: " << (c["nilpotent"].get<bool>() ? "ok" : "FAIL")
      << ", total mass: " << (c["total_mass"].get<bool>() ? "ok" : "FAIL") << "\n";
  return out.str();
}

std::string render_roundtrip(const Json& j) {
  std::ostringstream out;
  out << "field " << j["field"].get<std::string>() << ", g = " << j["g"].get<unsigned>()
      << ", tau = Frob^" << j["tau"].get<unsigned>() << " (" << j["mode"].get<std::string>()
      << ")\n";
  out << std::setw(3) << "r" << std::setw(4) << "s" << std::setw(12) << "maps" << std::setw(12)
      << "passed" << std::setw(12) << "tuples" << std::setw(12) << "passed" << "\n";
  for (const auto& p : j["profiles"]) {
    out << std::setw(3) << p["r"].get<unsigned>() << std::setw(4) << p["s"].get<unsigned>()
        << std::setw(12) << p["maps"].get<std::uint64_t>() << std::setw(12)
        << p["maps_passed"].get<std::uint64_t>() << std::setw(12) << p["tuples"].get<std::uint64_t>()
        << std::setw(12) << p["tuples_passed"].get<std::uint64_t>() << "\n";
  }
  out << (j["pass"].get<bool>() ? "all round trips pass\n" : "ROUND TRIP FAILURES\n");
  return out.str();
}

std::string render_generic(const std::string& command, const Json& j) {
  std::ostringstream out;
  out << "field " << j["field"].get<std::string>() << "\n";
  if (command == "adapt") {
    out << "adapted basis:\n" << render_vectors(j["basis"]);
    out << "pivot sets:";
    for (const auto& set : j["pivot_sets"]) out << " " << set.dump();
    out << "\n";
  } else if (command == "mu") {
    out << "profile (" << j["profile"]["r"] << "," << j["profile"]["s"] << ")\n";
    out << "adapted basis:\n" << render_vectors(j["adapted_basis"]);
    out << "tuple:\n" << render_vectors(j["tuple"]);
  } else if (command == "nu") {
    out << "tau = Frob^" << j["tau"] << ", profile (" << j["profile"]["r"] << ","
        << j["profile"]["s"] << ")\nmatrix:\n"
        << render_vectors(j["matrix"]);
  } else {
    out << "p = " << j["p"] << ", d = " << j["d"] << ", q = " << j["q"]
        << ", modulus " << j["modulus"].dump() << "\n";
    for (const auto& a : j["automorphisms"]) {
      out << "  Frob^" << a["exponent"] << " fixes " << a["fixed_points"] << " elements\n";
    }
  }
  return out.str();
}

int finish(const std::string& command, semilin_status status, char* json, int all_pass,
           const Options& opt) {
  if (status != SEMILIN_OK) {
    std::cerr << "semilin " << command << ": " << semilin_last_error() << "\n";
    return exit_code_for(status);
  }
  std::string text(json);
  semilin_string_free(json);
  if (opt.pretty) {
    const Json j = Json::parse(text);
    if (command == "count" || command == "verify") {
      text = render_counts(j);
    } else if (command == "roundtrip") {
      text = render_roundtrip(j);
    } else {
      text = render_generic(command, j);
    }
  }
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(opt.out, std::ios::binary);
    if (!file) {
      std::cerr << "semilin " << command << ": cannot write " << opt.out << "\n";
      return kExitUsage;
    }
    file << text;
  }
  if (!all_pass) {
    std::cerr << "semilin " << command << ": mismatch detected\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int run(const std::string& command, const Options& opt) {
  char* json = nullptr;
  int all_pass = 1;
  semilin_status status = SEMILIN_OK;
  if (command == "count") {
    status = semilin_count_json(opt.field.c_str(), opt.g, opt.r, opt.s, &json, &all_pass);
  } else if (command == "verify") {
    status = semilin_verify_json(opt.field.c_str(), opt.g, opt.tau, opt.budget, opt.threads,
                                 &json, &all_pass);
  } else if (command == "roundtrip") {
    status = semilin_roundtrip_json(opt.field.c_str(), opt.g, opt.tau, opt.budget, opt.threads,
                                    opt.samples, opt.seed, &json, &all_pass);
  } else if (command == "field-info") {
    status = semilin_field_info_json_spec(opt.field.c_str(), &json);
  } else {
    std::string input;
    try {
      input = read_input(opt.input);
    } catch (const std::exception& e) {
      std::cerr << "semilin " << command << ": " << e.what() << "\n";
      return kExitUsage;
    }
    if (command == "adapt") {
      status = semilin_adapt_json(input.c_str(), &json);
    } else if (command == "mu") {
      status = semilin_mu_json(input.c_str(), &json);
    } else {
      status = semilin_nu_json(input.c_str(), opt.tau_given ? static_cast<int>(opt.tau) : -1,
                               &json);
    }
  }
  return finish(command, status, json, all_pass, opt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semilinear endomorphisms over finite fields: counts, adapted bases, bijection"};
  app.require_subcommand(1);
  Options opt;

  auto common_output = [&](CLI::App* cmd) {
    cmd->add_flag("--pretty", opt.pretty, "Render aligned text instead of JSON");
    cmd->add_option("--out", opt.out, "Write output to this path instead of stdout");
  };
  auto field_option = [&](CLI::App* cmd) {
    cmd->add_option("--field", opt.field, "Field spec p^d or p^d/c_0,...,c_d")->required();
  };
  auto enumeration_options = [&](CLI::App* cmd) {
    cmd->add_option("--budget", opt.budget, "Maximum number of maps to enumerate");
    cmd->add_option("--threads", opt.threads, "Worker threads")->check(CLI::PositiveNumber);
  };

  auto* count = app.add_subcommand("count", "Closed-form and staged counts of P(r,s)");
  field_option(count);
  count->add_option("--g", opt.g, "Dimension of V")->required()->check(CLI::PositiveNumber);
  auto* r_opt = count->add_option("--r", opt.r, "Rank filter")->check(CLI::NonNegativeNumber);
  auto* s_opt = count->add_option("--s", opt.s, "Infinity-rank filter")->check(CLI::NonNegativeNumber);
  r_opt->needs(s_opt);
  s_opt->needs(r_opt);
  common_output(count);

  auto* verify = app.add_subcommand("verify", "Compare the formulas with exhaustive enumeration");
  field_option(verify);
  verify->add_option("--g", opt.g, "Dimension of V")->required()->check(CLI::PositiveNumber);
  verify->add_option("--tau", opt.tau, "Frobenius exponent of tau");
  enumeration_options(verify);
  common_output(verify);

  auto* roundtrip = app.add_subcommand("roundtrip", "Check nu(mu(F)) = F and mu(nu(t)) = t");
  field_option(roundtrip);
  roundtrip->add_option("--g", opt.g, "Dimension of V")->required()->check(CLI::PositiveNumber);
  roundtrip->add_option("--tau", opt.tau, "Frobenius exponent of tau");
  roundtrip->add_option("--seed", opt.seed, "Seed for sampling above the budget");
  roundtrip->add_option("--samples", opt.samples, "Samples drawn above the budget");
  enumeration_options(roundtrip);
  common_output(roundtrip);

  auto* adapt = app.add_subcommand("adapt", "Adapt an ordered basis to a flag");
  adapt->add_option("input", opt.input, "Input file in the matrix text format, - for stdin");
  common_output(adapt);

  auto* mu = app.add_subcommand("mu", "Map a semilinear endomorphism to its vector tuple");
  mu->add_option("input", opt.input, "Map block, - for stdin");
  common_output(mu);

  auto* nu = app.add_subcommand("nu", "Rebuild a semilinear endomorphism from a vector tuple");
  nu->add_option("input", opt.input, "Tuple block, - for stdin");
  nu->add_option("--tau", opt.tau, "Frobenius exponent of tau (overrides a tau line)");
  common_output(nu);

  auto* info = app.add_subcommand("field-info", "Describe a finite field");
  field_option(info);
  common_output(info);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  opt.tau_given = nu->count("--tau") > 0;
  return run(app.get_subcommands().front()->get_name(), opt);
}
