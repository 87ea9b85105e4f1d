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

#include "semilin/text_format.hpp"

#include <charconv>
#include <sstream>

namespace semilin::text {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::uint64_t number(std::string_view tok, std::size_t line_no) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": expected a number, got '" +
                     std::string(tok) + "'");
  }
  return v;
}

// Meaningful lines (comments and blanks dropped) with their 1-based numbers.
std::vector<std::pair<std::size_t, std::vector<std::string_view>>> lines_of(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<std::string_view>>> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = tokens(line);
    if (!toks.empty()) out.emplace_back(line_no, std::move(toks));
  }
  return out;
}

}  // namespace

Document parse(std::string_view text) {
  Document doc;
  FieldPtr field;
  std::optional<unsigned> pending_tau;
  const auto lines = lines_of(text);
  std::size_t i = 0;
  while (i < lines.size()) {
    const auto& [line_no, toks] = lines[i];
    if (toks[0] == "tau") {
      if (toks.size() != 2) throw ParseError("line " + std::to_string(line_no) + ": expected 'tau <i>'");
      pending_tau = static_cast<unsigned>(number(toks[1], line_no));
      ++i;
      continue;
    }
    if (toks[0] == "basis") {
      if (toks.size() != 2 || toks[1] != "standard") {
        throw ParseError("line " + std::to_string(line_no) + ": expected 'basis standard'");
      }
      doc.standard_basis = true;
      ++i;
      continue;
    }
    if (toks.size() != 3) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected a block header 'rows cols fieldspec'");
    }
    const auto rows = static_cast<std::size_t>(number(toks[0], line_no));
    const auto cols = static_cast<std::size_t>(number(toks[1], line_no));
    FieldPtr block_field;
    try {
      block_field = Field::parse(toks[2]);
    } catch (const Error& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (field && !(*field == *block_field)) {
      throw ParseError("line " + std::to_string(line_no) + ": blocks over different fields");
    }
    if (!field) field = block_field;
    ++i;
    std::vector<Code> entries;
    entries.reserve(rows * cols);
    for (std::size_t k = 0; k < rows; ++k, ++i) {
      if (i >= lines.size()) throw ParseError("unexpected end of input inside a block");
      const auto& [row_no, row] = lines[i];
      if (row.size() != cols) {
        throw ParseError("line " + std::to_string(row_no) + ": expected " + std::to_string(cols) +
                         " entries, got " + std::to_string(row.size()));
      }
      for (auto tok : row) {
        const auto v = number(tok, row_no);
        if (v >= field->order()) {
          throw ParseError("line " + std::to_string(row_no) + ": element code " +
                           std::to_string(v) + " out of range");
        }
        entries.push_back(static_cast<Code>(v));
      }
    }
    doc.blocks.push_back({pending_tau, Matrix(field, rows, cols, std::move(entries))});
    pending_tau.reset();
  }
  if (pending_tau) throw ParseError("'tau' line without a following block");
  return doc;
}

std::string format_matrix(const Matrix& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << ' ' << m.field()->spec() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j != 0) out << ' ';
      out << m(i, j);
    }
    out << '\n';
  }
  return out.str();
}

std::string format_map(const SemilinearMap& f) {
  return "tau " + std::to_string(f.tau().exponent) + "\n" + format_matrix(f.matrix());
}

std::string format_tuple(const FieldPtr& field, const VectorTuple& t) {
  return format_matrix(Matrix::from_rows(field, t.size(), t));
}

namespace {

const Block& single_square_block(const Document& doc, const char* what) {
  if (doc.blocks.size() != 1) {
    throw ParseError(std::string(what) + ": expected exactly one block, got " +
                     std::to_string(doc.blocks.size()));
  }
  const Block& b = doc.blocks.front();
  if (b.matrix.rows() != b.matrix.cols()) throw ParseError(std::string(what) + ": block must be square");
  return b;
}

}  // namespace

SemilinearMap parse_map(std::string_view text) {
  const Document doc = parse(text);
  const Block& b = single_square_block(doc, "map");
  try {
    return SemilinearMap(b.matrix, Automorphism{b.tau.value_or(0)});
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("map: ") + e.what());
  }
}

TupleInput parse_tuple(std::string_view text) {
  const Document doc = parse(text);
  const Block& b = single_square_block(doc, "tuple");
  return {b.matrix.field(), b.matrix.row_vectors(), b.tau};
}

AdaptInput parse_adapt(std::string_view text) {
  const Document doc = parse(text);
  std::size_t next = 0;
  std::vector<Vector> basis;
  if (doc.standard_basis) {
    if (doc.blocks.empty()) throw ParseError("adapt: 'basis standard' needs at least one flag member");
    basis = standard_basis(doc.blocks.front().matrix.cols());
  } else {
    if (doc.blocks.empty()) throw ParseError("adapt: missing ordered basis block");
    const Matrix& e = doc.blocks.front().matrix;
    if (e.rows() != e.cols()) throw ParseError("adapt: ordered basis block must be square");
    basis = e.row_vectors();
    next = 1;
  }
  const std::size_t g = basis.size();
  if (doc.blocks.empty()) throw ParseError("adapt: no blocks");
  const FieldPtr field = doc.blocks.front().matrix.field();
  std::vector<Subspace> members;
  for (std::size_t k = next; k < doc.blocks.size(); ++k) {
    const Matrix& m = doc.blocks[k].matrix;
    if (m.cols() != g) throw ParseError("adapt: flag member of the wrong width");
    members.push_back(m.row_vectors());
  }
  if (members.empty() || members.front().size() < g) {
    members.insert(members.begin(), standard_basis(g));
  }
  try {
    return {std::move(basis), Flag(field, g, std::move(members))};
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("adapt: ") + e.what());
  }
}

}  // namespace semilin::text
