// Copyright 2026 The qperm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qperm/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qperm/error.hpp"

namespace qperm {

namespace {

using nlohmann::json;

Complex parse_entry(const json& entry, std::size_t row, std::size_t col) {
  auto fail = [&](const std::string& what) {
    throw ParseError("row " + std::to_string(row) + ", column " + std::to_string(col) + ": " + what);
  };
  if (entry.is_number()) {
    return {entry.get<double>(), 0.0};
  }
  if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
    fail("expected a number or a [re, im] pair");
  }
  return {entry[0].get<double>(), entry[1].get<double>()};
}

}  // namespace

SquareMatrix parse_matrix_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("rows")) {
    throw ParseError("expected an object with keys \"n\" and \"rows\"");
  }
  if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 1) {
    throw ParseError("\"n\" must be a positive integer");
  }
  const auto n = static_cast<std::size_t>(doc["n"].get<long long>());
  const json& rows = doc["rows"];
  if (!rows.is_array() || rows.size() != n) {
    throw ParseError("\"rows\" must be an array of " + std::to_string(n) + " rows");
  }
  std::vector<Complex> entries;
  entries.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const json& row = rows[r];
    if (!row.is_array() || row.size() != n) {
      throw ParseError("row " + std::to_string(r) + ": expected " + std::to_string(n) + " entries");
    }
    for (std::size_t c = 0; c < n; ++c) {
      const Complex z = parse_entry(row[c], r, c);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw ParseError("row " + std::to_string(r) + ", column " + std::to_string(c) + ": non-finite value");
      }
      entries.push_back(z);
    }
  }
  return SquareMatrix(n, std::move(entries));
}

SquareMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_json(buf.str());
}

std::string format_matrix_json(const SquareMatrix& a) {
  json rows = json::array();
  for (std::size_t r = 0; r < a.n(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < a.n(); ++c) {
      const Complex z = a(r, c);
      if (a.is_real()) {
        row.push_back(z.real());
      } else {
        row.push_back(json::array({z.real(), z.imag()}));
      }
    }
    rows.push_back(std::move(row));
  }
  json doc = {{"n", a.n()}, {"rows", std::move(rows)}};
  return doc.dump() + "\n";
}

void write_matrix_file(const std::filesystem::path& path, const SquareMatrix& a) {
  std::ofstream out(path);
  if (!out) {
    throw InvalidInput("cannot write " + path.string());
  }
  out << format_matrix_json(a);
}

}  // namespace qperm
