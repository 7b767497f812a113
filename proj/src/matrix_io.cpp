// Copyright 2026 The spadetect Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spadetect/matrix_io.hpp"

#include <charconv>
#include <fstream>
#include <regex>

namespace spadetect {

namespace {

using nlohmann::json;

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

int dim_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("\"") + key + "\" must be an integer");
  const auto d = v.get<long long>();
  if (d < 2 || d > 64) throw ParseError(std::string("\"") + key + "\" out of range");
  return static_cast<int>(d);
}

double number_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number()) throw ParseError(std::string("\"") + key + "\" must be a number");
  return v.get<double>();
}

Complex complex_entry(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw ParseError(where + ": expected [re, im]");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

Complex complex_value(const json& v, const std::string& where) {
  if (v.is_string()) return parse_complex(v.get<std::string>());
  if (v.is_number()) return {v.get<double>(), 0.0};
  return complex_entry(v, where);
}

double to_double(const std::string& s) {
  double x = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, x);
  if (ec != std::errc{} || ptr != last) throw ParseError("bad number \"" + s + "\"");
  return x;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  static const std::regex pattern(
      R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+))(?:([+-])(\d+\.?\d*|\.\d+)i)?\s*$)");
  std::cmatch m;
  if (!std::regex_match(text.begin(), text.end(), m, pattern)) {
    throw ParseError("bad complex literal \"" + std::string(text) +
                     "\" (expected RE, RE+IMi or RE-IMi)");
  }
  const double re = to_double(m[1].str());
  double im = 0.0;
  if (m[2].matched) {
    im = to_double(m[3].str());
    if (m[2].str() == "-") im = -im;
  }
  return {re, im};
}

MatrixPayload parse_matrix_json(const json& j) {
  const BipartiteDims dims(dim_field(j, "d1"), dim_field(j, "d2"));
  const json& rows = field(j, "matrix");
  const auto n = static_cast<std::size_t>(dims.total());
  if (!rows.is_array() || rows.size() != n) {
    throw ParseError("\"matrix\" must have d1*d2 = " + std::to_string(n) + " rows");
  }
  CMatrix m(dims.total(), dims.total());
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) {
      throw ParseError("row " + std::to_string(i) + " must have " + std::to_string(n) +
                       " entries (matrix must be square)");
    }
    for (std::size_t k = 0; k < n; ++k) {
      m(i, k) = complex_entry(rows[i][k],
                              "entry (" + std::to_string(i) + "," + std::to_string(k) + ")");
    }
  }
  return {dims, std::move(m)};
}

StatePayload parse_state_json(const json& j) {
  if (j.is_object() && j.contains("family")) {
    const json& fam = j.at("family");
    if (!fam.is_string()) throw ParseError("\"family\" must be a string");
    const std::string name = fam.get<std::string>();
    if (name == "rho1") {
      return Family1Params{number_field(j, "a"), number_field(j, "b"),
                           complex_value(field(j, "f"), "\"f\"")};
    }
    if (name == "rho2") return Family2Params{number_field(j, "alpha")};
    throw ParseError("unknown family \"" + name + "\" (expected rho1 or rho2)");
  }
  return parse_matrix_json(j);
}

PureStatePayload parse_pure_state_json(const json& j) {
  const BipartiteDims dims(dim_field(j, "d1"), dim_field(j, "d2"));
  const json& amps = field(j, "psi");
  if (!amps.is_array() || amps.size() != static_cast<std::size_t>(dims.total())) {
    throw ParseError("\"psi\" must have d1*d2 = " + std::to_string(dims.total()) + " amplitudes");
  }
  CVector psi(dims.total());
  for (int i = 0; i < dims.total(); ++i) {
    psi(i) = complex_entry(amps[i], "amplitude " + std::to_string(i));
  }
  return {dims, std::move(psi)};
}

nlohmann::ordered_json matrix_to_json(const CMatrix& m, BipartiteDims dims) {
  nlohmann::ordered_json out;
  out["d1"] = dims.d1();
  out["d2"] = dims.d2();
  auto rows = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back({m(i, k).real(), m(i, k).imag()});
    rows.push_back(std::move(row));
  }
  out["matrix"] = std::move(rows);
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open \"" + path + "\"");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("\"" + path + "\" is not valid JSON: " + e.what());
  }
}

}  // namespace spadetect
