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

// JSON state files and complex literals.
//
// Matrix file:  {"d1": 2, "d2": 2, "matrix": [[[re, im], ...], ...]}  (row-major)
// Family file:  {"family": "rho1", "a": 0.05, "b": 0.45, "f": [0.4, 0.1]}
//               {"family": "rho2", "alpha": 0.5}
// Pure state:   {"d1": 2, "d2": 2, "psi": [[re, im], ...]}

#pragma once

#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "spadetect/qmat.hpp"
#include "spadetect/states.hpp"

namespace spadetect {

struct MatrixPayload {
  BipartiteDims dims;
  CMatrix matrix;
};

struct PureStatePayload {
  BipartiteDims dims;
  CVector psi;
};

using StatePayload = std::variant<MatrixPayload, Family1Params, Family2Params>;

/// Decimal literal "RE", "RE+IMi" or "RE-IMi". Throws ParseError.
Complex parse_complex(std::string_view text);

MatrixPayload parse_matrix_json(const nlohmann::json& j);
StatePayload parse_state_json(const nlohmann::json& j);
PureStatePayload parse_pure_state_json(const nlohmann::json& j);

nlohmann::ordered_json matrix_to_json(const CMatrix& m, BipartiteDims dims);

/// Throws ParseError when the file cannot be opened or is not valid JSON.
nlohmann::json read_json_file(const std::string& path);

}  // namespace spadetect
