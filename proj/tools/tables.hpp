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

// Reference values for the two-qubit family and the code that regenerates
// them. Table I and Table II use different f in their first row; each keeps
// its own parameters.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "spadetect/detect.hpp"

namespace spadetect::cli {

inline constexpr double kTableTolerance = 1e-4;

struct Table1Row {
  Family1Params params;
  double fidelity_witness_state;
};

struct Table2Row {
  Family1Params params;
  double fidelity_witness_state;
  double fidelity_state_spa;
  double concurrence;
};

struct Table3Row {
  Family1Params params;
  double lambda_min_spa;
};

extern const std::array<Table1Row, 4> kTable1;
extern const std::array<Table2Row, 4> kTable2;
extern const std::array<Table3Row, 4> kTable3;

/// One regenerated cell next to its reference value.
struct TableCell {
  int table;  // 1, 2 or 3
  int row;    // 1-based
  Family1Params params;
  std::string quantity;
  double value;
  double expected;
  std::string verdict;  // criterion verdict for the row, empty for plain numbers

  bool matches() const;
};

/// All twelve rows, one cell per numeric column.
std::vector<TableCell> regenerate_tables();

}  // namespace spadetect::cli
