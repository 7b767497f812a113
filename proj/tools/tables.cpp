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

#include "tables.hpp"

#include <cmath>

namespace spadetect::cli {

const std::array<Table1Row, 4> kTable1 = {{
    {{0.05, 0.45, {0.4, 0.1}}, 0.04589},
    {{0.1, 0.4, {0.25, 0.25}}, 0.08214},
    {{0.15, 0.35, {0.24, 0.2}}, 0.11253},
    {{0.2, 0.3, {0.27, 0.13}}, 0.13344},
}};

const std::array<Table2Row, 4> kTable2 = {{
    {{0.05, 0.45, {0.2, 0.2}}, 0.08905, 0.26777, 0.23284},
    {{0.1, 0.4, {0.25, 0.25}}, 0.08215, 0.26, 0.25355},
    {{0.15, 0.35, {0.24, 0.2}}, 0.11253, 0.25444, 0.16241},
    {{0.2, 0.3, {0.27, 0.13}}, 0.13344, 0.25111, 0.09966},
}};

const std::array<Table3Row, 4> kTable3 = {{
    {{0.05, 0.45, {0.2, 0.2}}, 0.19635},
    {{0.1, 0.4, {0.25, 0.25}}, 0.19405},
    {{0.15, 0.35, {0.24, 0.2}}, 0.20417},
    {{0.2, 0.3, {0.27, 0.13}}, 0.21114},
}};

// Every reference row is reported as detected.
bool TableCell::matches() const {
  const bool verdict_ok = verdict.empty() || verdict == to_string(Verdict::Entangled);
  return verdict_ok && std::abs(value - expected) <= kTableTolerance;
}

std::vector<TableCell> regenerate_tables() {
  std::vector<TableCell> cells;

  for (std::size_t i = 0; i < kTable1.size(); ++i) {
    const auto& row = kTable1[i];
    const DensityMatrix rho = build_family1(row.params);
    const Criterion1Result c1 = criterion1(rho, witness_family_1(row.params.f));
    cells.push_back({1, int(i) + 1, row.params, "F_avg(W~,rho)", c1.fidelity,
                     row.fidelity_witness_state, std::string(to_string(c1.verdict))});
  }

  for (std::size_t i = 0; i < kTable2.size(); ++i) {
    const auto& row = kTable2[i];
    const DensityMatrix rho = build_family1(row.params);
    const DensityMatrix spa = spa_pt_two_qubit(rho);
    const ApproximatedWitness aw = witness_family_1(row.params.f);
    const int r = int(i) + 1;
    cells.push_back({2, r, row.params, "F_avg(W~,rho)", overlap(aw.op, rho),
                     row.fidelity_witness_state, ""});
    cells.push_back({2, r, row.params, "F_avg(rho~,rho)", overlap(spa, rho),
                     row.fidelity_state_spa, ""});
    cells.push_back({2, r, row.params, "C(rho)", family1_concurrence(row.params),
                     row.concurrence, ""});
  }

  for (std::size_t i = 0; i < kTable3.size(); ++i) {
    const auto& row = kTable3[i];
    const DensityMatrix rho = build_family1(row.params);
    const DensityMatrix spa = spa_pt_two_qubit(rho);
    const Criterion2Result c2 = criterion2(rho, spa, witness_family_1(row.params.f));
    cells.push_back({3, int(i) + 1, row.params, "lambda_min(rho~)", lambda_min(spa),
                     row.lambda_min_spa, std::string(to_string(c2.verdict()))});
  }
  return cells;
}

}  // namespace spadetect::cli
