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

#include "spadetect/report_json.hpp"

namespace spadetect {

using nlohmann::ordered_json;

namespace {

ordered_json nullable(const std::optional<double>& x) {
  return x ? ordered_json(*x) : ordered_json(nullptr);
}

ordered_json criterion2_json(const Criterion2Evaluation& e) {
  ordered_json j;
  j["concurrence_source"] = std::string(to_string(e.source));
  j["concurrence"] = e.concurrence;
  j["lambda_min_spa"] = e.lambda_min_spa;
  j["fidelity_state_spa"] = e.fidelity_state_spa;
  j["rhs"] = e.rhs;
  j["branch_applicable"] = e.branch_applicable;
  j["verdict"] = std::string(to_string(e.verdict));
  return j;
}

ordered_json criterion3_json(const Criterion3Result& r) {
  ordered_json j;
  j["concurrence_source"] = std::string(to_string(r.source));
  j["concurrence"] = r.concurrence;
  j["fidelity_state_spa"] = r.fidelity_state_spa;
  j["U_ent"] = r.u_ent;
  j["branch_applicable"] = r.branch_applicable;
  j["verdict"] = std::string(to_string(r.verdict));
  return j;
}

}  // namespace

ordered_json report_to_json(const DetectionReport& r) {
  ordered_json j;
  j["report_version"] = kReportVersion;
  j["state"] = {{"description", r.description}, {"d1", r.dims.d1()}, {"d2", r.dims.d2()}};
  j["spa"] = {{"map", r.spa_map},
              {"q", nullable(r.spa_q)},
              {"q_star_extrapolated", r.q_star_extrapolated},
              {"note", r.spa_note}};
  j["witness"] = {{"source", r.witness_source},
                  {"note", r.witness_note},
                  {"p", r.p},
                  {"threshold_R", r.threshold_R}};
  j["fidelities"] = {{"witness_state", r.fidelity_witness_state},
                     {"state_spa", r.fidelity_state_spa}};
  j["witness_expectation"] = r.witness_expectation;
  j["criterion1"] = {{"fidelity", r.criterion1.fidelity},
                     {"threshold_R", r.criterion1.threshold},
                     {"verdict", std::string(to_string(r.criterion1.verdict))}};
  j["eig_bounds"] = {{"L", r.eig_bounds.lower},
                     {"U", r.eig_bounds.upper},
                     {"G", r.eig_bounds.g},
                     {"lambda_min_spa", r.eig_bounds.lambda_min_spa},
                     {"sandwich_holds", r.eig_bounds.sandwich_holds()}};
  j["concurrence_bounds"] = {{"lower_raw", r.concurrence.lower_raw},
                             {"lower", r.concurrence.lower()},
                             {"upper", r.concurrence.upper},
                             {"wootters", nullable(r.wootters)}};
  auto c2 = ordered_json::array();
  for (const auto& e : r.criterion2) c2.push_back(criterion2_json(e));
  j["criterion2"] = std::move(c2);
  auto c3 = ordered_json::array();
  for (const auto& e : r.criterion3) c3.push_back(criterion3_json(e));
  j["criterion3"] = std::move(c3);
  j["eigen_threshold_test"] = {{"q", r.eigen_threshold.q},
                               {"threshold", r.eigen_threshold.threshold},
                               {"lambda_min_spa", r.eigen_threshold.lambda_min_spa},
                               {"q_extrapolated", r.eigen_threshold.q_extrapolated},
                               {"verdict", std::string(to_string(r.eigen_threshold.verdict))}};
  j["spectra"] = {{"state", r.spectra.state},
                  {"partial_transpose", r.spectra.partial_transpose},
                  {"spa", r.spectra.spa},
                  {"witness", r.spectra.witness},
                  {"approx_witness", r.spectra.approx_witness}};
  j["overall"] = std::string(to_string(r.overall));
  return j;
}

}  // namespace spadetect
