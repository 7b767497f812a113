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

// Detection logic built on the approximated partial transpose: bounds on
// lambda_min(rho~), the three fidelity criteria, concurrence estimates, and
// the eigenvalue-threshold test. Every criterion compares strictly; a tie
// reports Inconclusive.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spadetect/qmat.hpp"
#include "spadetect/spa_maps.hpp"
#include "spadetect/states.hpp"
#include "spadetect/witness.hpp"

namespace spadetect {

enum class Verdict { Entangled, NotDetected, Inconclusive, Degenerate };

/// "Entangled(NPT)", "NotDetected", "Inconclusive", "Degenerate".
std::string_view to_string(Verdict v);

struct EigBounds {
  double lower;           // L = Tr(rho~ rho) + Tr(W rho)
  double upper;           // U = L + 1/2
  double lambda_min_spa;  // lambda_min(rho~)
  double g;               // L - lambda_min(rho~); bounds lambda_min(PT_B rho) from above

  /// max(L, 0) <= lambda_min(rho~) <= U. Guaranteed only when W detects rho
  /// tightly; recorded rather than assumed elsewhere.
  bool sandwich_holds() const;
};

EigBounds eig_bounds(const DensityMatrix& rho, const DensityMatrix& rho_spa,
                     const EntanglementWitness& w);

struct Criterion1Result {
  double fidelity;   // Tr(W~ rho)
  double threshold;  // R = (1-p)/(d1 d2)
  Verdict verdict;
};

Criterion1Result criterion1(const DensityMatrix& rho, const ApproximatedWitness& aw);

struct ConcurrenceBounds {
  double lower_raw;  // (1-p)/(p d1 d2) - Tr(W~ rho)/p, may be negative
  double upper;      // Tr(rho rho~)

  double lower() const { return lower_raw > 0.0 ? lower_raw : 0.0; }
};

ConcurrenceBounds concurrence_bounds(const DensityMatrix& rho, const DensityMatrix& rho_spa,
                                     const ApproximatedWitness& aw);

enum class ConcurrenceSource { MeasurableLowerBound, Wootters, Supplied };
std::string_view to_string(ConcurrenceSource s);

struct Criterion2Evaluation {
  ConcurrenceSource source;
  double concurrence;
  double lambda_min_spa;
  double fidelity_state_spa;
  double rhs;  // Tr(rho rho~) - C
  bool branch_applicable;  // 0 < C <= Tr(rho rho~)
  Verdict verdict;
};

/// lambda_min(rho~) > Tr(rho rho~) - C for a supplied concurrence value.
Criterion2Evaluation criterion2_with(const DensityMatrix& rho, const DensityMatrix& rho_spa,
                                     double concurrence, ConcurrenceSource source);

struct Criterion2Result {
  EigBounds bounds;
  ConcurrenceBounds concurrence;
  /// First entry uses the measurable lower bound; a Wootters evaluation follows
  /// for two qubits.
  std::vector<Criterion2Evaluation> evaluations;

  Verdict verdict() const { return evaluations.front().verdict; }
};

Criterion2Result criterion2(const DensityMatrix& rho, const DensityMatrix& rho_spa,
                            const ApproximatedWitness& aw);

struct Criterion3Result {
  ConcurrenceSource source;
  double concurrence;
  double fidelity_state_spa;
  double u_ent;            // 1/2 + Tr(rho rho~) - C
  bool branch_applicable;  // C > Tr(rho rho~)
  Verdict verdict;
};

Criterion3Result criterion3(const DensityMatrix& rho, const DensityMatrix& rho_spa,
                            double concurrence,
                            ConcurrenceSource source = ConcurrenceSource::Supplied);

/// Spin-flip concurrence of a two-qubit state.
double wootters_concurrence(const DensityMatrix& rho);

struct EigenThresholdResult {
  double q;
  double threshold;       // q/(d1 d2)
  double lambda_min_spa;  // of the generic map at q
  bool q_extrapolated;
  Verdict verdict;
};

/// lambda_min((1-q) PT_B(rho) + q I/n) < q/n, with q = q_star(dims) unless given.
EigenThresholdResult eigen_threshold_test(const DensityMatrix& rho,
                                          std::optional<double> q = std::nullopt);

struct DetectionConfig {
  std::string description = "state";
  /// Defaults to the tailored witness at p_star when empty.
  std::optional<ApproximatedWitness> witness;
  std::string witness_note;
  /// Use the generic map at this q instead of the map chosen by dimension.
  std::optional<double> q_override;
};

DetectionConfig family_config(const Family1Params& p);
DetectionConfig family_config(const Family2Params& p);

struct Spectra {
  std::vector<double> state;
  std::vector<double> partial_transpose;
  std::vector<double> spa;
  std::vector<double> witness;
  std::vector<double> approx_witness;
};

struct DetectionReport {
  std::string description;
  BipartiteDims dims{2, 2};

  std::string spa_map;
  std::optional<double> spa_q;
  bool q_star_extrapolated = false;
  std::string spa_note;

  std::string witness_source;
  std::string witness_note;
  double p = 0.0;
  double threshold_R = 0.0;

  double fidelity_witness_state = 0.0;  // Tr(W~ rho)
  double fidelity_state_spa = 0.0;      // Tr(rho rho~)
  double witness_expectation = 0.0;     // Tr(W rho)

  Criterion1Result criterion1{};
  EigBounds eig_bounds{};
  ConcurrenceBounds concurrence{};
  std::optional<double> wootters;
  std::vector<Criterion2Evaluation> criterion2;
  std::vector<Criterion3Result> criterion3;
  EigenThresholdResult eigen_threshold{};
  Spectra spectra;

  Verdict overall = Verdict::NotDetected;
};

DetectionReport full_report(const DensityMatrix& rho, const DetectionConfig& config = {});

}  // namespace spadetect
