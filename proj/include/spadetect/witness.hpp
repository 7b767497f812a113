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

#pragma once

#include <string>

#include "spadetect/qmat.hpp"

namespace spadetect {

/// W = PT_B(|psi><psi|). Unit trace, Hermitian, generally indefinite.
struct EntanglementWitness {
  HermitianOperator op;
  CVector psi;
  std::string source;
};

/// W~ = p W + (1-p) I/(d1 d2), a state whenever 0 < p <= p_star(W).
/// Tr(W~ rho) < threshold_R  <=>  Tr(W rho) < 0.
struct ApproximatedWitness {
  EntanglementWitness base;
  double p;
  HermitianOperator op;
  double threshold_R;

  /// Recovers Tr(W rho) from the measurable Tr(W~ rho).
  double witness_expectation(double approx_expectation) const {
    return (approx_expectation - threshold_R) / p;
  }
};

EntanglementWitness witness_from_pure(const CVector& psi, BipartiteDims dims,
                                      std::string source = "pure state");

/// Witness built from the eigenvector of PT_B(rho) with the smallest
/// eigenvalue, so Tr(W rho) = lambda_min(PT_B(rho)).
EntanglementWitness witness_tailored(const DensityMatrix& rho);

/// Largest p keeping W~ positive: 1/(1 - d1 d2 lambda_min(W)), or 1 when W
/// is already positive semi-definite.
double p_star(const EntanglementWitness& w);

/// Throws std::invalid_argument for p outside (0,1] and
/// ValidationError(NotPSD) when p exceeds p_star(w).
ApproximatedWitness approximate_witness(const EntanglementWitness& w, double p);

/// Two-qubit witness from (k|00> + |11>)/sqrt(2) with k = -f/|f|, at p = 1/3.
ApproximatedWitness witness_family_1(Complex f);

/// kappa(alpha) = (alpha + sqrt(4 - 8 alpha + 5 alpha^2)) / (2 (1 - alpha)).
double family2_kappa(double alpha);
/// r = 1/(4(1 + kappa^2)); tends to 0 as alpha -> 1.
double family2_r(double alpha);

/// Qutrit-qubit witness from (-kappa|11> + |20>)/sqrt(1+kappa^2), at p = 1/4.
/// alpha = 1 throws DegenerateWitnessError.
ApproximatedWitness witness_family_2(double alpha);

}  // namespace spadetect
