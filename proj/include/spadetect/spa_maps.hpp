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

// Physical approximations of the partial transpose.
//
// Three constructions are provided:
//   * the generic depolarized map  (1-q) PT_B(rho) + q I/(d1 d2),
//   * the closed-form two-qubit map (identical to the generic map at q = 8/9),
//   * the structured qutrit-qubit map, evaluated from its entry formulas with
//     coefficients (a, b, c) of the antisymmetric generator
//     a*lambda^(01) + b*lambda^(12) + c*lambda^(02).

#pragma once

#include <string>
#include <variant>

#include "spadetect/qmat.hpp"

namespace spadetect {

/// Noise weight that makes the generic map completely positive:
/// n^2/2 / (n^2/2 + 1) with n = d1*d2. Equals 8/9 for two qubits.
double q_star(BipartiteDims dims);

/// True when q_star comes from reading the d x d formula with n = d1*d2 for
/// unequal subsystems.
bool q_star_is_extrapolated(BipartiteDims dims);

/// Eigenvalue cutoff q_star/(d1 d2): lambda_min of the generic map's output
/// falls below it exactly when the input has a negative partial transpose.
double spa_threshold(BipartiteDims dims);

HermitianOperator spa_pt_generic_operator(const HermitianOperator& rho, double q);
/// Throws ValidationError(NotPSD) when q is too small for this input.
DensityMatrix spa_pt_generic(const DensityMatrix& rho, double q);

/// Requires dims (2,2). The operator form applies the entry formulas as
/// written, which assume unit trace.
HermitianOperator spa_pt_two_qubit_operator(const HermitianOperator& rho);
DensityMatrix spa_pt_two_qubit(const DensityMatrix& rho);

struct QutritQubitSpaParams {
  double a;
  double b;
  double c;

  /// a = b = c = 1/sqrt(2).
  static QutritQubitSpaParams standard();
};

/// Entry formulas applied verbatim, lower triangle filled by conjugation. The
/// output trace equals 1 only when the qutrit coherences of Tr_B(rho) satisfy
/// ac Re(t35+t46) - ab Re(t15+t26) + bc Re(t13+t24) = 0 (1-based entries) at
/// a^2 = b^2 = c^2 = 1/2; callers that need a state use spa_pt_qutrit_qubit.
HermitianOperator spa_pt_qutrit_qubit_operator(
    const HermitianOperator& rho,
    const QutritQubitSpaParams& params = QutritQubitSpaParams::standard());

/// Validated variant. Throws ValidationError(TraceNotOne) when the parameters
/// do not normalize this particular input.
DensityMatrix spa_pt_qutrit_qubit(
    const DensityMatrix& rho,
    const QutritQubitSpaParams& params = QutritQubitSpaParams::standard());

struct GenericSpa {
  double q;
};
struct TwoQubitSpa {};
struct QutritQubitSpa {
  QutritQubitSpaParams params;
};

using SpaMap = std::variant<GenericSpa, TwoQubitSpa, QutritQubitSpa>;

/// (2,2) -> two-qubit map, (3,2) -> qutrit-qubit map, otherwise generic at q_star.
SpaMap select_spa_map(BipartiteDims dims);
HermitianOperator apply_spa_operator(const SpaMap& map, const HermitianOperator& rho);
DensityMatrix apply_spa(const SpaMap& map, const DensityMatrix& rho);
std::string spa_map_name(const SpaMap& map);

}  // namespace spadetect
