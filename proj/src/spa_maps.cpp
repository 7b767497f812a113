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

#include "spadetect/spa_maps.hpp"

#include <cmath>

namespace spadetect {

namespace {

void require_dims(const HermitianOperator& rho, int d1, int d2, const char* what) {
  if (rho.dims().d1() != d1 || rho.dims().d2() != d2) {
    throw DimensionError(std::string(what) + " requires dims (" + std::to_string(d1) +
                         "," + std::to_string(d2) + ")");
  }
}

void require_unit_interval(double q) {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw ValidationError(Violation::OutOfRange, q, "mixing weight q must lie in [0,1]");
  }
}

// Fills the strict lower triangle from the upper one and drops any imaginary
// part left on the diagonal.
void complete_hermitian(CMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    m(i, i) = m(i, i).real();
    for (Eigen::Index j = 0; j < i; ++j) m(i, j) = std::conj(m(j, i));
  }
}

}  // namespace

double q_star(BipartiteDims dims) {
  constexpr double mu = 0.5;  // -(most negative eigenvalue of PT on states)
  const double n2 = double(dims.total()) * double(dims.total());
  return n2 * mu / (n2 * mu + 1.0);
}

bool q_star_is_extrapolated(BipartiteDims dims) { return dims.d1() != dims.d2(); }

double spa_threshold(BipartiteDims dims) { return q_star(dims) / dims.total(); }

HermitianOperator spa_pt_generic_operator(const HermitianOperator& rho, double q) {
  require_unit_interval(q);
  const int n = rho.size();
  CMatrix out = (1.0 - q) * partial_transpose_B(rho.matrix(), rho.dims()) +
                (q / n) * identity(n);
  return HermitianOperator(rho.dims(), std::move(out));
}

DensityMatrix spa_pt_generic(const DensityMatrix& rho, double q) {
  return validate_density(spa_pt_generic_operator(rho, q).matrix(), rho.dims());
}

HermitianOperator spa_pt_two_qubit_operator(const HermitianOperator& rho) {
  require_dims(rho, 2, 2, "two-qubit SPA");
  const CMatrix& m = rho.matrix();
  auto e = [&](int i, int j) { return m(i - 1, j - 1); };

  CMatrix out = CMatrix::Zero(4, 4);
  auto E = [&](int i, int j) -> Complex& { return out(i - 1, j - 1); };
  E(1, 1) = (2.0 + e(1, 1)) / 9.0;
  E(1, 2) = std::conj(e(1, 2)) / 9.0;
  E(1, 3) = e(1, 3) / 9.0;
  E(1, 4) = e(2, 3) / 9.0;
  E(2, 2) = (2.0 + e(2, 2)) / 9.0;
  E(2, 3) = e(1, 4) / 9.0;
  E(2, 4) = e(2, 4) / 9.0;
  E(3, 3) = (2.0 + e(3, 3)) / 9.0;
  E(3, 4) = std::conj(e(3, 4)) / 9.0;
  E(4, 4) = (2.0 + e(4, 4)) / 9.0;
  complete_hermitian(out);
  return HermitianOperator(rho.dims(), std::move(out));
}

DensityMatrix spa_pt_two_qubit(const DensityMatrix& rho) {
  return validate_density(spa_pt_two_qubit_operator(rho).matrix(), rho.dims());
}

QutritQubitSpaParams QutritQubitSpaParams::standard() {
  const double s = 1.0 / std::sqrt(2.0);
  return {s, s, s};
}

HermitianOperator spa_pt_qutrit_qubit_operator(const HermitianOperator& rho,
                                               const QutritQubitSpaParams& params) {
  require_dims(rho, 3, 2, "qutrit-qubit SPA");
  const CMatrix& m = rho.matrix();
  // 1-based accessors so the formulas read like their matrix-element form.
  auto t = [&](int i, int j) { return m(i - 1, j - 1); };
  auto tc = [&](int i, int j) { return std::conj(m(i - 1, j - 1)); };
  const double a = params.a, b = params.b, c = params.c;
  const double s = 3.0 / 32.0;

  CMatrix out = CMatrix::Zero(6, 6);
  auto T = [&](int i, int j) -> Complex& { return out(i - 1, j - 1); };

  // Depolarized-inversion part; identical on both qubit diagonals of a block.
  const Complex d12 = s * ((a * a + c * c) + a * a * (t(3, 3) + t(4, 4)) +
                           c * c * (t(5, 5) + t(6, 6)) +
                           a * c * (t(3, 5) + tc(3, 5) + t(4, 6) + tc(4, 6)));
  const Complex d34 = s * (a * a + b * b + a * a * (t(1, 1) + t(2, 2)) +
                           b * b * (t(5, 5) + t(6, 6)) - a * b * (t(1, 5) + tc(1, 5)) -
                           a * b * (t(2, 6) + tc(2, 6)));
  const Complex d56 = s * ((b * b + c * c) + c * c * (t(1, 1) + t(2, 2)) +
                           b * b * (t(3, 3) + t(4, 4)) +
                           b * c * (t(1, 3) + tc(1, 3) + t(2, 4) + tc(2, 4)));
  const Complex o13 = s * (b * c * (1.0 + t(5, 5) + t(6, 6)) - a * a * (t(1, 3) + t(2, 4)) -
                           a * c * (t(1, 5) + t(2, 6)) + a * b * (tc(3, 5) + tc(4, 6)));
  const Complex o15 = s * (-a * b * (1.0 + t(3, 3) + t(4, 4)) - a * c * (t(1, 3) + t(2, 4)) -
                           c * c * (t(1, 5) + t(2, 6)) - b * c * (t(3, 5) + t(4, 6)));
  // The printed t~46 carries -bc(t15 - t26); the sum form below matches t~35
  // and keeps the action on Hermitian inputs consistent.
  const Complex o35 = s * (a * c * (1.0 + t(1, 1) + t(2, 2)) - b * c * (t(1, 5) + t(2, 6)) +
                           a * b * (tc(1, 3) + tc(2, 4)) - b * b * (t(3, 5) + t(4, 6)));

  T(1, 1) = d12 + 0.25 * (2.0 / 3.0 * t(1, 1) + 1.0 / 3.0 * t(2, 2));
  T(2, 2) = d12 + 0.25 * (1.0 / 3.0 * t(1, 1) + 2.0 / 3.0 * t(2, 2));
  T(1, 3) = o13 + 0.25 * (2.0 / 3.0 * t(1, 3) + 1.0 / 3.0 * t(2, 4));
  T(2, 4) = o13 + 0.25 * (1.0 / 3.0 * t(1, 3) + 2.0 / 3.0 * t(2, 4));
  T(1, 5) = o15 + 0.25 * (2.0 / 3.0 * t(1, 5) + 1.0 / 3.0 * t(2, 6));
  T(2, 6) = o15 + 0.25 * (1.0 / 3.0 * t(1, 5) + 2.0 / 3.0 * t(2, 6));
  T(3, 3) = d34 + 0.25 * (2.0 / 3.0 * t(3, 3) + 1.0 / 3.0 * t(4, 4));
  T(4, 4) = d34 + 0.25 * (1.0 / 3.0 * t(3, 3) + 2.0 / 3.0 * t(4, 4));
  T(3, 5) = o35 + 0.25 * (2.0 / 3.0 * t(3, 5) + 1.0 / 3.0 * t(4, 6));
  T(4, 6) = o35 + 0.25 * (1.0 / 3.0 * t(3, 5) + 2.0 / 3.0 * t(4, 6));
  T(5, 5) = d56 + 0.25 * (2.0 / 3.0 * t(5, 5) + 1.0 / 3.0 * t(6, 6));
  T(6, 6) = d56 + 0.25 * (1.0 / 3.0 * t(5, 5) + 2.0 / 3.0 * t(6, 6));

  T(1, 2) = tc(1, 2) / 12.0;
  T(1, 4) = t(2, 3) / 12.0;
  T(1, 6) = t(2, 5) / 12.0;
  T(2, 3) = t(1, 4) / 12.0;
  T(2, 5) = t(1, 6) / 12.0;
  T(3, 4) = tc(3, 4) / 12.0;
  T(3, 6) = t(4, 5) / 12.0;
  T(4, 5) = t(3, 6) / 12.0;
  T(5, 6) = tc(5, 6) / 12.0;

  complete_hermitian(out);
  return HermitianOperator(rho.dims(), std::move(out));
}

DensityMatrix spa_pt_qutrit_qubit(const DensityMatrix& rho,
                                  const QutritQubitSpaParams& params) {
  return validate_density(spa_pt_qutrit_qubit_operator(rho, params).matrix(), rho.dims());
}

SpaMap select_spa_map(BipartiteDims dims) {
  if (dims.d1() == 2 && dims.d2() == 2) return TwoQubitSpa{};
  if (dims.d1() == 3 && dims.d2() == 2) return QutritQubitSpa{QutritQubitSpaParams::standard()};
  return GenericSpa{q_star(dims)};
}

HermitianOperator apply_spa_operator(const SpaMap& map, const HermitianOperator& rho) {
  return std::visit(
      [&](const auto& m) -> HermitianOperator {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, GenericSpa>) {
          return spa_pt_generic_operator(rho, m.q);
        } else if constexpr (std::is_same_v<M, TwoQubitSpa>) {
          return spa_pt_two_qubit_operator(rho);
        } else {
          return spa_pt_qutrit_qubit_operator(rho, m.params);
        }
      },
      map);
}

DensityMatrix apply_spa(const SpaMap& map, const DensityMatrix& rho) {
  return validate_density(apply_spa_operator(map, rho).matrix(), rho.dims());
}

std::string spa_map_name(const SpaMap& map) {
  switch (map.index()) {
    case 0:
      return "generic";
    case 1:
      return "two_qubit";
    default:
      return "qutrit_qubit";
  }
}

}  // namespace spadetect
