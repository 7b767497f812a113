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

#include "spadetect/witness.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace spadetect {

EntanglementWitness witness_from_pure(const CVector& psi, BipartiteDims dims,
                                      std::string source) {
  const DensityMatrix projector = pure_density(psi, dims);
  return {partial_transpose_B(projector), psi, std::move(source)};
}

EntanglementWitness witness_tailored(const DensityMatrix& rho) {
  const EigenDecomposition pt = eigh(partial_transpose_B(rho));
  CVector v = pt.vectors.col(0);
  v /= v.norm();
  return witness_from_pure(v, rho.dims(), "min-eigenvector of PT_B(rho)");
}

double p_star(const EntanglementWitness& w) {
  const double lmin = lambda_min(w.op);
  if (lmin >= 0.0) return 1.0;
  return 1.0 / (1.0 - w.op.size() * lmin);
}

ApproximatedWitness approximate_witness(const EntanglementWitness& w, double p) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw std::invalid_argument("witness mixing weight p must lie in (0,1]");
  }
  const int n = w.op.size();
  HermitianOperator approx(w.op.dims(), p * w.op.matrix() + ((1.0 - p) / n) * identity(n));
  const double lmin = lambda_min(approx);
  if (lmin < -tol::kPsd) {
    std::ostringstream os;
    os << "p = " << p << " exceeds p* = " << p_star(w)
       << "; approximated witness has eigenvalue " << lmin;
    throw ValidationError(Violation::NotPSD, lmin, os.str());
  }
  return {w, p, std::move(approx), (1.0 - p) / n};
}

ApproximatedWitness witness_family_1(Complex f) {
  if (std::abs(f) == 0.0) {
    throw DegenerateWitnessError("family-1 witness needs f != 0 (k = -f/|f|)");
  }
  const Complex k = -f / std::abs(f);
  const BipartiteDims dims(2, 2);
  CVector psi = CVector::Zero(4);
  psi(dims.index(0, 0)) = k;
  psi(dims.index(1, 1)) = 1.0;
  psi /= std::sqrt(1.0 + std::norm(k));
  std::ostringstream os;
  os << "(k|00> + |11>)/sqrt(2), k = " << k.real() << (k.imag() < 0 ? "" : "+")
     << k.imag() << "i";
  return approximate_witness(witness_from_pure(psi, dims, os.str()), 1.0 / 3.0);
}

double family2_kappa(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("kappa is defined for alpha in [0,1)");
  }
  return (alpha + std::sqrt(4.0 - 8.0 * alpha + 5.0 * alpha * alpha)) /
         (2.0 * (1.0 - alpha));
}

double family2_r(double alpha) {
  if (alpha == 1.0) return 0.0;
  const double kappa = family2_kappa(alpha);
  return 1.0 / (4.0 * (1.0 + kappa * kappa));
}

ApproximatedWitness witness_family_2(double alpha) {
  if (alpha == 1.0) {
    throw DegenerateWitnessError("family-2 witness diverges at alpha = 1 (kappa -> inf)");
  }
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("family-2 witness needs alpha in [0,1)");
  }
  const double kappa = family2_kappa(alpha);
  const BipartiteDims dims(3, 2);
  CVector psi = CVector::Zero(6);
  psi(dims.index(1, 1)) = -kappa;
  psi(dims.index(2, 0)) = 1.0;
  psi /= std::sqrt(1.0 + kappa * kappa);
  std::ostringstream os;
  os << "(-kappa|11> + |20>)/sqrt(1+kappa^2), kappa = " << kappa;
  return approximate_witness(witness_from_pure(psi, dims, os.str()), 0.25);
}

}  // namespace spadetect
