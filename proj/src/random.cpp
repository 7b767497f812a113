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

#include "spadetect/random.hpp"

namespace spadetect {

Complex StateSampler::complex_normal() {
  const double re = normal_(rng_);
  const double im = normal_(rng_);
  return {re, im};
}

CMatrix StateSampler::ginibre(int n) {
  CMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = complex_normal();
  return g;
}

DensityMatrix StateSampler::density(BipartiteDims dims) {
  const CMatrix g = ginibre(dims.total());
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return validate_density(hermitian_part(rho), dims);
}

HermitianOperator StateSampler::hermitian(BipartiteDims dims) {
  return HermitianOperator(dims, hermitian_part(ginibre(dims.total())));
}

CVector StateSampler::pure(int n) {
  CVector v(n);
  for (int i = 0; i < n; ++i) v(i) = complex_normal();
  return v / v.norm();
}

double StateSampler::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

}  // namespace spadetect
