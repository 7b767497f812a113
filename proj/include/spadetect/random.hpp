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

#include <cstdint>
#include <random>

#include "spadetect/qmat.hpp"

namespace spadetect {

/// Seeded source of random states and operators for property checks.
/// Density matrices come from the Ginibre ensemble, G G^dagger / Tr(G G^dagger),
/// which is full rank with probability one.
class StateSampler {
 public:
  explicit StateSampler(std::uint64_t seed) : rng_(seed) {}

  CMatrix ginibre(int n);
  DensityMatrix density(BipartiteDims dims);
  /// Entries drawn from a complex normal, then symmetrized.
  HermitianOperator hermitian(BipartiteDims dims);
  /// Haar-random unit vector.
  CVector pure(int n);
  double uniform(double lo, double hi);

  std::mt19937_64& engine() noexcept { return rng_; }

 private:
  Complex complex_normal();

  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace spadetect
