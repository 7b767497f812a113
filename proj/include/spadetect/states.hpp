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

// The two parametrized families used throughout: a two-qubit X-shaped state
// and a rank-two qutrit-qubit state.

#pragma once

#include "spadetect/qmat.hpp"

namespace spadetect {

/// diag(a, b, b, a) with coherence f between |01> and |10>.
/// Requires a, b >= 0 and a + b = 1/2 to 1e-12; positivity needs |f| <= b.
struct Family1Params {
  double a;
  double b;
  Complex f;
};

/// alpha |psi1><psi1| + (1-alpha) |psi2><psi2| with
/// psi1 = (|01> + |20>)/sqrt(2), psi2 = (|10> + |21>)/sqrt(2).
struct Family2Params {
  double alpha;
};

inline constexpr double kFamily1SumTolerance = 1e-12;

DensityMatrix build_family1(const Family1Params& p);
DensityMatrix build_family2(const Family2Params& p);

/// max(0, |f| - a). Validates the parameters like build_family1.
double family1_concurrence(const Family1Params& p);

/// Entangled exactly when a < |f| (and |f| <= b for a valid state).
bool family1_is_entangled(const Family1Params& p);

}  // namespace spadetect
