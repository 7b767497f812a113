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

#include "spadetect/states.hpp"

#include <cmath>
#include <sstream>

namespace spadetect {

namespace {

void check_family1(const Family1Params& p) {
  if (!(p.a >= 0.0) || !(p.b >= 0.0)) {
    throw ValidationError(Violation::OutOfRange, std::min(p.a, p.b),
                          "family-1 needs a >= 0 and b >= 0");
  }
  if (!std::isfinite(p.f.real()) || !std::isfinite(p.f.imag())) {
    throw ValidationError(Violation::OutOfRange, NAN, "family-1 coherence f must be finite");
  }
  const double dev = p.a + p.b - 0.5;
  if (std::abs(dev) > kFamily1SumTolerance) {
    std::ostringstream os;
    os << "family-1 needs a + b = 1/2, got a + b - 1/2 = " << dev;
    throw ValidationError(Violation::TraceNotOne, dev, os.str());
  }
}

}  // namespace

DensityMatrix build_family1(const Family1Params& p) {
  check_family1(p);
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = p.a;
  m(1, 1) = p.b;
  m(2, 2) = p.b;
  m(3, 3) = p.a;
  m(1, 2) = p.f;
  m(2, 1) = std::conj(p.f);
  return validate_density(m, BipartiteDims(2, 2));
}

DensityMatrix build_family2(const Family2Params& p) {
  if (!(p.alpha >= 0.0 && p.alpha <= 1.0)) {
    throw ValidationError(Violation::OutOfRange, p.alpha, "family-2 needs alpha in [0,1]");
  }
  const BipartiteDims dims(3, 2);
  const int i01 = dims.index(0, 1), i20 = dims.index(2, 0);
  const int i10 = dims.index(1, 0), i21 = dims.index(2, 1);
  CMatrix m = CMatrix::Zero(6, 6);
  const double w1 = p.alpha / 2.0, w2 = (1.0 - p.alpha) / 2.0;
  m(i01, i01) = m(i01, i20) = m(i20, i01) = m(i20, i20) = w1;
  m(i10, i10) = m(i10, i21) = m(i21, i10) = m(i21, i21) = w2;
  return validate_density(m, dims);
}

double family1_concurrence(const Family1Params& p) {
  check_family1(p);
  return std::max(0.0, std::abs(p.f) - p.a);
}

bool family1_is_entangled(const Family1Params& p) {
  check_family1(p);
  return p.a < std::abs(p.f);
}

}  // namespace spadetect
