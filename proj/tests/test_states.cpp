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

#include <gtest/gtest.h>

#include <cmath>

#include "oracles/brute.hpp"
#include "oracles/jacobi.hpp"
#include "spadetect/detect.hpp"
#include "spadetect/errors.hpp"
#include "spadetect/random.hpp"
#include "spadetect/states.hpp"

namespace {

using namespace spadetect;

Violation violation_of(const Family1Params& p) {
  try {
    build_family1(p);
  } catch (const ValidationError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no violation";
  return Violation::OutOfRange;
}

TEST(FamilyOne, DisplayedMatrix) {
  const Complex f(0.4, 0.1);
  const DensityMatrix rho = build_family1({0.05, 0.45, f});
  CMatrix expected = CMatrix::Zero(4, 4);
  expected(0, 0) = expected(3, 3) = 0.05;
  expected(1, 1) = expected(2, 2) = 0.45;
  expected(1, 2) = f;
  expected(2, 1) = std::conj(f);
  EXPECT_EQ(rho.matrix(), expected);
  EXPECT_TRUE(family1_is_entangled({0.05, 0.45, f}));
  EXPECT_NEAR(std::abs(f), 0.41231, 1e-5);
}

TEST(FamilyOne, QuarterIsMaximallyMixed) {
  const DensityMatrix rho = build_family1({0.25, 0.25, 0.0});
  EXPECT_EQ(rho.matrix(), CMatrix::Identity(4, 4) / 4.0);
  EXPECT_FALSE(family1_is_entangled({0.25, 0.25, 0.0}));
}

TEST(FamilyOne, Violations) {
  EXPECT_EQ(violation_of({0.05, 0.45, 0.5}), Violation::NotPSD);
  EXPECT_EQ(violation_of({0.1, 0.5, 0.0}), Violation::TraceNotOne);
  EXPECT_EQ(violation_of({0.1, 0.4 + 1e-11, 0.0}), Violation::TraceNotOne);
  EXPECT_EQ(violation_of({-0.1, 0.6, 0.0}), Violation::OutOfRange);
  EXPECT_NO_THROW(build_family1({0.1, 0.4, Complex(0.0, 0.4)}));
}

TEST(FamilyOne, ConcurrenceValues) {
  EXPECT_NEAR(family1_concurrence({0.2, 0.3, Complex(0.27, 0.13)}), 0.09966, 1e-5);
  EXPECT_NEAR(family1_concurrence({0.05, 0.45, Complex(0.2, 0.2)}), 0.23284, 1e-5);
  EXPECT_NEAR(family1_concurrence({0.1, 0.4, Complex(0.25, 0.25)}), 0.25355, 1e-5);
  EXPECT_EQ(family1_concurrence({0.25, 0.25, 0.0}), 0.0);
}

TEST(FamilyOne, EntangledExactlyWhenPartialTransposeIsNegative) {
  for (int i = 0; i <= 50; ++i) {
    const double a = 0.5 * i / 50.0;
    const double b = 0.5 - a;
    for (int j = 0; j <= 20; ++j) {
      const double mag = b * j / 20.0;
      const Complex f = std::polar(mag, 0.37 * j);
      const DensityMatrix rho = build_family1({a, b, f});
      const double pt_min = oracle::jacobi_eigenvalues(
          oracle::partial_transpose(rho.matrix(), 2, 2)).front();
      if (std::abs(pt_min) < 1e-12) continue;
      EXPECT_EQ(family1_is_entangled({a, b, f}), pt_min < 0.0) << a << " " << mag;
    }
  }
}

// The spin-flip concurrence of this family is twice |f| - a.
TEST(FamilyOne, WoottersIsTwiceClosedForm) {
  StateSampler s(1);
  for (int t = 0; t < 1000; ++t) {
    const double a = s.uniform(0.0, 0.5);
    const double b = 0.5 - a;
    const Complex f = std::polar(s.uniform(0.0, b), s.uniform(0.0, 2 * M_PI));
    const DensityMatrix rho = build_family1({a, b, f});
    const double closed = family1_concurrence({a, b, f});
    EXPECT_NEAR(oracle::wootters(rho.matrix()), 2.0 * closed, 1e-10);
    EXPECT_NEAR(wootters_concurrence(rho), 2.0 * closed, 1e-10);
  }
}

TEST(FamilyTwo, BlockStructure) {
  const DensityMatrix rho = build_family2({0.5});
  EXPECT_NEAR(rho.matrix()(1, 1).real(), 0.25, 1e-16);
  EXPECT_NEAR(rho.matrix()(1, 4).real(), 0.25, 1e-16);
  EXPECT_NEAR(rho.matrix()(2, 5).real(), 0.25, 1e-16);
  EXPECT_NEAR(rho.trace(), 1.0, 1e-15);

  const DensityMatrix r0 = build_family2({0.0});
  EXPECT_EQ(r0.matrix()(1, 1), Complex(0.0));
  EXPECT_NEAR(r0.matrix()(2, 5).real(), 0.5, 1e-16);
  EXPECT_NEAR(r0.trace(), 1.0, 1e-15);
}

TEST(FamilyTwo, MatchesDefiningPureStates) {
  for (double alpha : {0.0, 0.3, 1.0}) {
    const double s = 1.0 / std::sqrt(2.0);
    const oracle::Vec psi1 = s * (oracle::ket2(3, 2, 0, 1) + oracle::ket2(3, 2, 2, 0));
    const oracle::Vec psi2 = s * (oracle::ket2(3, 2, 1, 0) + oracle::ket2(3, 2, 2, 1));
    const CMatrix expected =
        alpha * psi1 * psi1.adjoint() + (1 - alpha) * psi2 * psi2.adjoint();
    EXPECT_LT((build_family2({alpha}).matrix() - expected).cwiseAbs().maxCoeff(), 1e-15);
  }
}

TEST(FamilyTwo, RankAtMostTwo) {
  const std::vector<double> ev = eig_hermitian(build_family2({0.37}));
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(ev[i], 0.0, 1e-14);
}

TEST(FamilyTwo, NegativePartialTransposeAcrossGrid) {
  for (int k = 0; k <= 100; ++k) {
    const DensityMatrix rho = build_family2({0.01 * k});
    const double pt_min = oracle::jacobi_eigenvalues(
        oracle::partial_transpose(rho.matrix(), 3, 2)).front();
    EXPECT_LT(pt_min, -1e-3) << "alpha " << 0.01 * k;
  }
}

TEST(FamilyTwo, RejectsAlphaOutsideUnitInterval) {
  EXPECT_THROW(build_family2({-0.01}), ValidationError);
  EXPECT_THROW(build_family2({1.01}), ValidationError);
}

TEST(FamilyOne, PhaseOfFOnlyMovesWitnessPhase) {
  const double a = 0.1, b = 0.4, mag = 0.3;
  const DetectionReport base = full_report(build_family1({a, b, mag}), family_config(Family1Params{a, b, mag}));
  for (double phase : {0.3, 1.7, 3.1, -2.2}) {
    const Family1Params p{a, b, std::polar(mag, phase)};
    const DetectionReport r = full_report(build_family1(p), family_config(p));
    EXPECT_NEAR(r.fidelity_witness_state, base.fidelity_witness_state, 1e-14);
    EXPECT_NEAR(r.fidelity_state_spa, base.fidelity_state_spa, 1e-14);
    EXPECT_NEAR(r.eig_bounds.lambda_min_spa, base.eig_bounds.lambda_min_spa, 1e-14);
    EXPECT_NEAR(r.concurrence.lower_raw, base.concurrence.lower_raw, 1e-14);
    EXPECT_NEAR(*r.wootters, *base.wootters, 1e-12);
    EXPECT_EQ(r.overall, base.overall);
    for (size_t i = 0; i < r.spectra.partial_transpose.size(); ++i) {
      EXPECT_NEAR(r.spectra.partial_transpose[i], base.spectra.partial_transpose[i], 1e-14);
    }
  }
}

}  // namespace
