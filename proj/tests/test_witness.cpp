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
#include "spadetect/errors.hpp"
#include "spadetect/random.hpp"
#include "spadetect/states.hpp"
#include "spadetect/witness.hpp"

namespace {

using namespace spadetect;

const BipartiteDims kQubits(2, 2);
const BipartiteDims kQutritQubit(3, 2);

double max_dev(const CMatrix& a, const CMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

CVector family1_psi(Complex k) {
  CVector psi = CVector::Zero(4);
  psi(0) = k / std::sqrt(2.0);
  psi(3) = 1.0 / std::sqrt(2.0);
  return psi;
}

TEST(WitnessFromPure, FamilyOneEntries) {
  const Complex f(0.4, 0.1);
  const Complex k = -f / std::abs(f);
  const EntanglementWitness w = witness_from_pure(family1_psi(k), kQubits);
  CMatrix expected = CMatrix::Zero(4, 4);
  expected(0, 0) = expected(3, 3) = 0.5;
  expected(1, 2) = k / 2.0;
  expected(2, 1) = std::conj(k) / 2.0;
  EXPECT_LT(max_dev(w.op.matrix(), expected), 1e-15);
  EXPECT_NEAR(w.op.trace(), 1.0, 1e-15);
}

TEST(WitnessFromPure, ProductStateIsFixed) {
  CVector psi = CVector::Zero(4);
  psi(0) = 1.0;
  const EntanglementWitness w = witness_from_pure(psi, kQubits);
  EXPECT_EQ(w.op.matrix(), psi * psi.adjoint());
}

TEST(WitnessFromPure, QutritQubitEntries) {
  const double kappa = family2_kappa(0.3);
  CVector chi = CVector::Zero(6);
  chi(3) = -kappa;
  chi(4) = 1.0;
  chi /= std::sqrt(1 + kappa * kappa);
  const EntanglementWitness w = witness_from_pure(chi, kQutritQubit);
  const double n2 = 1 + kappa * kappa;
  CMatrix expected = CMatrix::Zero(6, 6);
  expected(3, 3) = kappa * kappa / n2;
  expected(4, 4) = 1 / n2;
  expected(2, 5) = expected(5, 2) = -kappa / n2;
  EXPECT_LT(max_dev(w.op.matrix(), expected), 1e-15);
}

TEST(WitnessFromPure, RejectsUnnormalized) {
  CVector psi = CVector::Zero(4);
  psi(0) = 2.0;
  EXPECT_THROW(witness_from_pure(psi, kQubits), ValidationError);
  EXPECT_THROW(witness_from_pure(CVector::Ones(3) / std::sqrt(3.0), kQubits), DimensionError);
}

TEST(PStar, KnownWitnesses) {
  EXPECT_NEAR(p_star(witness_from_pure(family1_psi(-1.0), kQubits)), 1.0 / 3.0, 1e-14);
  CVector prod = CVector::Zero(4);
  prod(1) = 1.0;
  EXPECT_EQ(p_star(witness_from_pure(prod, kQubits)), 1.0);
  EXPECT_NEAR(p_star(witness_family_2(0.0).base), 1.0 / 4.0, 1e-14);
}

TEST(PStar, FamilyTwoWitnessAllowsQuarterEverywhere) {
  for (int k = 0; k < 100; ++k) {
    EXPECT_GE(p_star(witness_family_2(0.01 * k).base), 0.25 - 1e-14);
  }
}

TEST(ApproximateWitness, FamilyOneDisplayedMatrix) {
  const Complex f(0.25, 0.25);
  const Complex k = -f / std::abs(f);
  const ApproximatedWitness aw = witness_family_1(f);
  EXPECT_NEAR(aw.p, 1.0 / 3.0, 1e-16);
  EXPECT_NEAR(aw.threshold_R, 1.0 / 6.0, 1e-16);
  CMatrix expected = CMatrix::Zero(4, 4);
  expected(0, 0) = expected(3, 3) = 1.0 / 3.0;
  expected(1, 1) = expected(2, 2) = 1.0 / 6.0;
  expected(1, 2) = k / 6.0;
  expected(2, 1) = std::conj(k) / 6.0;
  EXPECT_LT(max_dev(aw.op.matrix(), expected), 1e-15);
  EXPECT_NEAR(std::norm(k), 1.0, 1e-15);
  EXPECT_NEAR(lambda_min(aw.op), 0.0, 1e-15);
}

TEST(ApproximateWitness, FamilyTwoDisplayedPattern) {
  for (double alpha : {0.0, 0.25, 0.5, 0.9}) {
    const ApproximatedWitness aw = witness_family_2(alpha);
    const double kappa = family2_kappa(alpha);
    const double r = family2_r(alpha);
    EXPECT_NEAR(r, 1.0 / (4.0 * (1.0 + kappa * kappa)), 1e-15);
    EXPECT_NEAR(aw.threshold_R, 1.0 / 8.0, 1e-16);
    CMatrix expected = CMatrix::Identity(6, 6) / 8.0;
    expected(3, 3) += kappa * kappa * r;
    expected(4, 4) += r;
    expected(2, 5) = expected(5, 2) = -kappa * r;
    EXPECT_LT(max_dev(aw.op.matrix(), expected), 1e-15);
    EXPECT_NEAR(aw.op.trace(), 1.0, 1e-15);
  }
}

TEST(ApproximateWitness, KappaValues) {
  EXPECT_NEAR(family2_kappa(0.0), 1.0, 1e-15);
  EXPECT_NEAR(family2_kappa(0.5), (1 + std::sqrt(5.0)) / 2, 1e-14);
  EXPECT_THROW(family2_kappa(1.0), std::invalid_argument);
  EXPECT_EQ(family2_r(1.0), 0.0);
}

TEST(ApproximateWitness, BoundaryPsdAtPStar) {
  StateSampler s(1);
  for (int t = 0; t < 200; ++t) {
    const BipartiteDims d(2 + t % 2, 2 + (t / 2) % 2);
    const EntanglementWitness w = witness_from_pure(s.pure(d.total()), d);
    const ApproximatedWitness aw = approximate_witness(w, p_star(w));
    const double lmin = lambda_min(aw.op);
    EXPECT_GE(lmin, -tol::kPsd);
    if (p_star(w) < 1.0) EXPECT_LE(lmin, tol::kEig);
    EXPECT_NEAR(aw.op.trace(), 1.0, 1e-13);
  }
}

TEST(ApproximateWitness, RejectsPBeyondPStar) {
  const EntanglementWitness w = witness_from_pure(family1_psi(1.0), kQubits);
  try {
    approximate_witness(w, 0.5);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.kind(), Violation::NotPSD);
  }
  EXPECT_THROW(approximate_witness(w, 0.0), std::invalid_argument);
  EXPECT_THROW(approximate_witness(w, 1.5), std::invalid_argument);
}

TEST(ApproximateWitness, ExpectationRoundTrip) {
  StateSampler s(2);
  for (int t = 0; t < 500; ++t) {
    const BipartiteDims d(2 + t % 2, 2 + (t / 2) % 2);
    const EntanglementWitness w = witness_from_pure(s.pure(d.total()), d);
    const ApproximatedWitness aw = approximate_witness(w, p_star(w) * s.uniform(0.1, 1.0));
    const DensityMatrix rho = s.density(d);
    EXPECT_NEAR(aw.witness_expectation(overlap(aw.op, rho)), overlap(w.op, rho), 1e-12);
  }
}

TEST(Tailored, ExpectationIsMinimumPartialTransposeEigenvalue) {
  StateSampler s(3);
  for (int t = 0; t < 100; ++t) {
    const BipartiteDims d(2 + t % 2, 2 + (t / 2) % 2);
    const DensityMatrix rho = s.density(d);
    const EntanglementWitness w = witness_tailored(rho);
    EXPECT_NEAR(overlap(w.op, rho), lambda_min(partial_transpose_B(rho)), 1e-12);
  }
}

TEST(FamilyOneWitness, DetectsEveryEntangledMember) {
  StateSampler s(4);
  int checked = 0;
  while (checked < 500) {
    const double a = s.uniform(0.0, 0.5);
    const double b = 0.5 - a;
    const double mag = s.uniform(0.0, b);
    if (!(a < mag)) continue;
    const Complex f = std::polar(mag, s.uniform(0.0, 2 * M_PI));
    const ApproximatedWitness aw = witness_family_1(f);
    EXPECT_LT(overlap(aw.base.op, build_family1({a, b, f})), 0.0);
    ++checked;
  }
}

TEST(FamilyOneWitness, DegenerateAtZero) {
  EXPECT_THROW(witness_family_1(Complex(0.0, 0.0)), DegenerateWitnessError);
}

TEST(FamilyTwoWitness, DetectsInterior) {
  for (int k = 1; k < 100; ++k) {
    const double alpha = 0.01 * k;
    EXPECT_LT(overlap(witness_family_2(alpha).base.op, build_family2({alpha})), 0.0);
  }
  EXPECT_THROW(witness_family_2(1.0), DegenerateWitnessError);
}

}  // namespace
