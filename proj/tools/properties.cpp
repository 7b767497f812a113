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

#include "properties.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "spadetect/random.hpp"
#include "spadetect/spa_maps.hpp"

namespace spadetect::cli {

namespace {

const std::array<BipartiteDims, 4> kDims = {BipartiteDims(2, 2), BipartiteDims(2, 3),
                                            BipartiteDims(3, 2), BipartiteDims(3, 3)};

DensityMatrix maximally_entangled(BipartiteDims dims) {
  const int m = std::min(dims.d1(), dims.d2());
  CVector psi = CVector::Zero(dims.total());
  for (int i = 0; i < m; ++i) psi(dims.index(i, i)) = 1.0 / std::sqrt(double(m));
  return pure_density(psi, dims);
}

struct Tally {
  PropertyOutcome out;

  void record(double margin) {
    ++out.trials;
    if (margin > 0.0) {
      ++out.violations;
      out.worst = std::max(out.worst, margin);
    }
  }
};

Tally named(std::string name) {
  Tally t;
  t.out.name = std::move(name);
  return t;
}

}  // namespace

std::vector<PropertyOutcome> run_properties(std::uint64_t seed, int trials,
                                            std::optional<double> q_override) {
  StateSampler sampler(seed);

  Tally sandwich = named("trace_sandwich");
  Tally pt_range = named("pt_spectral_range");
  Tally involution = named("pt_involution_and_trace");
  Tally generic = named("spa_generic_psd_trace");
  Tally two_qubit = named("spa_two_qubit_equals_generic");
  Tally qutrit_psd = named("spa_qutrit_qubit_hermitian_psd");
  Tally linearity = named("spa_generic_linearity");
  Tally threshold = named("eigen_threshold_matches_pt_sign");
  PropertyOutcome qutrit_trace = named("spa_qutrit_qubit_trace_deviation").out;
  qutrit_trace.informational = true;

  if (q_override) generic.out.detail = "q override " + std::to_string(*q_override);

  auto generic_check = [&](const DensityMatrix& rho) {
    const double q = q_override.value_or(q_star(rho.dims()));
    const HermitianOperator out = spa_pt_generic_operator(rho, q);
    const double trace_gap = std::abs(out.trace() - 1.0) - 1e-12;
    const double psd_gap = -lambda_min(out) - tol::kPsd;
    generic.record(std::max(trace_gap, psd_gap));
  };

  for (const BipartiteDims& dims : kDims) generic_check(maximally_entangled(dims));

  for (int t = 0; t < trials; ++t) {
    const BipartiteDims dims = kDims[t % kDims.size()];
    const DensityMatrix rho = sampler.density(dims);

    const HermitianOperator a = sampler.hermitian(dims);
    const std::vector<double> spectrum = eig_hermitian(a);
    const double tr_ab = overlap(a, rho);
    sandwich.record(std::max(spectrum.front() * rho.trace() - tr_ab,
                             tr_ab - spectrum.back() * rho.trace()) - 1e-10);

    const HermitianOperator pt = partial_transpose_B(rho);
    const std::vector<double> pt_spec = eig_hermitian(pt);
    pt_range.record(std::max(-0.5 - pt_spec.front(), pt_spec.back() - 1.0) - tol::kEig);

    const CMatrix back = partial_transpose_B(pt.matrix(), dims);
    const bool exact = back == rho.matrix() && pt.matrix().trace() == rho.matrix().trace();
    involution.record(exact ? -1.0 : 1.0);

    generic_check(rho);

    const DensityMatrix rho2 = sampler.density(dims);
    const double w = sampler.uniform(0.0, 1.0);
    const HermitianOperator mix(dims, w * rho.matrix() + (1.0 - w) * rho2.matrix());
    const double q = q_star(dims);
    const CMatrix lhs = spa_pt_generic_operator(mix, q).matrix();
    const CMatrix rhs = w * spa_pt_generic_operator(rho, q).matrix() +
                        (1.0 - w) * spa_pt_generic_operator(rho2, q).matrix();
    linearity.record((lhs - rhs).cwiseAbs().maxCoeff() - 1e-12);

    if (dims == BipartiteDims(2, 2)) {
      const CMatrix closed = spa_pt_two_qubit(rho).matrix();
      const CMatrix gen = spa_pt_generic_operator(rho, 8.0 / 9.0).matrix();
      two_qubit.record((closed - gen).cwiseAbs().maxCoeff() - 1e-12);

      const double pt_min = pt_spec.front();
      if (std::abs(pt_min) >= 1e-9) {
        const double spa_min = lambda_min(spa_pt_generic_operator(rho, q_star(dims)));
        threshold.record((spa_min < spa_threshold(dims)) == (pt_min < 0.0) ? -1.0 : 1.0);
      }
    }

    if (dims == BipartiteDims(3, 2)) {
      const HermitianOperator out = spa_pt_qutrit_qubit_operator(rho);
      qutrit_psd.record(std::max(hermiticity_defect(out.matrix()) - tol::kHermitian,
                                 -lambda_min(out) - tol::kPsd));
      ++qutrit_trace.trials;
      qutrit_trace.worst = std::max(qutrit_trace.worst, std::abs(out.trace() - 1.0));
    }
  }
  qutrit_trace.detail = "max |Tr - 1| at a=b=c=1/sqrt(2); zero only without qutrit coherences";

  return {sandwich.out,  pt_range.out,  involution.out, generic.out,  two_qubit.out,
          linearity.out, qutrit_psd.out, threshold.out,  qutrit_trace};
}

}  // namespace spadetect::cli
