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

#include "spadetect/detect.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace spadetect {

namespace {

Verdict strict_less(double lhs, double rhs) {
  if (lhs < rhs) return Verdict::Entangled;
  if (lhs == rhs) return Verdict::Inconclusive;
  return Verdict::NotDetected;
}

void require_same_dims(const HermitianOperator& a, const HermitianOperator& b) {
  if (!(a.dims() == b.dims())) throw DimensionError("operands have different dimensions");
}

std::string complex_text(Complex z) {
  std::ostringstream os;
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Entangled:
      return "Entangled(NPT)";
    case Verdict::NotDetected:
      return "NotDetected";
    case Verdict::Inconclusive:
      return "Inconclusive";
    case Verdict::Degenerate:
      return "Degenerate";
  }
  return "Unknown";
}

std::string_view to_string(ConcurrenceSource s) {
  switch (s) {
    case ConcurrenceSource::MeasurableLowerBound:
      return "measurable_lower_bound";
    case ConcurrenceSource::Wootters:
      return "wootters";
    case ConcurrenceSource::Supplied:
      return "supplied";
  }
  return "unknown";
}

bool EigBounds::sandwich_holds() const {
  return std::max(lower, 0.0) <= lambda_min_spa + tol::kEig &&
         lambda_min_spa <= upper + tol::kEig;
}

EigBounds eig_bounds(const DensityMatrix& rho, const DensityMatrix& rho_spa,
                     const EntanglementWitness& w) {
  require_same_dims(rho, rho_spa);
  require_same_dims(rho, w.op);
  const double lower = overlap(rho_spa, rho) + overlap(w.op, rho);
  const double lmin = lambda_min(rho_spa);
  return {lower, lower + 0.5, lmin, lower - lmin};
}

Criterion1Result criterion1(const DensityMatrix& rho, const ApproximatedWitness& aw) {
  require_same_dims(rho, aw.op);
  const double f = overlap(aw.op, rho);
  return {f, aw.threshold_R, strict_less(f, aw.threshold_R)};
}

ConcurrenceBounds concurrence_bounds(const DensityMatrix& rho, const DensityMatrix& rho_spa,
                                     const ApproximatedWitness& aw) {
  require_same_dims(rho, rho_spa);
  require_same_dims(rho, aw.op);
  const double n = rho.size();
  const double lower = (1.0 - aw.p) / (aw.p * n) - overlap(aw.op, rho) / aw.p;
  return {lower, overlap(rho, rho_spa)};
}

Criterion2Evaluation criterion2_with(const DensityMatrix& rho, const DensityMatrix& rho_spa,
                                     double concurrence, ConcurrenceSource source) {
  require_same_dims(rho, rho_spa);
  Criterion2Evaluation e{};
  e.source = source;
  e.concurrence = concurrence;
  e.lambda_min_spa = lambda_min(rho_spa);
  e.fidelity_state_spa = overlap(rho, rho_spa);
  e.rhs = e.fidelity_state_spa - concurrence;
  e.branch_applicable = concurrence > 0.0 && concurrence <= e.fidelity_state_spa;
  if (!e.branch_applicable) {
    e.verdict = Verdict::Inconclusive;
  } else {
    // lambda_min > rhs, written as rhs < lambda_min for the shared tie rule.
    e.verdict = strict_less(e.rhs, e.lambda_min_spa);
  }
  return e;
}

Criterion2Result criterion2(const DensityMatrix& rho, const DensityMatrix& rho_spa,
                            const ApproximatedWitness& aw) {
  Criterion2Result out{eig_bounds(rho, rho_spa, aw.base), concurrence_bounds(rho, rho_spa, aw), {}};
  out.evaluations.push_back(criterion2_with(rho, rho_spa, out.concurrence.lower(),
                                            ConcurrenceSource::MeasurableLowerBound));
  if (rho.dims() == BipartiteDims(2, 2)) {
    out.evaluations.push_back(criterion2_with(rho, rho_spa, wootters_concurrence(rho),
                                              ConcurrenceSource::Wootters));
  }
  return out;
}

Criterion3Result criterion3(const DensityMatrix& rho, const DensityMatrix& rho_spa,
                            double concurrence, ConcurrenceSource source) {
  require_same_dims(rho, rho_spa);
  Criterion3Result r{};
  r.source = source;
  r.concurrence = concurrence;
  r.fidelity_state_spa = overlap(rho, rho_spa);
  r.u_ent = 0.5 + r.fidelity_state_spa - concurrence;
  r.branch_applicable = concurrence > r.fidelity_state_spa;
  r.verdict = r.branch_applicable ? strict_less(r.u_ent, 0.5) : Verdict::Inconclusive;
  return r;
}

double wootters_concurrence(const DensityMatrix& rho) {
  if (!(rho.dims() == BipartiteDims(2, 2))) {
    throw DimensionError("Wootters concurrence is defined for two qubits only");
  }
  CMatrix sy(2, 2);
  sy << 0.0, Complex(0, -1), Complex(0, 1), 0.0;
  const CMatrix yy = tensor(sy, sy);
  const CMatrix flipped = yy * rho.matrix().conjugate() * yy;

  // Eigenvalues of rho * flipped equal those of sqrt(rho) flipped sqrt(rho),
  // which is Hermitian and positive semi-definite.
  const EigenDecomposition dec = eigh(rho);
  Eigen::VectorXd root(4);
  for (int i = 0; i < 4; ++i) root(i) = std::sqrt(std::max(dec.values[i], 0.0));
  const CMatrix sqrt_rho = dec.vectors * root.asDiagonal() * dec.vectors.adjoint();
  std::vector<double> mu = eig_hermitian(hermitian_part(sqrt_rho * flipped * sqrt_rho));

  std::vector<double> s(4);
  for (int i = 0; i < 4; ++i) s[i] = std::sqrt(std::max(mu[i], 0.0));
  std::sort(s.begin(), s.end(), std::greater<>());
  return std::max(0.0, s[0] - s[1] - s[2] - s[3]);
}

EigenThresholdResult eigen_threshold_test(const DensityMatrix& rho, std::optional<double> q) {
  EigenThresholdResult r{};
  r.q = q.value_or(q_star(rho.dims()));
  r.threshold = r.q / rho.size();
  r.lambda_min_spa = lambda_min(spa_pt_generic_operator(rho, r.q));
  r.q_extrapolated = !q && q_star_is_extrapolated(rho.dims());
  r.verdict = strict_less(r.lambda_min_spa, r.threshold);
  return r;
}

DetectionConfig family_config(const Family1Params& p) {
  DetectionConfig cfg;
  std::ostringstream os;
  os << "rho1(a=" << p.a << ", b=" << p.b << ", f=" << complex_text(p.f) << ")";
  cfg.description = os.str();
  try {
    cfg.witness = witness_family_1(p.f);
  } catch (const DegenerateWitnessError& e) {
    cfg.witness_note = std::string(e.what()) + "; tailored witness used";
  }
  return cfg;
}

DetectionConfig family_config(const Family2Params& p) {
  DetectionConfig cfg;
  std::ostringstream os;
  os << "rho2(alpha=" << p.alpha << ")";
  cfg.description = os.str();
  try {
    cfg.witness = witness_family_2(p.alpha);
  } catch (const DegenerateWitnessError& e) {
    cfg.witness_note = std::string(e.what()) + "; tailored witness used";
  }
  return cfg;
}

DetectionReport full_report(const DensityMatrix& rho, const DetectionConfig& config) {
  DetectionReport rep;
  rep.description = config.description;
  rep.dims = rho.dims();
  rep.witness_note = config.witness_note;

  SpaMap map = config.q_override ? SpaMap{GenericSpa{*config.q_override}}
                                 : select_spa_map(rho.dims());
  std::optional<DensityMatrix> spa;
  try {
    spa = apply_spa(map, rho);
  } catch (const ValidationError& e) {
    if (!std::holds_alternative<QutritQubitSpa>(map) || e.kind() != Violation::TraceNotOne) {
      throw;
    }
    std::ostringstream os;
    os << "qutrit-qubit map output trace deviates from 1 by " << e.worst()
       << " on this input; generic map at q* used instead";
    rep.spa_note = os.str();
    map = GenericSpa{q_star(rho.dims())};
    spa = apply_spa(map, rho);
  }
  rep.spa_map = spa_map_name(map);
  if (const auto* g = std::get_if<GenericSpa>(&map)) rep.spa_q = g->q;
  rep.q_star_extrapolated = !config.q_override && std::holds_alternative<GenericSpa>(map) &&
                            q_star_is_extrapolated(rho.dims());

  const ApproximatedWitness aw = [&] {
    if (config.witness) return *config.witness;
    const EntanglementWitness w = witness_tailored(rho);
    return approximate_witness(w, p_star(w));
  }();
  require_same_dims(rho, aw.op);
  rep.witness_source = aw.base.source;
  rep.p = aw.p;
  rep.threshold_R = aw.threshold_R;

  rep.criterion1 = criterion1(rho, aw);
  rep.fidelity_witness_state = rep.criterion1.fidelity;
  rep.witness_expectation = aw.witness_expectation(rep.fidelity_witness_state);

  const Criterion2Result c2 = criterion2(rho, *spa, aw);
  rep.eig_bounds = c2.bounds;
  rep.concurrence = c2.concurrence;
  rep.criterion2 = c2.evaluations;
  rep.fidelity_state_spa = c2.concurrence.upper;

  rep.criterion3.push_back(criterion3(rho, *spa, rep.concurrence.lower(),
                                      ConcurrenceSource::MeasurableLowerBound));
  if (rho.dims() == BipartiteDims(2, 2)) {
    rep.wootters = wootters_concurrence(rho);
    rep.criterion3.push_back(criterion3(rho, *spa, *rep.wootters, ConcurrenceSource::Wootters));
  }

  rep.eigen_threshold = eigen_threshold_test(rho, config.q_override);

  rep.spectra.state = eig_hermitian(rho);
  rep.spectra.partial_transpose = eig_hermitian(partial_transpose_B(rho));
  rep.spectra.spa = eig_hermitian(*spa);
  rep.spectra.witness = eig_hermitian(aw.base.op);
  rep.spectra.approx_witness = eig_hermitian(aw.op);

  bool detected = rep.criterion1.verdict == Verdict::Entangled ||
                  rep.eigen_threshold.verdict == Verdict::Entangled;
  for (const auto& e : rep.criterion2) detected |= e.verdict == Verdict::Entangled;
  for (const auto& e : rep.criterion3) detected |= e.verdict == Verdict::Entangled;
  rep.overall = detected ? Verdict::Entangled : Verdict::NotDetected;
  return rep;
}

}  // namespace spadetect
