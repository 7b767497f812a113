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

#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <variant>

#include <json.hpp>

#include "properties.hpp"
#include "spadetect/detect.hpp"
#include "spadetect/errors.hpp"
#include "spadetect/matrix_io.hpp"
#include "spadetect/report_json.hpp"
#include "spadetect/spa_maps.hpp"
#include "spadetect/states.hpp"
#include "spadetect/witness.hpp"
#include "tables.hpp"

namespace spadetect::cli {

using nlohmann::ordered_json;

std::string sig6(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::abs(x) < kZeroSnap) x = 0.0;
  int decimals = 5;
  if (x != 0.0) {
    const int exponent = static_cast<int>(std::floor(std::log10(std::abs(x))));
    decimals = std::max(0, 5 - exponent);
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  // Rounding can carry into a new leading digit (0.0999999 -> 0.100000).
  std::string s(buf);
  if (x != 0.0 && decimals > 0) {
    int digits = 0;
    bool leading = true;
    for (char c : s) {
      if (c < '0' || c > '9') continue;
      if (leading && c == '0') continue;
      leading = false;
      ++digits;
    }
    if (digits > 6) {
      std::snprintf(buf, sizeof buf, "%.*f", decimals - 1, x);
      s = buf;
    }
  }
  return s;
}

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PreparedState {
  DensityMatrix rho;
  DetectionConfig config;
};

Family1Params family1_from_flags(const RunConfig& c) {
  if (!c.a || !c.b || !c.f) throw InputError("rho1 needs --a, --b and --f");
  if (c.alpha) throw InputError("--alpha does not apply to rho1");
  return {*c.a, *c.b, parse_complex(*c.f)};
}

Family2Params family2_from_flags(const RunConfig& c) {
  if (!c.alpha) throw InputError("rho2 needs --alpha");
  if (c.a || c.b || c.f) throw InputError("--a, --b, --f do not apply to rho2");
  return {*c.alpha};
}

PreparedState prepare(const RunConfig& c) {
  if (c.file.has_value() == c.family.has_value()) {
    throw InputError("give exactly one of --file or --family");
  }
  if (c.q && !(*c.q >= 0.0 && *c.q <= 1.0)) throw InputError("--q must lie in [0,1]");

  const StatePayload payload = [&]() -> StatePayload {
    if (!c.family) {
      if (c.a || c.b || c.f || c.alpha) throw InputError("family parameters need --family");
      return parse_state_json(read_json_file(*c.file));
    }
    if (*c.family == "rho1") return family1_from_flags(c);
    if (*c.family == "rho2") return family2_from_flags(c);
    throw InputError("unknown family '" + *c.family + "' (expected rho1 or rho2)");
  }();

  auto build = [](const StatePayload& p) -> PreparedState {
    if (const auto* m = std::get_if<MatrixPayload>(&p)) {
      DetectionConfig cfg;
      cfg.description = "matrix";
      return {validate_density(m->matrix, m->dims), cfg};
    }
    if (const auto* f1 = std::get_if<Family1Params>(&p)) {
      return {build_family1(*f1), family_config(*f1)};
    }
    const auto& f2 = std::get<Family2Params>(p);
    return {build_family2(f2), family_config(f2)};
  };
  PreparedState st = build(payload);
  if (c.file && std::holds_alternative<MatrixPayload>(payload)) st.config.description = *c.file;

  if (c.witness_file) {
    const PureStatePayload pure = parse_pure_state_json(read_json_file(*c.witness_file));
    if (!(pure.dims == st.rho.dims())) {
      throw InputError("witness dimensions do not match the state");
    }
    const EntanglementWitness w = witness_from_pure(pure.psi, pure.dims, *c.witness_file);
    st.config.witness = approximate_witness(w, p_star(w));
    st.config.witness_note.clear();
  }
  st.config.q_override = c.q;
  return st;
}

void write_human(const DetectionReport& r, std::ostream& out) {
  out << "state        " << r.description << "  (" << r.dims.d1() << "x" << r.dims.d2() << ")\n";
  out << "spa map      " << r.spa_map;
  if (r.spa_q) out << "  q=" << sig6(*r.spa_q) << (r.q_star_extrapolated ? " (extrapolated)" : "");
  out << "\n";
  if (!r.spa_note.empty()) out << "             " << r.spa_note << "\n";
  out << "witness      " << r.witness_source << "  p=" << sig6(r.p)
      << "  R=" << sig6(r.threshold_R) << "\n";
  if (!r.witness_note.empty()) out << "             " << r.witness_note << "\n";
  out << "Tr(W~ rho)   " << sig6(r.fidelity_witness_state) << "\n";
  out << "Tr(rho rho~) " << sig6(r.fidelity_state_spa) << "\n";
  out << "Tr(W rho)    " << sig6(r.witness_expectation) << "\n";
  out << "criterion 1  F=" << sig6(r.criterion1.fidelity) << " vs R=" << sig6(r.criterion1.threshold)
      << "  " << to_string(r.criterion1.verdict) << "\n";
  out << "eig bounds   L=" << sig6(r.eig_bounds.lower) << " lambda_min(rho~)="
      << sig6(r.eig_bounds.lambda_min_spa) << " U=" << sig6(r.eig_bounds.upper)
      << " G=" << sig6(r.eig_bounds.g) << "\n";
  out << "concurrence  lower=" << sig6(r.concurrence.lower()) << " upper=" << sig6(r.concurrence.upper);
  if (r.wootters) out << " wootters=" << sig6(*r.wootters);
  out << "\n";
  for (const auto& e : r.criterion2) {
    out << "criterion 2  [" << to_string(e.source) << "] C=" << sig6(e.concurrence)
        << "  lambda_min(rho~)=" << sig6(e.lambda_min_spa) << " vs " << sig6(e.rhs) << "  "
        << to_string(e.verdict) << "\n";
  }
  for (const auto& e : r.criterion3) {
    out << "criterion 3  [" << to_string(e.source) << "] C=" << sig6(e.concurrence)
        << "  U_ent=" << sig6(e.u_ent) << "  " << to_string(e.verdict) << "\n";
  }
  const auto& et = r.eigen_threshold;
  out << "eigen test   lambda_min=" << sig6(et.lambda_min_spa) << " vs q/n=" << sig6(et.threshold)
      << "  " << to_string(et.verdict) << "\n";
  out << "overall      " << to_string(r.overall) << "\n";
}

void write_csv(const DetectionReport& r, std::ostream& out) {
  out << "quantity,value\n";
  auto row = [&](const std::string& k, const std::string& v) { out << k << "," << v << "\n"; };
  row("d1", std::to_string(r.dims.d1()));
  row("d2", std::to_string(r.dims.d2()));
  row("spa_map", r.spa_map);
  row("p", sig6(r.p));
  row("threshold_R", sig6(r.threshold_R));
  row("fidelity_witness_state", sig6(r.fidelity_witness_state));
  row("fidelity_state_spa", sig6(r.fidelity_state_spa));
  row("witness_expectation", sig6(r.witness_expectation));
  row("criterion1", std::string(to_string(r.criterion1.verdict)));
  row("eig_lower", sig6(r.eig_bounds.lower));
  row("eig_upper", sig6(r.eig_bounds.upper));
  row("lambda_min_spa", sig6(r.eig_bounds.lambda_min_spa));
  row("concurrence_lower", sig6(r.concurrence.lower()));
  row("concurrence_upper", sig6(r.concurrence.upper));
  if (r.wootters) row("concurrence_wootters", sig6(*r.wootters));
  for (const auto& e : r.criterion2) {
    row("criterion2_" + std::string(to_string(e.source)), std::string(to_string(e.verdict)));
  }
  for (const auto& e : r.criterion3) {
    row("criterion3_" + std::string(to_string(e.source)), std::string(to_string(e.verdict)));
  }
  row("eigen_threshold", std::string(to_string(r.eigen_threshold.verdict)));
  row("overall", std::string(to_string(r.overall)));
}

std::string complex_text(Complex z) {
  std::ostringstream os;
  os << sig6(z.real()) << (z.imag() < 0 ? "-" : "+") << sig6(std::abs(z.imag())) << "i";
  return os.str();
}

}  // namespace

int cmd_detect(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::optional<PreparedState> st;
  try {
    st.emplace(prepare(config));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  DetectionReport report;
  try {
    report = full_report(st->rho, st->config);
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  }

  switch (config.format) {
    case OutputFormat::Json: out << report_to_json(report).dump(2) << "\n"; break;
    case OutputFormat::Csv: write_csv(report, out); break;
    case OutputFormat::Human: write_human(report, out); break;
  }
  return report.overall == Verdict::Entangled ? kOk : kNegative;
}

int cmd_tables(OutputFormat format, bool check, std::ostream& out, std::ostream& err) {
  std::vector<TableCell> cells;
  try {
    cells = regenerate_tables();
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  }

  if (format == OutputFormat::Csv) {
    out << "table,row,a,b,f,quantity,value,expected,verdict,match\n";
    for (const auto& c : cells) {
      out << c.table << "," << c.row << "," << sig6(c.params.a) << "," << sig6(c.params.b) << ","
          << complex_text(c.params.f) << "," << c.quantity << "," << sig6(c.value) << ","
          << sig6(c.expected) << "," << c.verdict << "," << (c.matches() ? "yes" : "no") << "\n";
    }
  } else if (format == OutputFormat::Json) {
    auto arr = ordered_json::array();
    for (const auto& c : cells) {
      arr.push_back({{"table", c.table},
                     {"row", c.row},
                     {"a", c.params.a},
                     {"b", c.params.b},
                     {"f", {c.params.f.real(), c.params.f.imag()}},
                     {"quantity", c.quantity},
                     {"value", c.value},
                     {"expected", c.expected},
                     {"verdict", c.verdict},
                     {"match", c.matches()}});
    }
    out << arr.dump(2) << "\n";
  } else {
    int current = 0;
    int last_row = 0;
    for (const auto& c : cells) {
      if (c.table != current) {
        current = c.table;
        last_row = 0;
        out << (current == 1 ? "" : "\n") << "Table " << std::string(current, 'I') << "\n\n";
        out << "| row | a | b | f | quantity | value | expected | verdict |\n";
        out << "|---|---|---|---|---|---|---|---|\n";
      }
      const bool first = c.row != last_row;
      last_row = c.row;
      out << "| " << (first ? std::to_string(c.row) : "") << " | "
          << (first ? sig6(c.params.a) : "") << " | " << (first ? sig6(c.params.b) : "") << " | "
          << (first ? complex_text(c.params.f) : "") << " | " << c.quantity << " | "
          << sig6(c.value) << " | " << sig6(c.expected) << " | " << c.verdict << " |\n";
    }
  }

  if (!check) return kOk;
  int mismatches = 0;
  for (const auto& c : cells) {
    if (c.matches()) continue;
    ++mismatches;
    err << "mismatch: table " << c.table << " row " << c.row << " " << c.quantity << " = "
        << sig6(c.value) << ", expected " << sig6(c.expected);
    if (!c.verdict.empty()) err << " (" << c.verdict << ")";
    err << "\n";
  }
  err << "check: " << cells.size() - mismatches << "/" << cells.size() << " cells within "
      << kTableTolerance << "\n";
  return mismatches == 0 ? kOk : kNegative;
}

int cmd_figure1(int steps, std::ostream& out, std::ostream& err) {
  if (steps < 2) {
    err << "error: --steps must be at least 2\n";
    return kInputError;
  }
  out << "alpha,lower,upper,lower_overlap,upper_overlap\n";
  try {
    for (int i = 0; i < steps; ++i) {
      const double alpha = (i == steps - 1) ? 1.0 : double(i) / (steps - 1);
      const double lower = 2.0 * family2_r(alpha) * alpha;
      const double upper = (78.0 * alpha * alpha - 78.0 * alpha + 154.0) / 768.0;

      const DensityMatrix rho = build_family2({alpha});
      const double upper_overlap = overlap(rho, spa_pt_qutrit_qubit_operator(rho));
      double lower_overlap = std::numeric_limits<double>::quiet_NaN();
      if (alpha < 1.0) {
        const ApproximatedWitness aw = witness_family_2(alpha);
        const double n = rho.size();
        lower_overlap = (1.0 - aw.p) / (aw.p * n) - overlap(aw.op, rho) / aw.p;
      }
      out << sig6(alpha) << "," << sig6(lower) << "," << sig6(upper) << ","
          << sig6(lower_overlap) << "," << sig6(upper_overlap) << "\n";
    }
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  }
  return kOk;
}

int cmd_properties(std::uint64_t seed, int trials, std::optional<double> q, OutputFormat format,
                   std::ostream& out, std::ostream& err) {
  if (trials < 1) {
    err << "error: --trials must be at least 1\n";
    return kInputError;
  }
  if (q && !(*q >= 0.0 && *q <= 1.0)) {
    err << "error: --q must lie in [0,1]\n";
    return kInputError;
  }

  std::vector<PropertyOutcome> results;
  try {
    results = run_properties(seed, trials, q);
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  }

  int failed = 0;
  for (const auto& r : results) failed += (!r.informational && r.violations > 0);

  auto status = [](const PropertyOutcome& r) -> std::string {
    if (r.informational) return "INFO";
    return r.violations == 0 ? "PASS" : "FAIL";
  };

  if (format == OutputFormat::Json) {
    ordered_json j;
    j["seed"] = seed;
    j["trials"] = trials;
    auto arr = ordered_json::array();
    for (const auto& r : results) {
      arr.push_back({{"name", r.name},
                     {"status", status(r)},
                     {"trials", r.trials},
                     {"violations", r.violations},
                     {"worst", r.worst},
                     {"detail", r.detail}});
    }
    j["properties"] = arr;
    j["passed"] = failed == 0;
    out << j.dump(2) << "\n";
  } else if (format == OutputFormat::Csv) {
    out << "property,status,trials,violations,worst\n";
    for (const auto& r : results) {
      out << r.name << "," << status(r) << "," << r.trials << "," << r.violations << ","
          << sig6(r.worst) << "\n";
    }
  } else {
    out << "seed " << seed << ", " << trials << " trials\n";
    for (const auto& r : results) {
      out << status(r) << "  " << r.name << "  (" << r.violations << "/" << r.trials
          << " violations, worst " << sig6(r.worst) << ")";
      if (!r.detail.empty()) out << "  " << r.detail;
      out << "\n";
    }
  }
  return failed == 0 ? kOk : kNegative;
}

}  // namespace spadetect::cli
