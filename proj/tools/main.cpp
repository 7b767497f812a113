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

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cli.hpp"

namespace {

using spadetect::cli::OutputFormat;

OutputFormat pick_format(bool json, bool csv) {
  if (json) return OutputFormat::Json;
  if (csv) return OutputFormat::Csv;
  return OutputFormat::Human;
}

}  // namespace

int main(int argc, char** argv) {
  namespace sc = spadetect::cli;

  CLI::App app{"Entanglement detection from the structural physical approximation of the "
               "partial transpose"};
  app.name("spa_detect");
  app.require_subcommand(1);

  sc::RunConfig run;
  bool json = false;
  bool csv = false;
  bool check = false;
  int steps = 101;
  int trials = 1000;
  std::uint64_t seed = 42;
  std::optional<double> q;

  auto add_format = [&](CLI::App* cmd) {
    auto* j = cmd->add_flag("--json", json, "JSON output");
    auto* c = cmd->add_flag("--csv", csv, "CSV output");
    j->excludes(c);
  };

  auto* detect = app.add_subcommand("detect", "Run every criterion on one state");
  detect->add_option("--file", run.file, "State file (matrix or family shortcut)")
      ->check(CLI::ExistingFile);
  detect->add_option("--family", run.family, "rho1 or rho2")
      ->check(CLI::IsMember({"rho1", "rho2"}));
  detect->add_option("--a", run.a, "rho1 diagonal weight a");
  detect->add_option("--b", run.b, "rho1 diagonal weight b");
  detect->add_option("--f", run.f, "rho1 coherence, e.g. 0.4+0.1i");
  detect->add_option("--alpha", run.alpha, "rho2 mixing weight");
  detect->add_option("--witness", run.witness_file, "Pure-state file defining the witness")
      ->check(CLI::ExistingFile);
  detect->add_option("--q", run.q, "Use the generic map at this q");
  add_format(detect);

  auto* tables = app.add_subcommand("tables", "Regenerate the two-qubit reference tables");
  tables->add_flag("--check", check, "Compare against the reference values");
  add_format(tables);

  auto* figure = app.add_subcommand("figure1", "Concurrence bounds for rho2 as CSV");
  figure->add_option("--steps", steps, "Grid points on [0,1]")->capture_default_str();

  auto* props = app.add_subcommand("properties", "Randomized property checks");
  props->add_option("--seed", seed, "RNG seed")->envname("SPA_DETECT_SEED")->capture_default_str();
  props->add_option("--trials", trials, "Number of random states")->capture_default_str();
  props->add_option("--q", q, "Override q in the generic-map positivity check");
  add_format(props);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? sc::kOk : sc::kInputError;
  }

  const OutputFormat format = pick_format(json, csv);
  if (*detect) {
    run.format = format;
    return sc::cmd_detect(run, std::cout, std::cerr);
  }
  if (*tables) return sc::cmd_tables(format, check, std::cout, std::cerr);
  if (*figure) return sc::cmd_figure1(steps, std::cout, std::cerr);
  return sc::cmd_properties(seed, trials, q, format, std::cout, std::cerr);
}
