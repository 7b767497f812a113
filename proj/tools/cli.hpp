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

// Command implementations behind the spa_detect executable. Each command
// writes to the supplied streams and returns the process exit status.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace spadetect::cli {

enum ExitStatus : int {
  kOk = 0,            // detect: state detected entangled
  kInputError = 1,    // bad flags, unreadable or invalid input
  kNumericalFailure = 2,
  kNegative = 3,      // detect: not detected; check/property mismatch
};

enum class OutputFormat { Human, Json, Csv };

struct RunConfig {
  std::optional<std::string> file;
  std::optional<std::string> family;  // "rho1" | "rho2"
  std::optional<double> a;
  std::optional<double> b;
  std::optional<std::string> f;
  std::optional<double> alpha;
  std::optional<std::string> witness_file;
  std::optional<double> q;
  OutputFormat format = OutputFormat::Human;
  std::uint64_t seed = 42;
};

inline constexpr double kZeroSnap = 1e-12;

/// Formats with six significant digits in fixed notation ("0.0458967").
/// Magnitudes below kZeroSnap print as zero.
std::string sig6(double x);

int cmd_detect(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_tables(OutputFormat format, bool check, std::ostream& out, std::ostream& err);
int cmd_figure1(int steps, std::ostream& out, std::ostream& err);
int cmd_properties(std::uint64_t seed, int trials, std::optional<double> q,
                   OutputFormat format, std::ostream& out, std::ostream& err);

}  // namespace spadetect::cli
