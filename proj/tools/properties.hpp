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
#include <optional>
#include <string>
#include <vector>

namespace spadetect::cli {

struct PropertyOutcome {
  std::string name;
  int trials = 0;
  int violations = 0;
  double worst = 0.0;  // largest violation margin, or the reported statistic
  bool informational = false;
  std::string detail;
};

/// Seeded randomized checks over d1, d2 in {2, 3}. A q override replaces
/// q_star in the generic-map positivity check.
std::vector<PropertyOutcome> run_properties(std::uint64_t seed, int trials,
                                            std::optional<double> q_override);

}  // namespace spadetect::cli
