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

#include "spadetect/errors.hpp"

namespace spadetect {

std::string_view to_string(Violation v) {
  switch (v) {
    case Violation::NotHermitian:
      return "NotHermitian";
    case Violation::TraceNotOne:
      return "TraceNotOne";
    case Violation::NotPSD:
      return "NotPSD";
    case Violation::NotNormalized:
      return "NotNormalized";
    case Violation::OutOfRange:
      return "OutOfRange";
  }
  return "Unknown";
}

ValidationError::ValidationError(Violation kind, double worst,
                                 const std::string& detail)
    : Error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      worst_(worst) {}

}  // namespace spadetect
