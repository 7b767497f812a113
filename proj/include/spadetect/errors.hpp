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

#include <stdexcept>
#include <string>
#include <string_view>

namespace spadetect {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes or subsystem dimensions that do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Which admissibility condition a matrix or parameter set violated.
enum class Violation {
  NotHermitian,
  TraceNotOne,
  NotPSD,
  NotNormalized,
  OutOfRange,
};

std::string_view to_string(Violation v);

/// A matrix or parameter failed validation. `worst()` carries the offending
/// quantity: the largest Hermiticity defect, the trace deviation, the most
/// negative eigenvalue, and so on.
class ValidationError : public Error {
 public:
  ValidationError(Violation kind, double worst, const std::string& detail);

  Violation kind() const noexcept { return kind_; }
  double worst() const noexcept { return worst_; }

 private:
  Violation kind_;
  double worst_;
};

/// A witness whose defining direction is undefined (f = 0, alpha = 1).
class DegenerateWitnessError : public Error {
 public:
  using Error::Error;
};

/// Malformed file payload or command-line literal.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace spadetect
