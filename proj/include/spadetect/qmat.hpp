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

// Dense complex-matrix layer: bipartite indexing, partial transposition,
// Hermitian spectra and density-matrix validation. Matrices here are at most
// 9x9, so everything is dense and eager.

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "spadetect/errors.hpp"

namespace spadetect {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

namespace tol {
inline constexpr double kHermitian = 1e-10;
inline constexpr double kTrace = 1e-10;
inline constexpr double kPsd = 1e-9;
inline constexpr double kEig = 1e-10;
}  // namespace tol

/// Subsystem dimensions of a d1 x d2 system. The product ket |i>_A|j>_B
/// sits at row i*d2 + j.
class BipartiteDims {
 public:
  BipartiteDims(int d1, int d2);

  int d1() const noexcept { return d1_; }
  int d2() const noexcept { return d2_; }
  int total() const noexcept { return d1_ * d2_; }
  int index(int i, int j) const noexcept { return i * d2_ + j; }

  friend bool operator==(const BipartiteDims&, const BipartiteDims&) = default;

 private:
  int d1_;
  int d2_;
};

/// Hermitian n x n operator on a bipartite space. Trace and sign are free.
class HermitianOperator {
 public:
  /// Throws ValidationError(NotHermitian) when any |m_ij - conj(m_ji)| exceeds
  /// tol::kHermitian, DimensionError when the shape is not n x n.
  HermitianOperator(BipartiteDims dims, CMatrix mat);

  const BipartiteDims& dims() const noexcept { return dims_; }
  const CMatrix& matrix() const noexcept { return mat_; }
  int size() const noexcept { return dims_.total(); }
  double trace() const { return mat_.trace().real(); }

 protected:
  struct Unchecked {};
  HermitianOperator(Unchecked, BipartiteDims dims, CMatrix mat)
      : dims_(dims), mat_(std::move(mat)) {}

 private:
  BipartiteDims dims_;
  CMatrix mat_;
};

/// Hermitian, unit-trace, positive semi-definite operator. Obtain one through
/// validate_density().
class DensityMatrix : public HermitianOperator {
 private:
  DensityMatrix(BipartiteDims dims, CMatrix mat)
      : HermitianOperator(Unchecked{}, dims, std::move(mat)) {}

  friend DensityMatrix validate_density(const CMatrix& mat, BipartiteDims dims);
};

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  CMatrix vectors;             // column k belongs to values[k]
};

/// Kronecker product; block (i,k) of the result is a(i,k) * b.
CMatrix tensor(const CMatrix& a, const CMatrix& b);

/// Transpose on subsystem B: entry ((i,j),(k,l)) moves to ((i,l),(k,j)).
CMatrix partial_transpose_B(const CMatrix& mat, BipartiteDims dims);
HermitianOperator partial_transpose_B(const HermitianOperator& op);

/// Ascending eigenvalues. The CMatrix overload rejects non-Hermitian input.
std::vector<double> eig_hermitian(const HermitianOperator& op);
std::vector<double> eig_hermitian(const CMatrix& mat);
EigenDecomposition eigh(const HermitianOperator& op);
double lambda_min(const HermitianOperator& op);
double lambda_max(const HermitianOperator& op);

/// Tr(a b). Both arguments Hermitian, so the result is real.
double overlap(const HermitianOperator& a, const HermitianOperator& b);

/// Checks Hermiticity, unit trace and positivity in that order and throws a
/// ValidationError naming the first violated condition.
DensityMatrix validate_density(const CMatrix& mat, BipartiteDims dims);

/// Largest |m_ij - conj(m_ji)|.
double hermiticity_defect(const CMatrix& mat);

CMatrix identity(int n);
DensityMatrix maximally_mixed(BipartiteDims dims);
/// |psi><psi| for a normalized vector; throws ValidationError(NotNormalized).
DensityMatrix pure_density(const CVector& psi, BipartiteDims dims);
/// Hermitian part (m + m^dagger)/2, used to strip rounding noise.
CMatrix hermitian_part(const CMatrix& mat);

}  // namespace spadetect
