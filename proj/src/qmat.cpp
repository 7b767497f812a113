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

#include "spadetect/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace spadetect {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

void require_square(const CMatrix& mat, int n) {
  if (mat.rows() != n || mat.cols() != n) {
    std::ostringstream os;
    os << "expected " << n << "x" << n << " matrix, got " << mat.rows() << "x"
       << mat.cols();
    throw DimensionError(os.str());
  }
}

void require_finite(const CMatrix& mat) {
  if (!mat.allFinite()) throw ValidationError(Violation::OutOfRange, NAN, "matrix has non-finite entries");
}

}  // namespace

BipartiteDims::BipartiteDims(int d1, int d2) : d1_(d1), d2_(d2) {
  if (d1 < 2 || d2 < 2) {
    throw DimensionError("subsystem dimensions must be >= 2, got (" +
                         std::to_string(d1) + "," + std::to_string(d2) + ")");
  }
}

double hermiticity_defect(const CMatrix& mat) {
  if (mat.rows() != mat.cols()) return INFINITY;
  return (mat - mat.adjoint()).cwiseAbs().maxCoeff();
}

HermitianOperator::HermitianOperator(BipartiteDims dims, CMatrix mat)
    : dims_(dims), mat_(std::move(mat)) {
  require_square(mat_, dims_.total());
  require_finite(mat_);
  const double defect = hermiticity_defect(mat_);
  if (defect > tol::kHermitian) {
    throw ValidationError(Violation::NotHermitian, defect,
                          "largest |m_ij - conj(m_ji)| = " + fmt(defect));
  }
}

CMatrix tensor(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      out.block(i * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(i, k) * b;
    }
  }
  return out;
}

CMatrix partial_transpose_B(const CMatrix& mat, BipartiteDims dims) {
  require_square(mat, dims.total());
  CMatrix out(mat.rows(), mat.cols());
  for (int i = 0; i < dims.d1(); ++i)
    for (int j = 0; j < dims.d2(); ++j)
      for (int k = 0; k < dims.d1(); ++k)
        for (int l = 0; l < dims.d2(); ++l)
          out(dims.index(i, j), dims.index(k, l)) =
              mat(dims.index(i, l), dims.index(k, j));
  return out;
}

HermitianOperator partial_transpose_B(const HermitianOperator& op) {
  return HermitianOperator(op.dims(), partial_transpose_B(op.matrix(), op.dims()));
}

EigenDecomposition eigh(const HermitianOperator& op) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian_part(op.matrix()));
  if (solver.info() != Eigen::Success) {
    throw Error("Hermitian eigensolver did not converge");
  }
  EigenDecomposition out;
  const auto& ev = solver.eigenvalues();
  out.values.assign(ev.data(), ev.data() + ev.size());
  out.vectors = solver.eigenvectors();
  return out;
}

std::vector<double> eig_hermitian(const HermitianOperator& op) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian_part(op.matrix()),
                                                Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error("Hermitian eigensolver did not converge");
  }
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::vector<double> eig_hermitian(const CMatrix& mat) {
  if (mat.rows() != mat.cols()) throw DimensionError("eigenvalues need a square matrix");
  const double defect = hermiticity_defect(mat);
  if (defect > tol::kHermitian) {
    throw ValidationError(Violation::NotHermitian, defect,
                          "largest |m_ij - conj(m_ji)| = " + fmt(defect));
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian_part(mat),
                                                Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double lambda_min(const HermitianOperator& op) { return eig_hermitian(op).front(); }
double lambda_max(const HermitianOperator& op) { return eig_hermitian(op).back(); }

double overlap(const HermitianOperator& a, const HermitianOperator& b) {
  if (!(a.dims() == b.dims())) {
    throw DimensionError("overlap of operators with different dimensions");
  }
  // Tr(AB) = sum_ij A_ij B_ji
  return (a.matrix().cwiseProduct(b.matrix().transpose())).sum().real();
}

DensityMatrix validate_density(const CMatrix& mat, BipartiteDims dims) {
  require_square(mat, dims.total());
  require_finite(mat);

  const double defect = hermiticity_defect(mat);
  if (defect > tol::kHermitian) {
    throw ValidationError(Violation::NotHermitian, defect,
                          "largest |m_ij - conj(m_ji)| = " + fmt(defect));
  }
  const double tr_dev = mat.trace().real() - 1.0;
  if (std::abs(tr_dev) > tol::kTrace) {
    throw ValidationError(Violation::TraceNotOne, tr_dev,
                          "trace deviates from 1 by " + fmt(tr_dev));
  }
  CMatrix herm = hermitian_part(mat);
  const double min_eig = eig_hermitian(herm).front();
  if (min_eig < -tol::kPsd) {
    throw ValidationError(Violation::NotPSD, min_eig,
                          "minimum eigenvalue " + fmt(min_eig) + " below -" +
                              fmt(tol::kPsd));
  }
  return DensityMatrix(dims, std::move(herm));
}

CMatrix identity(int n) { return CMatrix::Identity(n, n); }

DensityMatrix maximally_mixed(BipartiteDims dims) {
  return validate_density(identity(dims.total()) / double(dims.total()), dims);
}

DensityMatrix pure_density(const CVector& psi, BipartiteDims dims) {
  if (psi.size() != dims.total()) {
    throw DimensionError("state vector length " + std::to_string(psi.size()) +
                         " does not match dimension " + std::to_string(dims.total()));
  }
  const double norm_dev = psi.squaredNorm() - 1.0;
  if (std::abs(norm_dev) > tol::kTrace) {
    throw ValidationError(Violation::NotNormalized, norm_dev,
                          "squared norm deviates from 1 by " + fmt(norm_dev));
  }
  return validate_density(psi * psi.adjoint(), dims);
}

CMatrix hermitian_part(const CMatrix& mat) {
  return (mat + mat.adjoint()) / 2.0;
}

}  // namespace spadetect
