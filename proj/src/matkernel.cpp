// Copyright 2026 The pfsim Authors
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

#include "pfsim/matkernel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace pfsim {

namespace {

void require_square(const ComplexMatrix& a, const char* op) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    std::ostringstream msg;
    msg << op << ": expected a non-empty square matrix, got " << a.rows()
        << "x" << a.cols();
    throw InvalidInput(msg.str());
  }
}

void require_hermitian(const ComplexMatrix& a, const char* op) {
  require_square(a, op);
  const double defect = hermiticity_defect(a);
  if (defect > tolerance::kHermitianInput) {
    std::ostringstream msg;
    msg << op << ": input is not Hermitian (max |A - A^dagger| = " << defect
        << " > " << tolerance::kHermitianInput << ")";
    throw InvalidInput(msg.str());
  }
}

RealVector singular_values(const ComplexMatrix& m) {
  if (m.size() == 0) return RealVector();
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues();
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix mat, double tol)
    : mat_(std::move(mat)) {
  require_square(mat_, "DensityMatrix");
  const double herm = hermiticity_defect(mat_);
  if (herm > tol) {
    std::ostringstream msg;
    msg << "DensityMatrix: not Hermitian (defect " << herm << ")";
    throw InvalidInput(msg.str());
  }
  const double trace_err = std::abs(mat_.trace() - Complex(1.0, 0.0));
  if (trace_err > tol) {
    std::ostringstream msg;
    msg << "DensityMatrix: trace differs from 1 by " << trace_err;
    throw InvalidInput(msg.str());
  }
  // Symmetrize before the PSD check so the eigensolver sees exact Hermitian data.
  const ComplexMatrix sym = 0.5 * (mat_ + mat_.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(sym, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -tol) {
    std::ostringstream msg;
    msg << "DensityMatrix: not positive semidefinite (min eigenvalue "
        << min_eig << ")";
    throw InvalidInput(msg.str());
  }
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi) {
  const double n = psi.norm();
  if (n == 0.0) throw InvalidInput("DensityMatrix::pure: zero vector");
  const ComplexVector unit = psi / n;
  return DensityMatrix(unit * unit.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  if (dim <= 0) throw InvalidInput("DensityMatrix::maximally_mixed: dim <= 0");
  return DensityMatrix(ComplexMatrix::Identity(dim, dim) /
                       static_cast<double>(dim));
}

double hermiticity_defect(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

HermitianEig hermitian_eig(const ComplexMatrix& a) {
  require_hermitian(a, "hermitian_eig");
  const ComplexMatrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(sym);
  if (es.info() != Eigen::Success) {
    throw AssertionFailure("hermitian_eig: eigensolver did not converge");
  }
  // Eigen returns ascending order; flip to descending.
  const Eigen::Index n = a.rows();
  HermitianEig out{RealVector(n), ComplexMatrix(n, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = es.eigenvalues()(n - 1 - k);
    const ComplexVector v = es.eigenvectors().col(n - 1 - k);
    out.vectors.col(k) = v / v.norm();
  }
  return out;
}

ComplexMatrix expm_hermitian(const ComplexMatrix& a, double tau) {
  const HermitianEig eig = hermitian_eig(a);
  const Eigen::Index n = a.rows();
  ComplexVector phases(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    phases(k) = std::polar(1.0, -eig.values(k) * tau);
  }
  return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

double spectral_norm(const ComplexMatrix& m) {
  const RealVector s = singular_values(m);
  return s.size() == 0 ? 0.0 : s.maxCoeff();
}

double trace_norm(const ComplexMatrix& m) {
  const RealVector s = singular_values(m);
  return s.size() == 0 ? 0.0 : s.sum();
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    std::ostringstream msg;
    msg << "trace_distance: dimension mismatch (" << rho.dim() << " vs "
        << sigma.dim() << ")";
    throw InvalidInput(msg.str());
  }
  const ComplexMatrix diff = rho.mat() - sigma.mat();
  const ComplexMatrix sym = 0.5 * (diff + diff.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(sym, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

ComplexMatrix matrix_power(const ComplexMatrix& m, long long n) {
  require_square(m, "matrix_power");
  if (n < 0) throw InvalidInput("matrix_power: negative exponent");
  ComplexMatrix result = ComplexMatrix::Identity(m.rows(), m.cols());
  ComplexMatrix base = m;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

namespace pauli {
ComplexMatrix identity() { return ComplexMatrix::Identity(2, 2); }
ComplexMatrix x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}
ComplexMatrix y() {
  ComplexMatrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}
ComplexMatrix z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}
}  // namespace pauli

}  // namespace pfsim
