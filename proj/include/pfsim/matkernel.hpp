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

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace pfsim {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Raised for malformed or out-of-contract input (CLI exit code 2).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a verified property fails at runtime (CLI exit code 1).
class AssertionFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace tolerance {
inline constexpr double kHermitianInput = 1e-8;
inline constexpr double kHermitianOutput = 1e-10;
inline constexpr double kDensityTrace = 1e-10;
inline constexpr double kDensityPsd = 1e-10;
/// Envelope the harness is validated on; larger dimensions work but are slow.
inline constexpr int kSupportedDimension = 64;
}  // namespace tolerance

/// Spectral decomposition A = V diag(values) V^dagger, eigenvalues descending.
struct HermitianEig {
  RealVector values;
  ComplexMatrix vectors;
};

/// Density matrix: Hermitian, unit trace, positive semidefinite.
///
/// The invariants are checked at construction with tolerance 1e-10 unless a
/// looser tolerance is passed (channel outputs are accepted at 1e-9).
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix mat,
                         double tol = tolerance::kDensityTrace);

  static DensityMatrix pure(const ComplexVector& psi);
  static DensityMatrix maximally_mixed(int dim);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const ComplexMatrix& mat() const { return mat_; }

 private:
  ComplexMatrix mat_;
};

/// Largest entrywise |A - A^dagger|, used for hermiticity checks.
double hermiticity_defect(const ComplexMatrix& a);

HermitianEig hermitian_eig(const ComplexMatrix& a);

/// Returns exp(-i * a * tau) for Hermitian `a`, computed spectrally.
ComplexMatrix expm_hermitian(const ComplexMatrix& a, double tau);

double spectral_norm(const ComplexMatrix& m);

/// Sum of singular values.
double trace_norm(const ComplexMatrix& m);

/// Tr|rho - sigma|, with no factor 1/2: orthogonal pure states are at
/// distance 2, not 1.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// A*B - B*A.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Integer matrix power by repeated squaring; n = 0 gives the identity.
ComplexMatrix matrix_power(const ComplexMatrix& m, long long n);

namespace pauli {
ComplexMatrix identity();
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

}  // namespace pfsim
