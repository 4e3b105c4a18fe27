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

#include <gtest/gtest.h>

#include <cmath>

#include <Eigen/SVD>

#include "pfsim/matkernel.hpp"
#include "pfsim/rng.hpp"
#include "test_util.hpp"

namespace pfsim {
namespace {

using testing::max_abs;
using testing::random_hermitian;
using testing::random_matrix;
using testing::random_unitary;

TEST(HermitianEig, DiagonalInputIsAlreadyDecomposed) {
  ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  a(0, 0) = 3.0;
  a(1, 1) = 1.0;
  const HermitianEig e = hermitian_eig(a);
  EXPECT_NEAR(e.values(0), 3.0, 1e-14);
  EXPECT_NEAR(e.values(1), 1.0, 1e-14);
  // Columns are determined up to a phase.
  EXPECT_NEAR(std::abs(e.vectors(0, 0)), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(e.vectors(1, 1)), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(e.vectors(0, 1)), 0.0, 1e-14);
}

TEST(HermitianEig, PauliXSpectrum) {
  const HermitianEig e = hermitian_eig(pauli::x());
  EXPECT_NEAR(e.values(0), 1.0, 1e-14);
  EXPECT_NEAR(e.values(1), -1.0, 1e-14);
}

TEST(HermitianEig, ReconstructsRandomHermitian) {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = random_hermitian(rng, 8);
    const HermitianEig e = hermitian_eig(a);
    const ComplexMatrix rebuilt = e.vectors * e.values.cast<Complex>().asDiagonal() *
                                  e.vectors.adjoint();
    EXPECT_LE(max_abs(rebuilt - a), 1e-10);
    EXPECT_LE(max_abs(e.vectors.adjoint() * e.vectors - ComplexMatrix::Identity(8, 8)), 1e-10);
    for (int k = 1; k < 8; ++k) EXPECT_GE(e.values(k - 1), e.values(k));
  }
}

TEST(HermitianEig, RejectsBadInput) {
  EXPECT_THROW(hermitian_eig(ComplexMatrix::Zero(2, 3)), InvalidInput);
  ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  a(0, 1) = 1.0;
  try {
    hermitian_eig(a);
    FAIL() << "expected rejection";
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("not Hermitian"), std::string::npos);
  }
}

TEST(ExpmHermitian, ZeroTimeIsIdentity) {
  Rng rng(3);
  const ComplexMatrix a = random_hermitian(rng, 4);
  EXPECT_LE(max_abs(expm_hermitian(a, 0.0) - ComplexMatrix::Identity(4, 4)), 1e-14);
}

TEST(ExpmHermitian, DiagonalGenerator) {
  const double tau = 0.7;
  const ComplexMatrix u = expm_hermitian(pauli::z(), tau);
  EXPECT_LE(std::abs(u(0, 0) - std::polar(1.0, -tau)), 1e-15);
  EXPECT_LE(std::abs(u(1, 1) - std::polar(1.0, tau)), 1e-15);
  EXPECT_LE(std::abs(u(0, 1)), 1e-15);
}

TEST(ExpmHermitian, MatchesTaylorOracle) {
  Rng rng(5);
  const ComplexMatrix a = random_hermitian(rng, 4);
  EXPECT_LE(max_abs(expm_hermitian(a, 0.3) - testing::taylor_expm(a, 0.3)), 1e-12);
}

TEST(ExpmHermitian, OutputIsUnitary) {
  Rng rng(6);
  for (int dim : {2, 5, 16}) {
    const ComplexMatrix u = expm_hermitian(random_hermitian(rng, dim), 1.3);
    EXPECT_LE(max_abs(u.adjoint() * u - ComplexMatrix::Identity(dim, dim)), 1e-12 * dim);
  }
}

TEST(ExpmHermitian, SemigroupProperty) {
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = random_hermitian(rng, 4);
    const double s = 2.0 * rng.uniform() - 1.0;
    const double t = 2.0 * rng.uniform() - 1.0;
    EXPECT_LE(max_abs(expm_hermitian(a, s) * expm_hermitian(a, t) - expm_hermitian(a, s + t)),
              1e-10);
  }
}

TEST(ExpmHermitian, RejectsNonHermitian) {
  ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  a(1, 0) = 1.0;
  EXPECT_THROW(expm_hermitian(a, 1.0), InvalidInput);
}

TEST(SpectralNorm, TrivialValues) {
  EXPECT_EQ(spectral_norm(ComplexMatrix::Zero(3, 3)), 0.0);
  Rng rng(1);
  EXPECT_NEAR(spectral_norm(random_unitary(rng, 4)), 1.0, 1e-12);
}

TEST(SpectralNorm, RandomVectorOracleApproachesFromBelow) {
  Rng rng(17);
  const ComplexMatrix m = random_matrix(rng, 4, 4);
  const double norm = spectral_norm(m);
  double best = 0.0;
  ComplexVector best_v;
  for (int i = 0; i < 1000; ++i) {
    const ComplexVector v = random_unit_vector(rng, 4);
    const double n = (m * v).norm();
    if (n > best) {
      best = n;
      best_v = v;
    }
  }
  EXPECT_LE(best, norm + 1e-6);
  EXPECT_GE(best, 0.9 * norm);
  // Power iteration from the best sample closes the remaining gap.
  ComplexVector v = best_v;
  for (int it = 0; it < 500; ++it) v = (m.adjoint() * (m * v)).normalized();
  EXPECT_NEAR((m * v).norm(), norm, 1e-6);
}

TEST(TraceNorm, TrivialValues) {
  EXPECT_EQ(trace_norm(ComplexMatrix::Zero(2, 2)), 0.0);
  ComplexMatrix p = ComplexMatrix::Zero(2, 2);
  p(0, 0) = 1.0;
  EXPECT_NEAR(trace_norm(p), 1.0, 1e-15);
}

TEST(TraceNorm, MatchesSqrtOfGramEigenvalues) {
  Rng rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix m = random_matrix(rng, 4, 4);
    const HermitianEig e = hermitian_eig(m.adjoint() * m);
    double oracle = 0.0;
    for (int k = 0; k < 4; ++k) oracle += std::sqrt(std::max(e.values(k), 0.0));
    EXPECT_NEAR(trace_norm(m), oracle, 1e-10);
  }
}

TEST(TraceDistance, PaperConventionHasNoHalf) {
  const DensityMatrix zero = DensityMatrix::pure(ComplexVector::Unit(2, 0));
  const DensityMatrix one = DensityMatrix::pure(ComplexVector::Unit(2, 1));
  EXPECT_NEAR(trace_distance(zero, zero), 0.0, 1e-15);
  EXPECT_NEAR(trace_distance(zero, one), 2.0, 1e-15);
}

TEST(TraceDistance, MatchesSingularValueOracle) {
  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const DensityMatrix rho = random_density(rng, 4);
    const DensityMatrix sigma = random_density(rng, 4);
    Eigen::JacobiSVD<ComplexMatrix> svd(rho.mat() - sigma.mat());
    EXPECT_NEAR(trace_distance(rho, sigma), svd.singularValues().sum(), 1e-10);
  }
}

TEST(TraceDistance, RejectsDimensionMismatch) {
  EXPECT_THROW(trace_distance(DensityMatrix::maximally_mixed(2), DensityMatrix::maximally_mixed(4)),
               InvalidInput);
}

TEST(TraceDistance, MetricAndUnitaryInvariance) {
  Rng rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const DensityMatrix a = random_density(rng, 4);
    const DensityMatrix b = random_density(rng, 4);
    const DensityMatrix c = random_density(rng, 4);
    EXPECT_NEAR(trace_distance(a, b), trace_distance(b, a), 1e-10);
    EXPECT_LE(trace_distance(a, c), trace_distance(a, b) + trace_distance(b, c) + 1e-10);
    const ComplexMatrix u = random_unitary(rng, 4);
    const DensityMatrix ua(u * a.mat() * u.adjoint(), 1e-9);
    const DensityMatrix ub(u * b.mat() * u.adjoint(), 1e-9);
    EXPECT_NEAR(trace_distance(ua, ub), trace_distance(a, b), 1e-10);
  }
}

TEST(Norms, SpectralBelowTraceBelowRankTimesSpectral) {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    // Rank-deficient products exercise the rank factor.
    const int rank = 1 + static_cast<int>(rng.below(4));
    const ComplexMatrix m = random_matrix(rng, 4, rank) * random_matrix(rng, rank, 4);
    const double s = spectral_norm(m);
    const double t = trace_norm(m);
    EXPECT_LE(s, t + 1e-12);
    EXPECT_LE(t, rank * s + 1e-10);
  }
}

TEST(Kron, IdentityAndBlocks) {
  EXPECT_LE(max_abs(kron(pauli::identity(), pauli::identity()) - ComplexMatrix::Identity(4, 4)),
            0.0);
  const ComplexMatrix xi = kron(pauli::x(), pauli::identity());
  // X on the leading factor swaps the two 2x2 blocks.
  EXPECT_LE(max_abs(xi.block(0, 2, 2, 2) - pauli::identity()), 0.0);
  EXPECT_LE(max_abs(xi.block(0, 0, 2, 2)), 0.0);
  const ComplexVector e0 = ComplexVector::Unit(4, 0);
  EXPECT_LE(max_abs(xi * e0 - ComplexVector::Unit(4, 2)), 0.0);
}

TEST(Kron, MixedProductIdentity) {
  Rng rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = random_matrix(rng, 2, 2), b = random_matrix(rng, 2, 2);
    const ComplexMatrix c = random_matrix(rng, 2, 2), d = random_matrix(rng, 2, 2);
    EXPECT_LE(max_abs(kron(a, b) * kron(c, d) - kron(a * c, b * d)), 1e-12);
  }
}

TEST(DensityMatrix, RejectsInvalidStates) {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  EXPECT_THROW(DensityMatrix{m}, InvalidInput);  // trace 2
  m(0, 0) = 1.5;
  m(1, 1) = -0.5;
  EXPECT_THROW(DensityMatrix{m}, InvalidInput);  // negative eigenvalue
  m = ComplexMatrix::Identity(2, 2) / 2.0;
  m(0, 1) = 0.1;
  EXPECT_THROW(DensityMatrix{m}, InvalidInput);  // not Hermitian
  EXPECT_NO_THROW(DensityMatrix::maximally_mixed(3));
}

TEST(MatrixPower, MatchesRepeatedProduct) {
  Rng rng(41);
  const ComplexMatrix u = random_unitary(rng, 3);
  ComplexMatrix direct = ComplexMatrix::Identity(3, 3);
  for (int k = 0; k < 13; ++k) direct = direct * u;
  EXPECT_LE(max_abs(matrix_power(u, 13) - direct), 1e-13);
  EXPECT_LE(max_abs(matrix_power(u, 0) - ComplexMatrix::Identity(3, 3)), 0.0);
}

TEST(Rng, SequenceIsPinned) {
  // mt19937_64 is fixed by the standard: the 10000th output for the default
  // seed is 9981545732273789042.
  std::mt19937_64 ref;
  ref.discard(9999);
  EXPECT_EQ(ref(), 9981545732273789042ULL);
  Rng a(99), b(99);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.normal(), b.normal());
}

}  // namespace
}  // namespace pfsim
