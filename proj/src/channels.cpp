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

#include "pfsim/channels.hpp"

#include <cmath>
#include <sstream>

namespace pfsim {

namespace {

int superop_dim(const ComplexMatrix& mat) {
  if (mat.rows() != mat.cols() || mat.rows() == 0)
    throw InvalidInput("Superoperator: matrix must be square and non-empty");
  const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(mat.rows()))));
  if (static_cast<Eigen::Index>(d) * d != mat.rows())
    throw InvalidInput("Superoperator: side length is not a perfect square");
  return d;
}

void require_dim(int expected, int got, const char* op) {
  if (expected != got) {
    std::ostringstream msg;
    msg << op << ": dimension mismatch (" << expected << " vs " << got << ")";
    throw InvalidInput(msg.str());
  }
}

}  // namespace

Superoperator::Superoperator(ComplexMatrix mat)
    : dim_(superop_dim(mat)), mat_(std::move(mat)) {}

Superoperator Superoperator::identity(int dim) {
  return Superoperator(ComplexMatrix::Identity(dim * dim, dim * dim));
}

Superoperator Superoperator::conjugation(const ComplexMatrix& u) {
  return Superoperator(kron(u.conjugate(), u));
}

Superoperator Superoperator::after(const Superoperator& other) const {
  require_dim(dim_, other.dim_, "Superoperator::after");
  return Superoperator(mat_ * other.mat_);
}

ComplexVector vectorize(const ComplexMatrix& rho) {
  // Eigen storage is column-major, so the raw buffer is already vec(rho).
  return Eigen::Map<const ComplexVector>(rho.data(), rho.size());
}

ComplexMatrix unvectorize(const ComplexVector& v, int dim) {
  if (v.size() != static_cast<Eigen::Index>(dim) * dim)
    throw InvalidInput("unvectorize: length is not dim^2");
  return Eigen::Map<const ComplexMatrix>(v.data(), dim, dim);
}

ComplexMatrix exact_evolution(const TermSet& ts, double t) {
  return expm_hermitian(total(ts), t);
}

Superoperator mixture_superoperator(const TermSet& ts, const UnitaryMixture& mix) {
  const int d = ts.dim();
  ComplexMatrix acc = ComplexMatrix::Zero(d * d, d * d);
  for (const auto& e : mix.entries()) {
    const ComplexMatrix u = word_unitary(ts, e.word);
    acc += e.probability * kron(u.conjugate(), u);
  }
  return Superoperator(std::move(acc));
}

Superoperator channel_power(const Superoperator& s, long long times) {
  if (times < 0) throw InvalidInput("channel_power: negative repetition count");
  return Superoperator(matrix_power(s.mat(), times));
}

DensityMatrix apply_channel(const Superoperator& s, const DensityMatrix& rho) {
  require_dim(s.dim(), rho.dim(), "apply_channel");
  return DensityMatrix(unvectorize(s.mat() * vectorize(rho.mat()), rho.dim()),
                       1e-9);
}

DensityMatrix conjugate(const ComplexMatrix& u, const DensityMatrix& rho) {
  require_dim(static_cast<int>(u.rows()), rho.dim(), "conjugate");
  return DensityMatrix(u * rho.mat() * u.adjoint(), 1e-9);
}

ComplexMatrix mean_unitary(const TermSet& ts, const UnitaryMixture& mix) {
  ComplexMatrix acc = ComplexMatrix::Zero(ts.dim(), ts.dim());
  for (const auto& e : mix.entries()) acc += e.probability * word_unitary(ts, e.word);
  return acc;
}

double expected_sq_deviation(const TermSet& ts, const UnitaryMixture& mix,
                             const ComplexMatrix& u0) {
  require_dim(ts.dim(), static_cast<int>(u0.rows()), "expected_sq_deviation");
  double acc = 0.0;
  for (const auto& e : mix.entries()) {
    const double dev = spectral_norm(word_unitary(ts, e.word) - u0);
    acc += e.probability * dev * dev;
  }
  return acc;
}

BoundReport lemma1_report(const TermSet& ts, const UnitaryMixture& mix,
                          int stages, double t, const DensityMatrix& rho0,
                          const DensityMatrix& psi0) {
  if (stages < 1) throw InvalidInput("lemma1_report: stages must be >= 1");
  require_dim(ts.dim(), rho0.dim(), "lemma1_report");
  require_dim(ts.dim(), psi0.dim(), "lemma1_report");
  const double purity = (psi0.mat() * psi0.mat()).trace().real();
  if (std::abs(purity - 1.0) > 1e-9)
    throw InvalidInput("lemma1_report: psi0 must be a pure state");

  const ComplexMatrix u0 = exact_evolution(ts, t);
  const UnitaryMixture whole = stages == 1 ? mix : mixture_power(mix, stages);

  BoundReport r;
  r.mean_dev = spectral_norm(mean_unitary(ts, whole) - u0);
  r.sq_dev = expected_sq_deviation(ts, whole, u0);
  r.input_dist = trace_distance(rho0, psi0);
  r.bound = r.input_dist + 2.0 * r.mean_dev + r.sq_dev;

  const Superoperator channel =
      channel_power(mixture_superoperator(ts, mix), stages);
  const DensityMatrix out = apply_channel(channel, rho0);
  const DensityMatrix target = conjugate(u0, psi0);
  r.observed_raw = trace_distance(out, target) - r.input_dist;
  r.observed = std::max(r.observed_raw, 0.0);
  r.info = {ts.dim(), ts.size(), t / stages, stages, 0};
  return r;
}

nlohmann::json to_json(const BoundReport& r) {
  return {{"mean_dev", r.mean_dev},
          {"sq_dev", r.sq_dev},
          {"input_dist", r.input_dist},
          {"bound", r.bound},
          {"observed", r.observed},
          {"observed_raw", r.observed_raw},
          {"d", r.info.dim},
          {"m", r.info.num_terms},
          {"dt", r.info.dt},
          {"K", r.info.stages},
          {"seed", r.info.seed}};
}

}  // namespace pfsim
