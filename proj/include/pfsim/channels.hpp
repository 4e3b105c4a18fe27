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

#include <cstdint>

#include <json.hpp>

#include "pfsim/hamiltonians.hpp"
#include "pfsim/schedules.hpp"

namespace pfsim {

/// d^2 x d^2 matrix acting on column-major vectorized density matrices:
/// vec(U rho U^dagger) = (conj(U) kron U) vec(rho).
class Superoperator {
 public:
  explicit Superoperator(ComplexMatrix mat);

  static Superoperator identity(int dim);
  static Superoperator conjugation(const ComplexMatrix& u);

  int dim() const { return dim_; }
  const ComplexMatrix& mat() const { return mat_; }

  /// Composition: (this after other).
  Superoperator after(const Superoperator& other) const;

 private:
  int dim_ = 0;
  ComplexMatrix mat_;
};

ComplexVector vectorize(const ComplexMatrix& rho);
ComplexMatrix unvectorize(const ComplexVector& v, int dim);

/// exp(-i H t) for H = total(ts).
ComplexMatrix exact_evolution(const TermSet& ts, double t);

/// sum_w p_w conj(U_w) kron U_w.
Superoperator mixture_superoperator(const TermSet& ts, const UnitaryMixture& mix);

/// `s` composed `times` times; 0 gives the identity channel.
Superoperator channel_power(const Superoperator& s, long long times);

/// Channel outputs are accepted at tolerance 1e-9.
DensityMatrix apply_channel(const Superoperator& s, const DensityMatrix& rho);

/// U rho U^dagger.
DensityMatrix conjugate(const ComplexMatrix& u, const DensityMatrix& rho);

/// sum_w p_w U_w; generally not unitary.
ComplexMatrix mean_unitary(const TermSet& ts, const UnitaryMixture& mix);

/// sum_w p_w ||U_w - u0||^2 in the spectral norm.
double expected_sq_deviation(const TermSet& ts, const UnitaryMixture& mix,
                             const ComplexMatrix& u0);

/// Instance metadata carried alongside a bound report.
struct InstanceInfo {
  int dim = 0;
  int num_terms = 0;
  double dt = 0.0;
  long long stages = 0;
  std::uint64_t seed = 0;
};

/// Terms of the mixed-state trace-distance bound
///   D(rho0, psi0) + 2 ||E(U_w) - U0|| + E ||U_w - U0||^2
/// together with the observed increase of the trace distance.
struct BoundReport {
  double mean_dev = 0.0;
  double sq_dev = 0.0;
  double input_dist = 0.0;
  double bound = 0.0;
  /// max(observed_raw, 0).
  double observed = 0.0;
  /// May be microscopically negative from rounding, or genuinely negative for
  /// mixed inputs where the channel contracts the initial discrepancy.
  double observed_raw = 0.0;
  InstanceInfo info;

  bool dominated(double slack = 1e-8) const { return observed <= bound + slack; }
};

/// Evaluates the bound for `stages` independent repetitions of the one-stage
/// mixture `mix` simulating U0 = exact_evolution(ts, t). For stages > 1 the
/// bound terms come from the enumerated product mixture (at most 4096 words).
/// `psi0` must be pure.
BoundReport lemma1_report(const TermSet& ts, const UnitaryMixture& mix,
                          int stages, double t, const DensityMatrix& rho0,
                          const DensityMatrix& psi0);

nlohmann::json to_json(const BoundReport& r);

}  // namespace pfsim
