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
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pfsim/channels.hpp"
#include "pfsim/hamiltonians.hpp"

namespace pfsim {

enum class Scheme { kTrotter, kStrang, kAlg1, kAlg2 };

std::string to_string(Scheme s);
Scheme scheme_from_string(const std::string& name);
inline constexpr Scheme kAllSchemes[] = {Scheme::kTrotter, Scheme::kStrang,
                                         Scheme::kAlg1, Scheme::kAlg2};

/// Which TermSet a run uses. A spin chain when n_qubits is set, a JSON file
/// when termset_path is set, otherwise a seeded random ensemble.
struct InstanceSpec {
  std::optional<int> n_qubits;
  double jx = 1.0;
  double jz = 1.0;
  double hx = 1.0;
  std::string termset_path;
  int dim = 4;
  int num_terms = 2;
  double norm_bound = 1.0;
  std::uint64_t seed = 1;

  TermSet build() const;
  nlohmann::json describe() const;
};

/// Slope-verdict knobs.
struct FitOptions {
  double r2_min = 0.98;
  /// Refit without the two smallest-K points when the largest-K residual of
  /// the full fit exceeds bend_residual (natural-log units).
  bool drop_preasymptotic = true;
  double bend_residual = 0.05;
};

struct RunConfig {
  Scheme scheme = Scheme::kTrotter;
  InstanceSpec instance;
  double t = 1.0;
  std::vector<long long> k_values;
  std::uint64_t panel_seed = 2026;
  int panel_size = 16;
  std::string output_path;
  FitOptions fit;
};

/// Parses and validates a run configuration (InvalidInput on bad fields).
RunConfig run_config_from_json(const nlohmann::json& j);

/// Seeded pure input states used by every error measurement.
std::vector<DensityMatrix> state_panel(int dim, int size, std::uint64_t seed);

/// Exponential count of one scheme at K segments (Strang counted merged).
long long exponential_count(Scheme s, int num_terms, long long segments);

/// Measures the simulation error of one scheme on one instance at total time
/// t: the maximum trace distance to exact evolution over the state panel.
/// Randomized schemes are evaluated exactly as channels (m*K memoryless
/// stages for alg1, K permutation stages for alg2).
class ErrorMeter {
 public:
  ErrorMeter(const TermSet& ts, double t, std::vector<DensityMatrix> panel);

  double error(Scheme s, long long segments) const;

 private:
  TermSet ts_;
  double t_;
  ComplexMatrix u0_;
  std::vector<DensityMatrix> panel_;
  std::vector<DensityMatrix> targets_;
};

struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

/// Least squares through (log x, log y); needs >= 3 points, all positive.
LogLogFit fit_loglog(std::span<const std::pair<double, double>> points);

struct SweepPoint {
  long long k = 0;
  long long exponentials = 0;
  double error = 0.0;
};

struct SweepResult {
  Scheme scheme = Scheme::kTrotter;
  nlohmann::json instance;
  int dim = 0;
  int num_terms = 0;
  double t = 0.0;
  std::vector<SweepPoint> points;
  bool commuting = false;
  bool fitted = false;
  LogLogFit fit;
  bool dropped_preasymptotic = false;
  /// fitted and r2 >= r2_min.
  bool verdict = false;
  /// No error grows when K doubles (1e-12 slack).
  bool monotone = true;
};

SweepResult sweep_error_vs_K(const RunConfig& cfg);

nlohmann::json to_json(const SweepResult& r);
/// "K,N,error" with '.' decimals and shortest round-trip formatting.
std::string points_csv(const SweepResult& r);

struct CampaignReport {
  int instances = 0;
  int violations = 0;
  int controls = 0;
  int mixed_inputs = 0;
  double max_control_bound = 0.0;
  /// Largest observed / bound.
  double max_bound_ratio = 0.0;
  /// Best tightness witnesses: observed / mean_dev and observed / sq_dev.
  double best_mean_ratio = 0.0;
  double best_sq_ratio = 0.0;
  double worst_slack = 0.0;
  nlohmann::json first_violation;
  double seconds = 0.0;
};

/// Trace-distance bound dominance over random (TermSet, stage mixture, dt, rho0) draws with
/// d <= 8, m <= 3, dt <= 0.2; every 8th instance is an exact control.
CampaignReport lemma1_campaign(int n_instances, std::uint64_t seed);
nlohmann::json to_json(const CampaignReport& r);

struct ScalingConfig {
  InstanceSpec instance;
  std::vector<Scheme> schemes{std::begin(kAllSchemes), std::end(kAllSchemes)};
  std::vector<double> t_values{0.5, 1.0, 2.0, 4.0};
  double eps_at_fixed_t_sweep = 1e-4;
  double t_fixed = 1.0;
  std::vector<double> eps_values{1e-3, 1e-4, 1e-5};
  long long k_cap = 1LL << 24;
  std::uint64_t panel_seed = 2026;
  int panel_size = 16;
  double t_exponent_tol = 0.2;
  double eps_exponent_tol = 0.1;
};

ScalingConfig scaling_config_from_json(const nlohmann::json& j);

/// One bisection: the smallest integer K with error <= eps, plus the
/// log-log interpolated crossing between the bracketing integers.
struct BisectionCell {
  double t = 0.0;
  double eps = 0.0;
  bool reached = false;
  long long k_min = 0;
  double k_star = 0.0;
  long long exponentials = 0;
  double error_at_k_min = 0.0;
};

BisectionCell bisect_min_segments(const ErrorMeter& meter, Scheme s, double t,
                                  double eps, int num_terms, long long k_cap);

struct SchemeScaling {
  Scheme scheme = Scheme::kTrotter;
  std::vector<BisectionCell> t_cells;
  std::vector<BisectionCell> eps_cells;
  double t_exponent = 0.0;
  double eps_exponent = 0.0;
  double expected_t_exponent = 0.0;
  double expected_eps_exponent = 0.0;
  bool t_ok = false;
  bool eps_ok = false;
  /// Mean of eps K*^2 / t^3 (second-order schemes only), the constant c that
  /// min_exponentials needs.
  std::optional<double> calibration_c;
};

struct ScalingReport {
  std::vector<SchemeScaling> schemes;
  nlohmann::json instance;
  bool all_ok = false;
};

ScalingReport scaling_cross_check(const ScalingConfig& cfg);
nlohmann::json to_json(const ScalingReport& r);

/// Monte Carlo spot check of a randomized run: averages `samples` sampled
/// schedules (sample_schedule) applied to `rho` and returns the trace distance
/// to the exact channel output.
double sampled_channel_deviation(const TermSet& ts, const UnitaryMixture& stage,
                                 int stages, const DensityMatrix& rho, int samples,
                                 std::uint64_t seed);

/// Shortest round-trip decimal for a double, independent of locale.
std::string format_double(double v);

}  // namespace pfsim
