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
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "pfsim/schedules.hpp"
#include "pfsim/series.hpp"

namespace pfsim {

enum class Lemma2Method { kGrid, kRefinedLocal };

/// Numerical maximum of s_value over {x in [0,1]^N : sum x = 2}.
struct Lemma2Result {
  int n = 0;
  int grid_steps = 0;
  double max_s = 0.0;
  std::vector<double> argmax;
  Lemma2Method method = Lemma2Method::kGrid;
  /// Grid points (or local starts) examined.
  std::uint64_t evaluated = 0;

  bool below_one_third() const { return max_s < 1.0 / 3.0; }
};

/// Largest N searched exhaustively; beyond it lemma2_max switches to seeded
/// multi-start local ascent.
inline constexpr int kLemma2GridMaxN = 9;

/// 40 for N <= 6, 20 for N = 7..9.
int default_grid_steps(int n);

/// Grid at resolution 2/grid_steps, then pairwise-transfer coordinate ascent
/// until a full sweep improves S by less than 1e-10. Ties on the grid go to
/// the lexicographically smallest point.
Lemma2Result lemma2_max(int n, int grid_steps);

/// (1/3)(1 - 1/N^2), the value of S at the uniform point x_i = 2/N, N odd.
double lemma2_uniform_value(int n);

enum class AuditVerdict { kObstructed, kMistimed };

struct ScheduleAudit {
  int a = 0;
  int b = 0;
  bool normalized = false;
  double alpha_sum = 0.0;
  double beta_sum = 0.0;
  double s = 0.0;
  double gap = 0.0;
  AuditVerdict verdict = AuditVerdict::kMistimed;
  InterleavingProfile profile;
};

/// Third-order obstruction audit of a schedule simulating exp(-i H dt_unit).
///
/// Durations are divided by `dt_unit`. If the a- or b-totals then differ from
/// 1 the schedule is mistimed (its per-step error is already second order);
/// otherwise S of the interleaving profile is compared against the exact
/// value 1/3.
ScheduleAudit audit_schedule(const Word& w, int a, int b, double dt_unit);

/// Smallest K with c t^3 / K^2 <= eps.
long long min_exponentials(double t, double eps, double c);

/// sum_j t_j^3; over positive partitions of t into K parts its minimum is
/// t^3 / K^2, reached only at the equal split.
double cubic_sum(std::span<const double> parts);
double equal_split_cubic_sum(double t, int parts);

std::string to_string(Lemma2Method m);
std::string to_string(AuditVerdict v);
nlohmann::json to_json(const Lemma2Result& r);
nlohmann::json to_json(const ScheduleAudit& a);

}  // namespace pfsim
