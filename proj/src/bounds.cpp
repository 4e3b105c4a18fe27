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

#include "pfsim/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pfsim/rng.hpp"

namespace pfsim {

namespace {

constexpr double kPolishTol = 1e-10;
constexpr int kMaxPolishSweeps = 100000;

/// Pairwise-transfer ascent: moves mass between two coordinates at a time,
/// which keeps sum x = 2. S is multilinear, so along e_i - e_j it is an exact
/// quadratic and each move is solved in closed form.
double polish(std::vector<double>& x) {
  const std::size_t n = x.size();
  double best = s_value(x);
  for (int sweep = 0; sweep < kMaxPolishSweeps; ++sweep) {
    const double start = best;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        const double lo = std::max(-x[i], x[j] - 1.0);
        const double hi = std::min(1.0 - x[i], x[j]);
        if (hi - lo <= 0.0) continue;
        auto along = [&](double d) {
          std::vector<double> y = x;
          y[i] += d;
          y[j] -= d;
          return s_value(y);
        };
        const double fp = along(1.0);
        const double fm = along(-1.0);
        const double c1 = 0.5 * (fp - fm);
        const double c2 = 0.5 * (fp + fm) - best;
        double cand[3] = {lo, hi, 0.0};
        int count = 2;
        if (c2 < 0.0) {
          const double v = -c1 / (2.0 * c2);
          if (v > lo && v < hi) cand[count++] = v;
        }
        double step = 0.0;
        double value = best;
        for (int c = 0; c < count; ++c) {
          const double f = along(cand[c]);
          if (f > value + 1e-15) {
            value = f;
            step = cand[c];
          }
        }
        if (step != 0.0) {
          x[i] = std::clamp(x[i] + step, 0.0, 1.0);
          x[j] = std::clamp(x[j] - step, 0.0, 1.0);
          best = s_value(x);
        }
      }
    }
    if (best - start < kPolishTol) break;
  }
  return best;
}

struct GridSearch {
  int n;
  int total;
  int cap;
  std::vector<int> counts;
  double best = -1.0;
  std::vector<int> best_counts;
  std::uint64_t evaluated = 0;

  void run(int pos, int remaining) {
    if (pos == n - 1) {
      if (remaining > cap) return;
      counts[pos] = remaining;
      std::vector<double> x(n);
      for (int i = 0; i < n; ++i) x[i] = 2.0 * counts[i] / total;
      const double s = s_value(x);
      ++evaluated;
      if (s > best) {
        best = s;
        best_counts = counts;
      }
      return;
    }
    const int hi = std::min(cap, remaining);
    for (int c = 0; c <= hi; ++c) {
      // The remaining slots must be able to absorb what is left.
      if (remaining - c > cap * (n - pos - 1)) continue;
      counts[pos] = c;
      run(pos + 1, remaining - c);
    }
  }
};

}  // namespace

int default_grid_steps(int n) { return n <= 6 ? 40 : 20; }

Lemma2Result lemma2_max(int n, int grid_steps) {
  if (n < 3) {
    throw InvalidInput("lemma2_max: N must be >= 3 (for N < 3 no triple exists), got " +
                       std::to_string(n));
  }
  if (grid_steps < 2) throw InvalidInput("lemma2_max: grid_steps must be >= 2");

  Lemma2Result r;
  r.n = n;
  r.grid_steps = grid_steps;
  if (n <= kLemma2GridMaxN) {
    GridSearch g{n, grid_steps, grid_steps / 2, std::vector<int>(n), -1.0, {}, 0};
    g.run(0, grid_steps);
    if (g.best_counts.empty()) throw AssertionFailure("lemma2_max: empty grid");
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = 2.0 * g.best_counts[i] / grid_steps;
    r.max_s = polish(x);
    r.argmax = std::move(x);
    r.method = Lemma2Method::kGrid;
    r.evaluated = g.evaluated;
    return r;
  }

  // Refined-local: uniform start plus seeded random feasible starts.
  constexpr int kStarts = 64;
  Rng rng(static_cast<std::uint64_t>(n) * 7919u + grid_steps);
  r.max_s = -1.0;
  for (int s = 0; s < kStarts; ++s) {
    std::vector<double> x(n, 2.0 / n);
    if (s > 0) {
      double sum = 0.0;
      for (auto& v : x) sum += (v = rng.uniform() + 1e-3);
      for (auto& v : x) v *= 2.0 / sum;
      // Pull over-full coordinates back into [0, 1] by spreading the excess.
      for (int it = 0; it < 100; ++it) {
        double excess = 0.0;
        int free = 0;
        for (auto& v : x) {
          if (v > 1.0) {
            excess += v - 1.0;
            v = 1.0;
          } else if (v < 1.0) {
            ++free;
          }
        }
        if (excess <= 0.0) break;
        for (auto& v : x)
          if (v < 1.0) v += excess / free;
      }
    }
    const double value = polish(x);
    ++r.evaluated;
    if (value > r.max_s) {
      r.max_s = value;
      r.argmax = x;
    }
  }
  r.method = Lemma2Method::kRefinedLocal;
  return r;
}

double lemma2_uniform_value(int n) {
  if (n < 3 || n % 2 == 0) {
    throw InvalidInput("lemma2_uniform_value: N must be odd and >= 3, got " +
                       std::to_string(n));
  }
  const double formula = (1.0 - 1.0 / (static_cast<double>(n) * n)) / 3.0;
  const std::vector<double> uniform(n, 2.0 / n);
  const double direct = s_value(uniform);
  if (std::abs(direct - formula) > 1e-12) {
    std::ostringstream msg;
    msg << "lemma2_uniform_value: closed form " << formula
        << " disagrees with S at the uniform point " << direct;
    throw AssertionFailure(msg.str());
  }
  return formula;
}

ScheduleAudit audit_schedule(const Word& w, int a, int b, double dt_unit) {
  if (!(dt_unit > 0.0)) throw InvalidInput("audit_schedule: dt_unit must be positive");
  std::vector<Step> scaled;
  scaled.reserve(w.size());
  for (const auto& s : w.steps()) scaled.push_back({s.term, s.duration / dt_unit});
  const Word unit(std::move(scaled));

  ScheduleAudit audit;
  audit.a = a;
  audit.b = b;
  audit.profile = interleaving_profile(unit, a, b);
  audit.alpha_sum = unit.total_duration(a);
  audit.beta_sum = unit.total_duration(b);
  constexpr double kSumTol = 1e-9;
  audit.normalized = std::abs(audit.alpha_sum - 1.0) <= kSumTol &&
                     std::abs(audit.beta_sum - 1.0) <= kSumTol;
  audit.s = s_value(audit.profile.x);
  audit.gap = 1.0 / 3.0 - audit.s;
  audit.verdict = audit.normalized ? AuditVerdict::kObstructed : AuditVerdict::kMistimed;
  return audit;
}

long long min_exponentials(double t, double eps, double c) {
  if (!(t > 0.0) || !(eps > 0.0) || !(c > 0.0))
    throw InvalidInput("min_exponentials: t, eps and c must be positive");
  const double need = c * t * t * t / eps;
  auto ok = [&](long long k) {
    return c * t * t * t / (static_cast<double>(k) * static_cast<double>(k)) <= eps;
  };
  long long k = std::max<long long>(1, static_cast<long long>(std::ceil(std::sqrt(need))));
  while (!ok(k)) ++k;
  while (k > 1 && ok(k - 1)) --k;
  return k;
}

double cubic_sum(std::span<const double> parts) {
  double s = 0.0;
  for (double p : parts) s += p * p * p;
  return s;
}

double equal_split_cubic_sum(double t, int parts) {
  if (parts < 1) throw InvalidInput("equal_split_cubic_sum: parts must be >= 1");
  return t * t * t / (static_cast<double>(parts) * parts);
}

std::string to_string(Lemma2Method m) {
  return m == Lemma2Method::kGrid ? "grid" : "refined-local";
}

std::string to_string(AuditVerdict v) {
  return v == AuditVerdict::kObstructed ? "obstructed" : "mistimed";
}

nlohmann::json to_json(const Lemma2Result& r) {
  return {{"N", r.n},
          {"grid_steps", r.grid_steps},
          {"max_s", r.max_s},
          {"argmax", r.argmax},
          {"method", to_string(r.method)},
          {"evaluated", r.evaluated},
          {"below_one_third", r.below_one_third()}};
}

nlohmann::json to_json(const ScheduleAudit& a) {
  return {{"pair", {a.a, a.b}},
          {"normalized", a.normalized},
          {"alpha_sum", a.alpha_sum},
          {"beta_sum", a.beta_sum},
          {"s", a.s},
          {"gap", a.gap},
          {"verdict", to_string(a.verdict)},
          {"profile", to_json(a.profile)}};
}

}  // namespace pfsim
