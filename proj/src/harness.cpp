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

#include "pfsim/harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include "pfsim/rng.hpp"
#include "pfsim/schedules.hpp"

namespace pfsim {

std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::kTrotter: return "trotter";
    case Scheme::kStrang: return "strang";
    case Scheme::kAlg1: return "alg1";
    case Scheme::kAlg2: return "alg2";
  }
  return "unknown";
}

Scheme scheme_from_string(const std::string& name) {
  for (Scheme s : kAllSchemes)
    if (to_string(s) == name) return s;
  throw InvalidInput("unknown scheme '" + name +
                     "' (expected trotter, strang, alg1 or alg2)");
}

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw AssertionFailure("format_double: conversion failed");
  return std::string(buf, end);
}

// ---------------------------------------------------------------------------
// Configuration

TermSet InstanceSpec::build() const {
  if (n_qubits) return spin_chain_termset(*n_qubits, jx, jz, hx);
  if (!termset_path.empty()) {
    std::ifstream in(termset_path);
    if (!in) throw InvalidInput("cannot open TermSet file " + termset_path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw InvalidInput("TermSet file " + termset_path + ": " + e.what());
    }
    return termset_from_json(j);
  }
  return random_termset(dim, num_terms, norm_bound, seed);
}

nlohmann::json InstanceSpec::describe() const {
  if (n_qubits) {
    return {{"kind", "spin_chain"}, {"n_qubits", *n_qubits},
            {"jx", jx}, {"jz", jz}, {"hx", hx}};
  }
  if (!termset_path.empty()) return {{"kind", "file"}, {"path", termset_path}};
  return {{"kind", "random"}, {"d", dim}, {"m", num_terms},
          {"norm_bound", norm_bound}, {"seed", seed}, {"rng", Rng::kName}};
}

namespace {

template <typename T>
T get_or(const nlohmann::json& j, const char* key, T fallback) {
  return j.contains(key) ? j.at(key).get<T>() : fallback;
}

InstanceSpec instance_from_json(const nlohmann::json& j) {
  InstanceSpec spec;
  if (j.contains("n_qubits")) spec.n_qubits = j.at("n_qubits").get<int>();
  spec.jx = get_or(j, "jx", spec.jx);
  spec.jz = get_or(j, "jz", spec.jz);
  spec.hx = get_or(j, "hx", spec.hx);
  spec.termset_path = get_or<std::string>(j, "termset", "");
  spec.dim = get_or(j, "d", spec.dim);
  spec.num_terms = get_or(j, "m", spec.num_terms);
  spec.norm_bound = get_or(j, "norm_bound", spec.norm_bound);
  spec.seed = get_or<std::uint64_t>(j, "seed", spec.seed);
  return spec;
}

void check_rng_name(const nlohmann::json& j) {
  const auto name = get_or<std::string>(j, "rng", std::string(Rng::kName));
  if (name != Rng::kName)
    throw InvalidInput("unsupported rng '" + name + "' (only mt19937_64)");
}

FitOptions fit_options_from_json(const nlohmann::json& j) {
  FitOptions f;
  if (!j.contains("tolerances")) return f;
  const auto& tol = j.at("tolerances");
  f.r2_min = get_or(tol, "r2_min", f.r2_min);
  f.drop_preasymptotic = get_or(tol, "drop_preasymptotic", f.drop_preasymptotic);
  f.bend_residual = get_or(tol, "bend_residual", f.bend_residual);
  return f;
}

}  // namespace

RunConfig run_config_from_json(const nlohmann::json& j) {
  try {
    RunConfig cfg;
    check_rng_name(j);
    cfg.scheme = scheme_from_string(j.at("scheme").get<std::string>());
    cfg.instance = instance_from_json(j);
    cfg.t = j.at("t").get<double>();
    cfg.k_values = j.at("K").get<std::vector<long long>>();
    cfg.panel_seed = get_or<std::uint64_t>(j, "panel_seed", cfg.panel_seed);
    cfg.panel_size = get_or(j, "panel_size", cfg.panel_size);
    cfg.output_path = get_or<std::string>(j, "out", "");
    cfg.fit = fit_options_from_json(j);
    if (!(cfg.t > 0.0)) throw InvalidInput("config: t must be positive");
    if (cfg.k_values.empty()) throw InvalidInput("config: K list is empty");
    for (std::size_t i = 0; i < cfg.k_values.size(); ++i) {
      if (cfg.k_values[i] < 1) throw InvalidInput("config: K values must be >= 1");
      if (i > 0 && cfg.k_values[i] <= cfg.k_values[i - 1])
        throw InvalidInput("config: K list must be strictly increasing");
    }
    if (cfg.panel_size < 1) throw InvalidInput("config: panel_size must be >= 1");
    return cfg;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("config: ") + e.what());
  }
}

ScalingConfig scaling_config_from_json(const nlohmann::json& j) {
  try {
    ScalingConfig cfg;
    check_rng_name(j);
    cfg.instance = instance_from_json(j);
    if (j.contains("schemes")) {
      cfg.schemes.clear();
      for (const auto& s : j.at("schemes")) cfg.schemes.push_back(scheme_from_string(s));
    }
    cfg.t_values = get_or(j, "t_values", cfg.t_values);
    cfg.eps_at_fixed_t_sweep = get_or(j, "eps_for_t_sweep", cfg.eps_at_fixed_t_sweep);
    cfg.t_fixed = get_or(j, "t_fixed", cfg.t_fixed);
    cfg.eps_values = get_or(j, "eps_values", cfg.eps_values);
    cfg.k_cap = get_or(j, "k_cap", cfg.k_cap);
    cfg.panel_seed = get_or<std::uint64_t>(j, "panel_seed", cfg.panel_seed);
    cfg.panel_size = get_or(j, "panel_size", cfg.panel_size);
    cfg.t_exponent_tol = get_or(j, "t_exponent_tol", cfg.t_exponent_tol);
    cfg.eps_exponent_tol = get_or(j, "eps_exponent_tol", cfg.eps_exponent_tol);
    if (cfg.t_values.size() < 2 || cfg.eps_values.size() < 2)
      throw InvalidInput("scaling config: need at least two t and two eps values");
    for (double t : cfg.t_values)
      if (!(t > 0.0)) throw InvalidInput("scaling config: t values must be positive");
    for (double e : cfg.eps_values)
      if (!(e > 0.0)) throw InvalidInput("scaling config: eps values must be positive");
    if (cfg.k_cap < 1) throw InvalidInput("scaling config: k_cap must be >= 1");
    return cfg;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("scaling config: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Error measurement

std::vector<DensityMatrix> state_panel(int dim, int size, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<DensityMatrix> panel;
  panel.reserve(size);
  for (int i = 0; i < size; ++i)
    panel.push_back(DensityMatrix::pure(random_unit_vector(rng, dim)));
  return panel;
}

long long exponential_count(Scheme s, int num_terms, long long segments) {
  switch (s) {
    case Scheme::kStrang:
      // Palindromes fuse in the middle and across segment boundaries.
      return (2LL * num_terms - 2) * segments + 1;
    case Scheme::kTrotter:
    case Scheme::kAlg1:
    case Scheme::kAlg2:
      return static_cast<long long>(num_terms) * segments;
  }
  return 0;
}

ErrorMeter::ErrorMeter(const TermSet& ts, double t, std::vector<DensityMatrix> panel)
    : ts_(ts), t_(t), u0_(exact_evolution(ts, t)), panel_(std::move(panel)) {
  for (const auto& rho : panel_) targets_.push_back(conjugate(u0_, rho));
}

double ErrorMeter::error(Scheme s, long long segments) const {
  if (segments < 1) throw InvalidInput("ErrorMeter: segments must be >= 1");
  const double dt = t_ / static_cast<double>(segments);
  double worst = 0.0;
  if (s == Scheme::kTrotter || s == Scheme::kStrang) {
    // The K-segment word is the one-segment word repeated, so its unitary is
    // a matrix power of the segment unitary.
    const Word segment = s == Scheme::kTrotter ? trotter_word(ts_, dt, 1)
                                               : strang_word(ts_, dt, 1);
    const ComplexMatrix u = matrix_power(word_unitary(ts_, segment), segments);
    for (std::size_t i = 0; i < panel_.size(); ++i)
      worst = std::max(worst, trace_distance(conjugate(u, panel_[i]), targets_[i]));
    return worst;
  }
  const UnitaryMixture stage = s == Scheme::kAlg1 ? alg1_stage_mixture(ts_, dt)
                                                  : alg2_stage_mixture(ts_, dt);
  const long long stages = s == Scheme::kAlg1 ? ts_.size() * segments : segments;
  const Superoperator channel = channel_power(mixture_superoperator(ts_, stage), stages);
  for (std::size_t i = 0; i < panel_.size(); ++i)
    worst = std::max(worst, trace_distance(apply_channel(channel, panel_[i]), targets_[i]));
  return worst;
}

// ---------------------------------------------------------------------------
// Fitting and sweeps

LogLogFit fit_loglog(std::span<const std::pair<double, double>> points) {
  if (points.size() < 3) throw InvalidInput("fit_loglog: need at least 3 points");
  const double n = static_cast<double>(points.size());
  double sx = 0, sy = 0;
  std::vector<double> lx, ly;
  for (const auto& [x, y] : points) {
    if (!(x > 0.0) || !(y > 0.0)) {
      std::ostringstream msg;
      msg << "fit_loglog: nonpositive value at (" << x << ", " << y << ")";
      throw InvalidInput(msg.str());
    }
    lx.push_back(std::log(x));
    ly.push_back(std::log(y));
    sx += lx.back();
    sy += ly.back();
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (sxx == 0.0) throw InvalidInput("fit_loglog: all x values coincide");
  LogLogFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double r = ly[i] - (fit.intercept + fit.slope * lx[i]);
    ss_res += r * r;
  }
  fit.r2 = syy == 0.0 ? 1.0 : 1.0 - ss_res / syy;
  return fit;
}

SweepResult sweep_error_vs_K(const RunConfig& cfg) {
  const TermSet ts = cfg.instance.build();
  const ErrorMeter meter(ts, cfg.t, state_panel(ts.dim(), cfg.panel_size, cfg.panel_seed));

  SweepResult r;
  r.scheme = cfg.scheme;
  r.instance = cfg.instance.describe();
  r.dim = ts.dim();
  r.num_terms = ts.size();
  r.t = cfg.t;
  for (long long k : cfg.k_values) {
    r.points.push_back({k, exponential_count(cfg.scheme, ts.size(), k),
                        meter.error(cfg.scheme, k)});
  }
  for (std::size_t i = 0; i < r.points.size(); ++i)
    for (std::size_t j = 0; j < r.points.size(); ++j)
      if (r.points[j].k == 2 * r.points[i].k &&
          r.points[j].error > r.points[i].error + 1e-12)
        r.monotone = false;

  r.commuting = std::all_of(r.points.begin(), r.points.end(),
                            [](const SweepPoint& p) { return p.error < 1e-12; });
  if (r.commuting || r.points.size() < 3) return r;

  std::vector<std::pair<double, double>> data;
  for (const auto& p : r.points) data.emplace_back(static_cast<double>(p.k), p.error);
  r.fit = fit_loglog(data);
  r.fitted = true;
  if (cfg.fit.drop_preasymptotic && data.size() >= 5) {
    const auto& [xl, yl] = data.back();
    const double residual = std::log(yl) - (r.fit.intercept + r.fit.slope * std::log(xl));
    if (std::abs(residual) > cfg.fit.bend_residual) {
      r.fit = fit_loglog(std::span(data).subspan(2));
      r.dropped_preasymptotic = true;
    }
  }
  r.verdict = r.fit.r2 >= cfg.fit.r2_min;
  return r;
}

nlohmann::json to_json(const SweepResult& r) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : r.points)
    points.push_back({{"K", p.k}, {"N", p.exponentials}, {"error", p.error}});
  nlohmann::json out = {{"scheme", to_string(r.scheme)},
                        {"instance", r.instance},
                        {"d", r.dim},
                        {"m", r.num_terms},
                        {"t", r.t},
                        {"points", points},
                        {"commuting", r.commuting},
                        {"monotone", r.monotone},
                        {"fitted", r.fitted}};
  if (r.fitted) {
    out["slope"] = r.fit.slope;
    out["intercept"] = r.fit.intercept;
    out["r2"] = r.fit.r2;
    out["dropped_preasymptotic"] = r.dropped_preasymptotic;
    out["verdict"] = r.verdict;
  }
  return out;
}

std::string points_csv(const SweepResult& r) {
  std::string out = "K,N,error\n";
  for (const auto& p : r.points) {
    out += std::to_string(p.k) + "," + std::to_string(p.exponentials) + "," +
           format_double(p.error) + "\n";
  }
  return out;
}

double sampled_channel_deviation(const TermSet& ts, const UnitaryMixture& stage,
                                 int stages, const DensityMatrix& rho, int samples,
                                 std::uint64_t seed) {
  if (samples < 1) throw InvalidInput("sampled_channel_deviation: samples must be >= 1");
  Rng seeds(seed);
  ComplexMatrix acc = ComplexMatrix::Zero(ts.dim(), ts.dim());
  for (int i = 0; i < samples; ++i) {
    const ComplexMatrix u = word_unitary(ts, sample_schedule(stage, stages, seeds.below(UINT64_MAX)));
    acc += u * rho.mat() * u.adjoint();
  }
  const DensityMatrix estimate(acc / static_cast<double>(samples), 1e-9);
  const DensityMatrix exact =
      apply_channel(channel_power(mixture_superoperator(ts, stage), stages), rho);
  return trace_distance(estimate, exact);
}

// ---------------------------------------------------------------------------
// Bound-dominance campaign

namespace {

TermSet commuting_termset(Rng& rng, int dim, int num_terms) {
  std::vector<ComplexMatrix> terms;
  for (int k = 0; k < num_terms; ++k) {
    ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) h(i, i) = rng.normal();
    terms.push_back(std::move(h));
  }
  return TermSet(std::move(terms), {});
}

}  // namespace

CampaignReport lemma1_campaign(int n_instances, std::uint64_t seed) {
  if (n_instances < 1) throw InvalidInput("lemma1_campaign: need at least one instance");
  const auto start = std::chrono::steady_clock::now();
  CampaignReport rep;
  Rng master(seed);
  constexpr int kDims[] = {2, 4, 8};
  for (int i = 0; i < n_instances; ++i) {
    const std::uint64_t inst_seed = master.below(UINT64_MAX);
    Rng rng(inst_seed);
    const int dim = kDims[rng.below(3)];
    const int m = 2 + static_cast<int>(rng.below(2));
    const double dt = 0.2 * (0.05 + 0.95 * rng.uniform());
    const bool control = i % 8 == 0;

    const TermSet ts = control ? commuting_termset(rng, dim, m)
                               : random_termset(dim, m, 0.5 + 1.5 * rng.uniform(),
                                                rng.below(UINT64_MAX));
    UnitaryMixture mix = deterministic_mixture(trotter_word(ts, dt, 1));
    int stages = 1;
    double t = dt;
    if (!control) {
      switch (rng.below(6)) {
        case 0:  // one memoryless stage simulates e^{-iH dt/m} on average
          mix = alg1_stage_mixture(ts, dt);
          t = dt / m;
          break;
        case 1:  // m consecutive memoryless stages
          mix = mixture_power(alg1_stage_mixture(ts, dt), m);
          break;
        case 2:
          mix = alg2_stage_mixture(ts, dt);
          break;
        case 3:
          mix = alg2_stage_mixture(ts, dt);
          stages = 2;
          t = 2 * dt;
          break;
        case 4:
          mix = deterministic_mixture(trotter_word(ts, dt, 1));
          break;
        default:
          mix = deterministic_mixture(strang_word(ts, dt, 1));
          break;
      }
    }

    const DensityMatrix psi0 = DensityMatrix::pure(random_unit_vector(rng, dim));
    DensityMatrix rho0 = psi0;
    if (!control && rng.uniform() < 0.5) {
      const double q = 0.5 * rng.uniform();
      const DensityMatrix noise = random_density(rng, dim);
      rho0 = DensityMatrix((1.0 - q) * psi0.mat() + q * noise.mat());
      ++rep.mixed_inputs;
    }

    BoundReport r = lemma1_report(ts, mix, stages, t, rho0, psi0);
    r.info.seed = inst_seed;
    ++rep.instances;
    if (control) {
      ++rep.controls;
      rep.max_control_bound = std::max(rep.max_control_bound, r.bound);
    }
    const double slack = r.bound - r.observed;
    if (i == 0 || slack < rep.worst_slack) rep.worst_slack = slack;
    if (!r.dominated()) {
      if (rep.violations == 0) rep.first_violation = to_json(r);
      ++rep.violations;
    }
    if (!control) {
      if (r.bound > 0.0) rep.max_bound_ratio = std::max(rep.max_bound_ratio, r.observed / r.bound);
      if (r.mean_dev > 1e-12)
        rep.best_mean_ratio = std::max(rep.best_mean_ratio, r.observed / r.mean_dev);
      if (r.sq_dev > 1e-12)
        rep.best_sq_ratio = std::max(rep.best_sq_ratio, r.observed / r.sq_dev);
    }
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

nlohmann::json to_json(const CampaignReport& r) {
  nlohmann::json out = {{"instances", r.instances},
                        {"violations", r.violations},
                        {"controls", r.controls},
                        {"mixed_inputs", r.mixed_inputs},
                        {"max_control_bound", r.max_control_bound},
                        {"max_bound_ratio", r.max_bound_ratio},
                        {"best_mean_ratio", r.best_mean_ratio},
                        {"best_sq_ratio", r.best_sq_ratio},
                        {"worst_slack", r.worst_slack}};
  if (r.violations > 0) out["first_violation"] = r.first_violation;
  return out;
}

// ---------------------------------------------------------------------------
// Scaling cross-check

BisectionCell bisect_min_segments(const ErrorMeter& meter, Scheme s, double t,
                                  double eps, int num_terms, long long k_cap) {
  BisectionCell cell;
  cell.t = t;
  cell.eps = eps;
  long long hi = 1;
  double e_hi = meter.error(s, hi);
  long long lo = 0;
  double e_lo = 0.0;
  while (e_hi > eps) {
    if (hi >= k_cap) return cell;
    lo = hi;
    e_lo = e_hi;
    hi = std::min(2 * hi, k_cap);
    e_hi = meter.error(s, hi);
  }
  while (lo > 0 && hi - lo > 1) {
    const long long mid = lo + (hi - lo) / 2;
    const double e_mid = meter.error(s, mid);
    if (e_mid > eps) {
      lo = mid;
      e_lo = e_mid;
    } else {
      hi = mid;
      e_hi = e_mid;
    }
  }
  cell.reached = true;
  cell.k_min = hi;
  cell.error_at_k_min = e_hi;
  cell.exponentials = exponential_count(s, num_terms, hi);
  if (lo == 0 || e_hi <= 0.0) {
    cell.k_star = static_cast<double>(hi);
  } else {
    const double frac = (std::log(eps) - std::log(e_lo)) / (std::log(e_hi) - std::log(e_lo));
    cell.k_star = std::exp(std::log(static_cast<double>(lo)) +
                           frac * (std::log(static_cast<double>(hi)) -
                                   std::log(static_cast<double>(lo))));
  }
  return cell;
}

ScalingReport scaling_cross_check(const ScalingConfig& cfg) {
  const TermSet ts = cfg.instance.build();
  const auto panel = state_panel(ts.dim(), cfg.panel_size, cfg.panel_seed);

  std::vector<ErrorMeter> t_meters;
  for (double t : cfg.t_values) t_meters.emplace_back(ts, t, panel);
  const ErrorMeter fixed_meter(ts, cfg.t_fixed, panel);

  ScalingReport rep;
  rep.instance = cfg.instance.describe();
  rep.all_ok = true;
  for (Scheme s : cfg.schemes) {
    SchemeScaling sc;
    sc.scheme = s;
    const bool second_order = s == Scheme::kStrang || s == Scheme::kAlg2;
    sc.expected_t_exponent = second_order ? 1.5 : 2.0;
    sc.expected_eps_exponent = second_order ? 0.5 : 1.0;

    std::vector<std::pair<double, double>> t_data, eps_data;
    for (std::size_t i = 0; i < cfg.t_values.size(); ++i) {
      sc.t_cells.push_back(bisect_min_segments(t_meters[i], s, cfg.t_values[i],
                                               cfg.eps_at_fixed_t_sweep, ts.size(),
                                               cfg.k_cap));
      if (sc.t_cells.back().reached)
        t_data.emplace_back(cfg.t_values[i], sc.t_cells.back().k_star);
    }
    for (double eps : cfg.eps_values) {
      sc.eps_cells.push_back(bisect_min_segments(fixed_meter, s, cfg.t_fixed, eps,
                                                 ts.size(), cfg.k_cap));
      if (sc.eps_cells.back().reached)
        eps_data.emplace_back(1.0 / eps, sc.eps_cells.back().k_star);
    }
    auto slope_of = [](const std::vector<std::pair<double, double>>& d) {
      if (d.size() < 2) return std::nan("");
      if (d.size() == 2)
        return std::log(d[1].second / d[0].second) / std::log(d[1].first / d[0].first);
      return fit_loglog(d).slope;
    };
    sc.t_exponent = slope_of(t_data);
    sc.eps_exponent = slope_of(eps_data);
    sc.t_ok = t_data.size() == cfg.t_values.size() &&
              std::abs(sc.t_exponent - sc.expected_t_exponent) <= cfg.t_exponent_tol;
    sc.eps_ok = eps_data.size() == cfg.eps_values.size() &&
                std::abs(sc.eps_exponent - sc.expected_eps_exponent) <= cfg.eps_exponent_tol;
    if (second_order) {
      double acc = 0.0;
      int count = 0;
      for (const auto* cells : {&sc.t_cells, &sc.eps_cells}) {
        for (const auto& c : *cells) {
          if (!c.reached) continue;
          acc += c.eps * c.k_star * c.k_star / (c.t * c.t * c.t);
          ++count;
        }
      }
      if (count > 0) sc.calibration_c = acc / count;
    }
    rep.all_ok = rep.all_ok && sc.t_ok && sc.eps_ok;
    rep.schemes.push_back(std::move(sc));
  }
  return rep;
}

namespace {

nlohmann::json cells_json(const std::vector<BisectionCell>& cells) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : cells) {
    nlohmann::json j = {{"t", c.t}, {"eps", c.eps}, {"reached", c.reached}};
    if (c.reached) {
      j["K_min"] = c.k_min;
      j["K_star"] = c.k_star;
      j["N"] = c.exponentials;
      j["error_at_K_min"] = c.error_at_k_min;
    }
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace

nlohmann::json to_json(const ScalingReport& r) {
  nlohmann::json schemes = nlohmann::json::array();
  for (const auto& s : r.schemes) {
    nlohmann::json j = {{"scheme", to_string(s.scheme)},
                        {"t_cells", cells_json(s.t_cells)},
                        {"eps_cells", cells_json(s.eps_cells)},
                        {"t_exponent", s.t_exponent},
                        {"eps_exponent", s.eps_exponent},
                        {"expected_t_exponent", s.expected_t_exponent},
                        {"expected_eps_exponent", s.expected_eps_exponent},
                        {"t_ok", s.t_ok},
                        {"eps_ok", s.eps_ok}};
    if (s.calibration_c) j["calibration_c"] = *s.calibration_c;
    schemes.push_back(std::move(j));
  }
  return {{"instance", r.instance}, {"schemes", schemes}, {"all_ok", r.all_ok}};
}

}  // namespace pfsim
