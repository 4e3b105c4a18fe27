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

#include "pfsim/series.hpp"

#include <cmath>
#include <sstream>

namespace pfsim {

namespace {

void check_symbol(int k, int m, const char* op) {
  if (k < 1 || k > m) {
    std::ostringstream msg;
    msg << op << ": symbol " << k << " outside 1.." << m;
    throw InvalidInput(msg.str());
  }
}

// (-i tau)^n / n!
Complex taylor_coeff(double tau, int n) {
  static constexpr double kFactorial[] = {1.0, 1.0, 2.0, 6.0};
  Complex p(1.0, 0.0);
  for (int i = 0; i < n; ++i) p *= Complex(0.0, -tau);
  return p / kFactorial[n];
}

}  // namespace

TruncatedSeries::TruncatedSeries(int num_symbols) : m_(num_symbols) {
  if (num_symbols < 1) throw InvalidInput("TruncatedSeries: need m >= 1");
  coeffs_[{}] = Complex(0.0, 0.0);
}

TruncatedSeries TruncatedSeries::identity(int num_symbols) {
  TruncatedSeries s(num_symbols);
  s.coeffs_[{}] = Complex(1.0, 0.0);
  return s;
}

Complex TruncatedSeries::coeff(const SymbolWord& w) const {
  auto it = coeffs_.find(w);
  return it == coeffs_.end() ? Complex(0.0, 0.0) : it->second;
}

void TruncatedSeries::add(const SymbolWord& w, Complex c) {
  if (w.size() > kMaxDegree) return;
  for (int k : w) check_symbol(k, m_, "TruncatedSeries::add");
  coeffs_[w] += c;
}

TruncatedSeries exp_step_series(int k, double tau, int num_symbols) {
  check_symbol(k, num_symbols, "exp_step_series");
  TruncatedSeries s = TruncatedSeries::identity(num_symbols);
  SymbolWord w;
  for (int n = 1; n <= 3; ++n) {
    w.push_back(k);
    s.add(w, taylor_coeff(tau, n));
  }
  return s;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.num_symbols() != b.num_symbols()) {
    throw InvalidInput("series_mul: symbol counts differ (" +
                       std::to_string(a.num_symbols()) + " vs " +
                       std::to_string(b.num_symbols()) + ")");
  }
  TruncatedSeries out(a.num_symbols());
  for (const auto& [wa, ca] : a.coeffs()) {
    for (const auto& [wb, cb] : b.coeffs()) {
      if (wa.size() + wb.size() > TruncatedSeries::kMaxDegree) continue;
      SymbolWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(w, ca * cb);
    }
  }
  return out;
}

TruncatedSeries word_series(const Word& w, int num_symbols) {
  TruncatedSeries s = TruncatedSeries::identity(num_symbols);
  // Later steps multiply from the left.
  for (const auto& step : w.steps())
    s = series_mul(exp_step_series(step.term, step.duration, num_symbols), s);
  return s;
}

TruncatedSeries exact_series(int num_symbols, double t) {
  TruncatedSeries s = TruncatedSeries::identity(num_symbols);
  for (int i = 1; i <= num_symbols; ++i) {
    s.add({i}, taylor_coeff(t, 1));
    for (int j = 1; j <= num_symbols; ++j) {
      s.add({i, j}, taylor_coeff(t, 2));
      for (int k = 1; k <= num_symbols; ++k) s.add({i, j, k}, taylor_coeff(t, 3));
    }
  }
  return s;
}

TruncatedSeries mixture_mean_series(const UnitaryMixture& mix, int num_symbols) {
  TruncatedSeries out(num_symbols);
  for (const auto& e : mix.entries()) {
    const TruncatedSeries s = word_series(e.word, num_symbols);
    for (const auto& [w, c] : s.coeffs()) out.add(w, e.probability * c);
  }
  return out;
}

double third_order_pair_sum(const TruncatedSeries& s, int a, int b) {
  check_symbol(a, s.num_symbols(), "third_order_pair_sum");
  check_symbol(b, s.num_symbols(), "third_order_pair_sum");
  if (a == b) throw InvalidInput("third_order_pair_sum: a and b must differ");
  const Complex sum = s.coeff({a, b, a}) + s.coeff({b, a, b});
  return (sum / Complex(0.0, 1.0)).real();
}

double third_order_pair_sum(const Word& w, int a, int b) {
  constexpr double kNormTol = 1e-9;
  const double alpha = w.total_duration(a);
  const double beta = w.total_duration(b);
  if (std::abs(alpha - 1.0) > kNormTol || std::abs(beta - 1.0) > kNormTol) {
    std::ostringstream msg;
    msg << "third_order_pair_sum: durations of terms " << a << " and " << b
        << " must each total 1, got " << alpha << " and " << beta;
    throw InvalidInput(msg.str());
  }
  const int m = std::max({w.max_term(), a, b});
  return third_order_pair_sum(word_series(w, m), a, b);
}

ComplexMatrix evaluate_series(const TruncatedSeries& s, const TermSet& ts) {
  if (s.num_symbols() > ts.size())
    throw InvalidInput("evaluate_series: series uses more symbols than terms");
  ComplexMatrix out = ComplexMatrix::Zero(ts.dim(), ts.dim());
  for (const auto& [w, c] : s.coeffs()) {
    ComplexMatrix prod = ComplexMatrix::Identity(ts.dim(), ts.dim());
    for (int k : w) prod = prod * ts.term(k);
    out += c * prod;
  }
  return out;
}

InterleavingProfile interleaving_profile(const Word& w, int a, int b) {
  if (a == b) throw InvalidInput("interleaving_profile: a and b must differ");
  InterleavingProfile p{a, b, 0, {}, 0.0};
  int last = 0;
  for (const auto& s : w.steps()) {
    if (s.term != a && s.term != b) continue;
    if (s.term == last) {
      p.x.back() += s.duration;
    } else {
      p.x.push_back(s.duration);
      last = s.term;
      if (p.first_term == 0) p.first_term = s.term;
    }
    p.total += s.duration;
  }
  if (w.total_duration(a) == 0.0 || w.total_duration(b) == 0.0) {
    std::ostringstream msg;
    msg << "interleaving_profile: word must contain both term " << a
        << " and term " << b;
    throw InvalidInput(msg.str());
  }
  return p;
}

double s_value(std::span<const double> x) {
  // x_j * (opposite-parity mass before j) * (opposite-parity mass after j).
  const std::size_t n = x.size();
  double after[2] = {0.0, 0.0};
  for (std::size_t k = 0; k < n; ++k) after[k % 2] += x[k];
  double before[2] = {0.0, 0.0};
  double s = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t par = j % 2;
    after[par] -= x[j];
    s += x[j] * before[1 - par] * after[1 - par];
    before[par] += x[j];
  }
  return s;
}

nlohmann::json to_json(const TruncatedSeries& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& [w, c] : s.coeffs())
    coeffs.push_back({{"word", w}, {"re", c.real()}, {"im", c.imag()}});
  return {{"m", s.num_symbols()}, {"coeffs", coeffs}};
}

nlohmann::json to_json(const InterleavingProfile& p) {
  return {{"pair", {p.a, p.b}},
          {"first_term", p.first_term},
          {"x", p.x},
          {"total", p.total}};
}

}  // namespace pfsim
