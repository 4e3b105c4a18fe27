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

#include <map>
#include <span>
#include <vector>

#include <json.hpp>

#include "pfsim/hamiltonians.hpp"
#include "pfsim/schedules.hpp"

namespace pfsim {

/// Ordered product of symbols, e.g. {1, 2, 1} stands for H_1 H_2 H_1.
using SymbolWord = std::vector<int>;

/// Orders words by length, then lexicographically.
struct ShortLex {
  bool operator()(const SymbolWord& a, const SymbolWord& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Noncommutative polynomial in H_1..H_m truncated at total degree 3.
///
/// Durations are numeric and folded into the coefficients. Words absent from
/// the map have coefficient zero; the empty word is always present.
class TruncatedSeries {
 public:
  static constexpr std::size_t kMaxDegree = 3;

  explicit TruncatedSeries(int num_symbols);

  static TruncatedSeries identity(int num_symbols);

  int num_symbols() const { return m_; }
  Complex coeff(const SymbolWord& w) const;
  void add(const SymbolWord& w, Complex c);
  const std::map<SymbolWord, Complex, ShortLex>& coeffs() const { return coeffs_; }

 private:
  int m_;
  std::map<SymbolWord, Complex, ShortLex> coeffs_;
};

/// Taylor series of exp(-i H_k tau) through degree 3.
TruncatedSeries exp_step_series(int k, double tau, int num_symbols);

/// Product a*b (a is the left operator factor), dropping degree > 3.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Series of word_unitary(w): the last step is the leftmost factor.
TruncatedSeries word_series(const Word& w, int num_symbols);

/// exp(-i (H_1 + ... + H_m) t) through degree 3.
TruncatedSeries exact_series(int num_symbols, double t);

/// Probability-weighted mean of the entries' word series.
TruncatedSeries mixture_mean_series(const UnitaryMixture& mix, int num_symbols);

/// Combined coefficient of H_a H_b H_a and H_b H_a H_b in units of i:
/// Re[(c(a,b,a) + c(b,a,b)) / i].
double third_order_pair_sum(const TruncatedSeries& s, int a, int b);

/// Same, for a word whose a- and b-durations each total 1 (within 1e-9).
double third_order_pair_sum(const Word& w, int a, int b);

/// Substitutes concrete matrices for the symbols.
ComplexMatrix evaluate_series(const TruncatedSeries& s, const TermSet& ts);

/// Alternating block durations of terms a and b within a word. Steps of other
/// terms are transparent: they neither contribute nor split a block.
struct InterleavingProfile {
  int a = 0;
  int b = 0;
  /// Term that owns x[0].
  int first_term = 0;
  std::vector<double> x;
  double total = 0.0;
};

InterleavingProfile interleaving_profile(const Word& w, int a, int b);

/// Sum of x_i x_j x_k over i < j < k with k - i even and j - i odd.
double s_value(std::span<const double> x);

nlohmann::json to_json(const TruncatedSeries& s);
nlohmann::json to_json(const InterleavingProfile& p);

}  // namespace pfsim
