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
#include <vector>

#include <json.hpp>

#include "pfsim/hamiltonians.hpp"

namespace pfsim {

/// One exponential e^{-i H_term * duration}. `term` is 1-based.
struct Step {
  int term = 0;
  double duration = 0.0;

  bool operator==(const Step&) const = default;
};

/// Time-ordered sequence of exponentials: steps()[0] acts first, so as an
/// operator product it is the rightmost factor.
///
/// Durations are strictly positive and indices are >= 1; both are enforced on
/// every insertion. Whether indices fit a given TermSet is checked when the
/// word is evaluated against it.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Step> steps);

  void push_back(Step step);
  void append(const Word& other);

  const std::vector<Step>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }

  /// Sum of durations of all steps of `term`.
  double total_duration(int term) const;
  int max_term() const;
  Word reversed() const;
  /// Adjacent equal-index steps fused (durations summed).
  Word merged() const;

  bool operator==(const Word&) const = default;

 private:
  std::vector<Step> steps_;
};

struct MixtureEntry {
  double probability = 0.0;
  Word word;
};

/// Finite distribution over words; probabilities in (0, 1] summing to 1
/// within 1e-12.
class UnitaryMixture {
 public:
  static constexpr double kSumTolerance = 1e-12;

  explicit UnitaryMixture(std::vector<MixtureEntry> entries);

  const std::vector<MixtureEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<MixtureEntry> entries_;
};

enum class StrangMerge { kMerged, kUnmerged };

/// prod_{j=N}^{1} exp(-i H_{A_j} t_j), i.e. the first step acts first.
ComplexMatrix word_unitary(const TermSet& ts, const Word& w);

/// K repetitions of [(1,dt),(2,dt),...,(m,dt)].
Word trotter_word(const TermSet& ts, double dt, int segments);

/// K repetitions of the palindrome [(1,dt/2),...,(m,dt/2),(m,dt/2),...,(1,dt/2)].
/// By default all adjacent equal-index half steps are fused, including across
/// segment boundaries; kUnmerged keeps the literal 2mK exponentials.
Word strang_word(const TermSet& ts, double dt, int segments,
                 StrangMerge merge = StrangMerge::kMerged);

/// One stage of the memoryless scheme: a single e^{-i H_k dt}, k uniform.
UnitaryMixture alg1_stage_mixture(const TermSet& ts, double dt);

/// One stage of the permutation scheme: prod_j e^{-i H_sigma(j) dt} with
/// sigma uniform over all m! orderings. Limited to m <= 6.
UnitaryMixture alg2_stage_mixture(const TermSet& ts, double dt);
inline constexpr int kMaxPermutationTerms = 6;

/// `stages` independent draws from `mix`, concatenated in time order. Every
/// combination becomes an entry with the product probability. Rejected when
/// the result would exceed `max_entries`.
UnitaryMixture mixture_power(const UnitaryMixture& mix, int stages,
                             std::size_t max_entries = 4096);

/// Concatenation of `stages` independent draws from `mix`.
Word sample_schedule(const UnitaryMixture& mix, int stages, std::uint64_t seed);

/// The exact-time single-word mixture {(1, w)}.
UnitaryMixture deterministic_mixture(Word w);

nlohmann::json to_json(const Word& w);
Word word_from_json(const nlohmann::json& j);
nlohmann::json to_json(const UnitaryMixture& mix);
UnitaryMixture mixture_from_json(const nlohmann::json& j);

}  // namespace pfsim
