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
#include <map>

#include "pfsim/channels.hpp"
#include "pfsim/schedules.hpp"
#include "test_util.hpp"

namespace pfsim {
namespace {

using testing::max_abs;

TermSet diagonal_termset(int dim, int m, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<ComplexMatrix> terms;
  for (int k = 0; k < m; ++k) {
    ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) h(i, i) = rng.normal();
    terms.push_back(h);
  }
  return TermSet(terms, {});
}

TEST(Word, DurationsMustBePositive) {
  EXPECT_THROW(Word({{1, 0.0}}), InvalidInput);
  EXPECT_THROW(Word({{1, -0.1}}), InvalidInput);
  EXPECT_THROW(Word({{0, 0.1}}), InvalidInput);
  Word w;
  EXPECT_THROW(w.push_back({1, std::nan("")}), InvalidInput);
}

TEST(WordUnitary, EmptyAndSingleStep) {
  const TermSet ts = random_termset(3, 2, 1.0, 2);
  EXPECT_LE(max_abs(word_unitary(ts, Word()) - ComplexMatrix::Identity(3, 3)), 0.0);
  EXPECT_LE(max_abs(word_unitary(ts, Word({{2, 0.4}})) - expm_hermitian(ts.term(2), 0.4)), 0.0);
}

TEST(WordUnitary, FirstStepActsFirst) {
  const TermSet ts = random_termset(3, 2, 1.0, 3);
  const ComplexMatrix expected = expm_hermitian(ts.term(2), 0.2) * expm_hermitian(ts.term(1), 0.1);
  EXPECT_LE(max_abs(word_unitary(ts, Word({{1, 0.1}, {2, 0.2}})) - expected), 1e-15);
}

TEST(WordUnitary, SemigroupOnRepeatedTerm) {
  const TermSet ts = random_termset(4, 2, 1.0, 5);
  EXPECT_LE(max_abs(word_unitary(ts, Word({{1, 0.3}, {1, 0.45}})) -
                    word_unitary(ts, Word({{1, 0.75}}))),
            1e-10);
}

TEST(WordUnitary, InvalidIndexRejected) {
  const TermSet ts = random_termset(2, 2, 1.0, 5);
  EXPECT_THROW(word_unitary(ts, Word({{3, 0.1}})), InvalidInput);
}

TEST(TrotterWord, Unrolled) {
  const TermSet ts = random_termset(2, 2, 1.0, 1);
  EXPECT_EQ(trotter_word(ts, 0.5, 1), Word({{1, 0.5}, {2, 0.5}}));
  EXPECT_EQ(trotter_word(ts, 0.5, 2), Word({{1, 0.5}, {2, 0.5}, {1, 0.5}, {2, 0.5}}));
  EXPECT_THROW(trotter_word(ts, 0.0, 1), InvalidInput);
  EXPECT_THROW(trotter_word(ts, 0.1, 0), InvalidInput);
}

TEST(StrangWord, MergedPalindrome) {
  const TermSet ts = random_termset(2, 2, 1.0, 1);
  EXPECT_EQ(strang_word(ts, 1.0, 1), Word({{1, 0.5}, {2, 1.0}, {1, 0.5}}));
  EXPECT_EQ(strang_word(ts, 1.0, 2), Word({{1, 0.5}, {2, 1.0}, {1, 1.0}, {2, 1.0}, {1, 0.5}}));
  EXPECT_EQ(strang_word(ts, 1.0, 1, StrangMerge::kUnmerged),
            Word({{1, 0.5}, {2, 0.5}, {2, 0.5}, {1, 0.5}}));
}

TEST(StrangWord, BookkeepingForThreeTerms) {
  const TermSet ts = random_termset(2, 3, 1.0, 1);
  const Word unmerged = strang_word(ts, 0.2, 2, StrangMerge::kUnmerged);
  const Word merged = strang_word(ts, 0.2, 2);
  EXPECT_EQ(unmerged.size(), 12u);
  EXPECT_EQ(merged.size(), 9u);
  for (int k = 1; k <= 3; ++k) {
    EXPECT_NEAR(merged.total_duration(k), 0.4, 1e-15);
    EXPECT_NEAR(unmerged.total_duration(k), 0.4, 1e-15);
  }
  EXPECT_LE(max_abs(word_unitary(ts, merged) - word_unitary(ts, unmerged)), 1e-12);
}

TEST(StrangWord, ReversalPreservesErrorNorm) {
  const TermSet ts = random_termset(4, 3, 1.0, 9);
  const Word w = strang_word(ts, 0.3, 2);
  const ComplexMatrix u0 = exact_evolution(ts, 0.6);
  // A palindrome equals its own reverse; the reversed word's unitary is the
  // transpose-like mirror, and ||U - U0|| = ||U^dag - U0^dag||.
  const ComplexMatrix u = word_unitary(ts, w);
  const ComplexMatrix ur = word_unitary(ts, w.reversed());
  EXPECT_NEAR(spectral_norm(u - u0), spectral_norm(ur - u0), 1e-12);
  EXPECT_NEAR(spectral_norm(u - u0), spectral_norm(u.adjoint() - u0.adjoint()), 1e-12);
}

TEST(Schemes, PerTermDurationTotals) {
  const TermSet ts = random_termset(2, 3, 1.0, 1);
  for (int k = 1; k <= 3; ++k) {
    EXPECT_NEAR(trotter_word(ts, 0.25, 4).total_duration(k), 1.0, 1e-15);
    EXPECT_NEAR(strang_word(ts, 0.25, 4).total_duration(k), 1.0, 1e-15);
  }
}

TEST(Schemes, CommutingTermsAreExactExceptMemoryless) {
  const TermSet ts = diagonal_termset(4, 3, 12);
  const double t = 0.9;
  const int segments = 3;
  const double dt = t / segments;
  const ComplexMatrix u0 = exact_evolution(ts, t);
  EXPECT_LE(max_abs(word_unitary(ts, trotter_word(ts, dt, segments)) - u0), 1e-10);
  EXPECT_LE(max_abs(word_unitary(ts, strang_word(ts, dt, segments)) - u0), 1e-10);
  const auto alg2 = mixture_superoperator(ts, alg2_stage_mixture(ts, dt));
  EXPECT_LE(max_abs(channel_power(alg2, segments).mat() - Superoperator::conjugation(u0).mat()),
            1e-10);
  // The memoryless scheme randomizes how long each term runs, so even
  // commuting terms leave a dephasing error.
  const auto alg1 = mixture_superoperator(ts, alg1_stage_mixture(ts, dt));
  EXPECT_GT(max_abs(channel_power(alg1, 3 * segments).mat() - Superoperator::conjugation(u0).mat()),
            1e-3);
}

TEST(Alg1Stage, UniformSingleSteps) {
  const TermSet ts = random_termset(2, 3, 1.0, 1);
  const UnitaryMixture mix = alg1_stage_mixture(ts, 0.1);
  ASSERT_EQ(mix.size(), 3u);
  double sum = 0.0;
  for (int k = 0; k < 3; ++k) {
    EXPECT_DOUBLE_EQ(mix.entries()[k].probability, 1.0 / 3.0);
    EXPECT_EQ(mix.entries()[k].word, Word({{k + 1, 0.1}}));
    sum += mix.entries()[k].probability;
  }
  EXPECT_NEAR(sum, 1.0, 1e-15);
}

TEST(Alg2Stage, AllOrderings) {
  const TermSet two = random_termset(2, 2, 1.0, 1);
  const UnitaryMixture mix = alg2_stage_mixture(two, 0.1);
  ASSERT_EQ(mix.size(), 2u);
  EXPECT_EQ(mix.entries()[0].word, Word({{1, 0.1}, {2, 0.1}}));
  EXPECT_EQ(mix.entries()[1].word, Word({{2, 0.1}, {1, 0.1}}));
  EXPECT_DOUBLE_EQ(mix.entries()[0].probability, 0.5);

  const UnitaryMixture three = alg2_stage_mixture(random_termset(2, 3, 1.0, 1), 0.2);
  EXPECT_EQ(three.size(), 6u);
  for (const auto& e : three.entries())
    for (int k = 1; k <= 3; ++k) EXPECT_DOUBLE_EQ(e.word.total_duration(k), 0.2);
}

TEST(Alg2Stage, RejectsTooManyTerms) {
  std::vector<ComplexMatrix> terms;
  for (int k = 0; k < 7; ++k) terms.push_back(pauli::z() * (k + 1.0));
  EXPECT_THROW(alg2_stage_mixture(TermSet(terms, {}), 0.1), InvalidInput);
}

TEST(Mixture, Validation) {
  EXPECT_THROW(UnitaryMixture({}), InvalidInput);
  EXPECT_THROW(UnitaryMixture({{0.5, Word()}, {0.4, Word()}}), InvalidInput);
  EXPECT_THROW(UnitaryMixture({{1.5, Word()}, {-0.5, Word()}}), InvalidInput);
}

TEST(MixturePower, ProductDistribution) {
  const TermSet ts = random_termset(2, 2, 1.0, 1);
  const UnitaryMixture group = mixture_power(alg1_stage_mixture(ts, 0.1), 2);
  ASSERT_EQ(group.size(), 4u);
  EXPECT_EQ(group.entries()[1].word, Word({{1, 0.1}, {2, 0.1}}));
  for (const auto& e : group.entries()) EXPECT_DOUBLE_EQ(e.probability, 0.25);
  EXPECT_THROW(mixture_power(alg2_stage_mixture(random_termset(2, 6, 1.0, 1), 0.1), 2),
               InvalidInput);
}

TEST(SampleSchedule, SingleEntryAndDeterminism) {
  const Word w({{2, 0.3}, {1, 0.1}});
  EXPECT_EQ(sample_schedule(deterministic_mixture(w), 1, 5), w);
  const TermSet ts = random_termset(2, 3, 1.0, 1);
  const UnitaryMixture mix = alg2_stage_mixture(ts, 0.1);
  EXPECT_EQ(sample_schedule(mix, 20, 77), sample_schedule(mix, 20, 77));
  EXPECT_NE(sample_schedule(mix, 20, 77), sample_schedule(mix, 20, 78));
}

TEST(SampleSchedule, EmpiricalFrequenciesWithinThreeSigma) {
  const TermSet ts = random_termset(2, 3, 1.0, 1);
  const std::vector<MixtureEntry> entries = {{0.5, Word({{1, 0.1}})},
                                             {0.3, Word({{2, 0.1}})},
                                             {0.2, Word({{3, 0.1}})}};
  const UnitaryMixture mix(entries);
  const int draws = 10000;
  const Word w = sample_schedule(mix, draws, 2024);
  std::map<int, int> counts;
  for (const auto& s : w.steps()) ++counts[s.term];
  for (const auto& e : entries) {
    const double p = e.probability;
    const double sigma = std::sqrt(draws * p * (1 - p));
    EXPECT_LE(std::abs(counts[e.word.steps()[0].term] - draws * p), 3 * sigma);
  }
}

TEST(ScheduleJson, RoundTrip) {
  const TermSet ts = random_termset(2, 3, 1.0, 1);
  const UnitaryMixture mix = alg2_stage_mixture(ts, 0.123456789);
  const UnitaryMixture back = mixture_from_json(nlohmann::json::parse(to_json(mix).dump()));
  ASSERT_EQ(back.size(), mix.size());
  for (std::size_t i = 0; i < mix.size(); ++i) {
    EXPECT_EQ(back.entries()[i].word, mix.entries()[i].word);
    EXPECT_EQ(back.entries()[i].probability, mix.entries()[i].probability);
  }
  EXPECT_EQ(to_json(Word({{1, 0.5}})).dump(), R"({"steps":[[1,0.5]]})");
  EXPECT_THROW(word_from_json(nlohmann::json::parse(R"({"steps":[[1,-0.5]]})")), InvalidInput);
  EXPECT_THROW(word_from_json(nlohmann::json::parse(R"({"steps":[[1]]})")), InvalidInput);
}

}  // namespace
}  // namespace pfsim
