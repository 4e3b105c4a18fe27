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

#include "pfsim/bounds.hpp"
#include "test_util.hpp"

namespace pfsim {
namespace {

TEST(Lemma2, ThreeBlocks) {
  const Lemma2Result r = lemma2_max(3, default_grid_steps(3));
  EXPECT_NEAR(r.max_s, 8.0 / 27.0, 1e-9);
  EXPECT_TRUE(r.below_one_third());
  EXPECT_EQ(r.method, Lemma2Method::kGrid);
  EXPECT_EQ(r.argmax.size(), 3u);
}

TEST(Lemma2, FourBlocksMatchThree) {
  // With four blocks S = x2 x3 (x1 + x4), which has the same maximum as three.
  const Lemma2Result r = lemma2_max(4, default_grid_steps(4));
  EXPECT_NEAR(r.max_s, 8.0 / 27.0, 1e-6);
  EXPECT_TRUE(r.below_one_third());
}

TEST(Lemma2, FiveBlocks) {
  EXPECT_NEAR(lemma2_max(5, default_grid_steps(5)).max_s, 0.32, 1e-6);
}

TEST(Lemma2, BelowOneThirdThroughNine) {
  double prev = 0.0;
  for (int n = 3; n <= kLemma2GridMaxN; ++n) {
    const Lemma2Result r = lemma2_max(n, default_grid_steps(n));
    EXPECT_LT(r.max_s, 1.0 / 3.0 - 1e-6) << n;
    EXPECT_GE(r.max_s, prev - 1e-9) << n;
    prev = r.max_s;
    double sum = 0.0;
    for (double v : r.argmax) {
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
      sum += v;
    }
    EXPECT_NEAR(sum, 2.0, 1e-9);
    EXPECT_NEAR(s_value(r.argmax), r.max_s, 1e-12);
    if (n % 2 == 1) EXPECT_NEAR(r.max_s, lemma2_uniform_value(n), 1e-4) << n;
  }
}

TEST(Lemma2, LocalSearchBeyondGridLimit) {
  const Lemma2Result r = lemma2_max(11, 20);
  EXPECT_EQ(r.method, Lemma2Method::kRefinedLocal);
  EXPECT_LT(r.max_s, 1.0 / 3.0);
  EXPECT_NEAR(r.max_s, lemma2_uniform_value(11), 1e-4);
}

TEST(Lemma2, Rejections) {
  EXPECT_THROW(lemma2_max(2, 10), InvalidInput);
  EXPECT_THROW(lemma2_max(3, 1), InvalidInput);
  EXPECT_THROW(lemma2_uniform_value(4), InvalidInput);
  EXPECT_THROW(lemma2_uniform_value(1), InvalidInput);
}

TEST(Lemma2, UniformValues) {
  EXPECT_NEAR(lemma2_uniform_value(3), 8.0 / 27.0, 1e-15);
  EXPECT_NEAR(lemma2_uniform_value(5), 8.0 / 25.0, 1e-15);
  EXPECT_NEAR(lemma2_uniform_value(7), 16.0 / 49.0, 1e-15);
}

TEST(Audit, StrangIsObstructedByOneTwelfth) {
  const ScheduleAudit a = audit_schedule(Word({{1, 0.05}, {2, 0.1}, {1, 0.05}}), 1, 2, 0.1);
  EXPECT_TRUE(a.normalized);
  EXPECT_EQ(a.verdict, AuditVerdict::kObstructed);
  EXPECT_NEAR(a.s, 0.25, 1e-12);
  EXPECT_NEAR(a.gap, 1.0 / 12.0, 1e-12);
}

TEST(Audit, TrotterHasNoTriple) {
  const ScheduleAudit a = audit_schedule(Word({{1, 1.0}, {2, 1.0}}), 1, 2, 1.0);
  EXPECT_EQ(a.s, 0.0);
  EXPECT_NEAR(a.gap, 1.0 / 3.0, 1e-15);
}

TEST(Audit, WrongTotalsAreMistimed) {
  const ScheduleAudit a = audit_schedule(Word({{1, 0.45}, {2, 1.0}, {1, 0.45}}), 1, 2, 1.0);
  EXPECT_FALSE(a.normalized);
  EXPECT_NEAR(a.alpha_sum, 0.9, 1e-15);
  EXPECT_EQ(a.verdict, AuditVerdict::kMistimed);
  EXPECT_THROW(audit_schedule(Word({{1, 1.0}, {2, 1.0}}), 1, 2, 0.0), InvalidInput);
}

TEST(Audit, RandomNormalizedWordsStayBelowOneThird) {
  Rng rng(31);
  for (int trial = 0; trial < 10000; ++trial) {
    const int len = 2 + static_cast<int>(rng.below(11));
    std::vector<Step> steps;
    double ta = 0.0, tb = 0.0;
    for (int i = 0; i < len; ++i) {
      const int term = i < 2 ? i + 1 : 1 + static_cast<int>(rng.below(2));
      const double d = 0.01 + rng.uniform();
      (term == 1 ? ta : tb) += d;
      steps.push_back({term, d});
    }
    for (auto& s : steps) s.duration /= (s.term == 1 ? ta : tb);
    const ScheduleAudit a = audit_schedule(Word(steps), 1, 2, 1.0);
    ASSERT_TRUE(a.normalized);
    ASSERT_LT(a.s, 1.0 / 3.0) << trial;
  }
}

TEST(MinExponentials, Scaling) {
  const double c = 0.7;
  const double k1 = static_cast<double>(min_exponentials(10.0, 1e-6, c));
  const double k2 = static_cast<double>(min_exponentials(20.0, 1e-6, c));
  const double k3 = static_cast<double>(min_exponentials(10.0, 0.25e-6, c));
  EXPECT_NEAR(k2 / k1, std::pow(2.0, 1.5), 1e-3);
  EXPECT_NEAR(k3 / k1, 2.0, 1e-3);
  const long long k = min_exponentials(1.0, 0.01, 1.0);
  EXPECT_EQ(k, 10);
  EXPECT_THROW(min_exponentials(-1.0, 0.1, 1.0), InvalidInput);
}

TEST(CubicSum, EqualSplitIsOptimal) {
  const std::vector<double> uneven = {0.25, 0.75};
  EXPECT_NEAR(cubic_sum(uneven), 0.4375, 1e-15);
  EXPECT_NEAR(equal_split_cubic_sum(1.0, 2), 0.25, 1e-15);
  Rng rng(32);
  for (int trial = 0; trial < 1000; ++trial) {
    const int parts = 1 + static_cast<int>(rng.below(8));
    std::vector<double> x(parts);
    double sum = 0.0;
    for (double& v : x) sum += (v = 0.01 + rng.uniform());
    for (double& v : x) v *= 2.0 / sum;
    EXPECT_GE(cubic_sum(x), equal_split_cubic_sum(2.0, parts) - 1e-12);
  }
}

TEST(BoundsJson, CarriesVerdict) {
  const nlohmann::json j = to_json(audit_schedule(Word({{1, 1.0}, {2, 1.0}}), 1, 2, 1.0));
  EXPECT_EQ(j.at("verdict"), "obstructed");
  EXPECT_EQ(to_json(lemma2_max(3, 8)).at("method"), "grid");
}

}  // namespace
}  // namespace pfsim
