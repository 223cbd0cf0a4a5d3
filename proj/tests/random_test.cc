// Copyright 2026 The seqcloseness Authors
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

#include "seqcloseness/random.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <set>
#include <vector>

#include "oracles.h"

namespace seqcloseness {
namespace {

TEST(RandomTest, SameSeedSameStream) {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
}

TEST(RandomTest, EngineMatchesStandardMt19937_64) {
  // The 10000th output for the default seed is fixed by the C++ standard.
  std::mt19937_64 reference;
  Rng rng(std::mt19937_64::default_seed);
  std::uint64_t last = 0;
  for (int i = 0; i < 10000; ++i) last = rng.next_u64();
  EXPECT_EQ(last, 9981545732273789042ULL);
  reference.discard(9999);
  EXPECT_EQ(reference(), last);
}

TEST(RandomTest, DerivedSeedsAreDistinctAndOrderSensitive) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 50; ++i) {
    for (std::uint64_t j = 0; j < 50; ++j) {
      seen.insert(derive_seed(7, {i, j}));
    }
  }
  EXPECT_EQ(seen.size(), 2500u);
  EXPECT_NE(derive_seed(7, {1, 2}), derive_seed(7, {2, 1}));
  EXPECT_NE(derive_seed(7, {1}), derive_seed(8, {1}));
  EXPECT_EQ(derive_seed(7, {3, 4}), derive_seed(7, {3, 4}));
}

TEST(RandomTest, UniformStaysInUnitInterval) {
  Rng rng(1);
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 100000.0, 0.5, 0.005);
}

TEST(RandomTest, UniformIndexCoversRange) {
  Rng rng(3);
  std::vector<double> counts(7, 0.0);
  for (int i = 0; i < 70000; ++i) counts[rng.uniform_index(7)] += 1.0;
  EXPECT_GT(oracle::chi2_gof_p(counts, std::vector<double>(7, 10000.0)), 1e-3);
}

void expect_poisson_fit(double mean, std::uint64_t seed) {
  Rng rng(seed);
  constexpr int kDraws = 100000;
  const auto hi = static_cast<std::size_t>(mean + 10.0 * std::sqrt(mean) + 20.0);
  std::vector<double> observed(hi + 1, 0.0);
  double sum = 0.0;
  for (int i = 0; i < kDraws; ++i) {
    const std::uint64_t k = sample_poisson(rng, mean);
    sum += static_cast<double>(k);
    observed[std::min<std::size_t>(k, hi)] += 1.0;
  }
  std::vector<double> expected(hi + 1, 0.0);
  double mass = 0.0;
  for (std::size_t k = 0; k < hi; ++k) {
    expected[k] = kDraws * oracle::poisson_pmf(k, mean);
    mass += expected[k];
  }
  expected[hi] = kDraws - mass;
  EXPECT_GT(oracle::chi2_gof_p(observed, expected), 1e-3) << "mean " << mean;
  EXPECT_NEAR(sum / kDraws, mean, 5.0 * std::sqrt(mean / kDraws));
}

TEST(RandomTest, PoissonInversionBranchFitsPmf) {
  expect_poisson_fit(0.7, 11);
  expect_poisson_fit(4.0, 12);
  expect_poisson_fit(9.5, 13);
}

TEST(RandomTest, PoissonRejectionBranchFitsPmf) {
  expect_poisson_fit(10.0, 21);
  expect_poisson_fit(57.3, 22);
  expect_poisson_fit(2236.068, 23);
}

TEST(RandomTest, PoissonLargeMeanMoments) {
  Rng rng(5);
  const double mean = 223606.8;
  double sum = 0.0;
  double sq = 0.0;
  constexpr int kDraws = 20000;
  for (int i = 0; i < kDraws; ++i) {
    const double k = static_cast<double>(sample_poisson(rng, mean));
    sum += k;
    sq += k * k;
  }
  const double m = sum / kDraws;
  const double var = sq / kDraws - m * m;
  EXPECT_NEAR(m, mean, 5.0 * std::sqrt(mean / kDraws));
  EXPECT_NEAR(var / mean, 1.0, 0.05);
}

TEST(RandomTest, PoissonZeroMean) {
  Rng rng(1);
  EXPECT_EQ(sample_poisson(rng, 0.0), 0u);
  EXPECT_THROW(sample_poisson(rng, -1.0), std::invalid_argument);
}

void expect_binomial_fit(std::uint64_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  constexpr int kDraws = 100000;
  std::vector<double> observed(n + 1, 0.0);
  for (int i = 0; i < kDraws; ++i) observed[sample_binomial(rng, n, p)] += 1.0;
  std::vector<double> expected(n + 1, 0.0);
  for (std::uint64_t k = 0; k <= n; ++k) {
    expected[k] = kDraws * oracle::binomial_pmf(k, n, p);
  }
  EXPECT_GT(oracle::chi2_gof_p(observed, expected), 1e-3)
      << "n " << n << " p " << p;
}

TEST(RandomTest, BinomialInversionBranchFitsPmf) {
  expect_binomial_fit(20, 0.3, 31);
  expect_binomial_fit(1000, 0.004, 32);
  expect_binomial_fit(30, 0.9, 33);  // n * (1 - p) small
}

TEST(RandomTest, BinomialRejectionBranchFitsPmf) {
  expect_binomial_fit(100, 0.5, 41);
  expect_binomial_fit(400, 0.13, 42);
  expect_binomial_fit(250, 0.93, 43);
}

TEST(RandomTest, BinomialEdgeCases) {
  Rng rng(1);
  EXPECT_EQ(sample_binomial(rng, 0, 0.5), 0u);
  EXPECT_EQ(sample_binomial(rng, 17, 0.0), 0u);
  EXPECT_EQ(sample_binomial(rng, 17, 1.0), 17u);
  EXPECT_THROW(sample_binomial(rng, 5, 1.5), std::invalid_argument);
}

TEST(RandomTest, CategoricalFitsWeights) {
  Rng rng(9);
  const std::vector<double> w = {1.0, 0.0, 3.0, 6.0};
  std::vector<double> observed(4, 0.0);
  for (int i = 0; i < 100000; ++i) observed[sample_categorical(rng, w)] += 1.0;
  EXPECT_EQ(observed[1], 0.0);
  const std::vector<double> expected = {10000.0, 0.0, 30000.0, 60000.0};
  std::vector<double> obs_nz = {observed[0], observed[2], observed[3]};
  std::vector<double> exp_nz = {expected[0], expected[2], expected[3]};
  EXPECT_GT(oracle::chi2_gof_p(obs_nz, exp_nz), 1e-3);
}

TEST(RandomTest, MultinomialSumsToTrialsAndFits) {
  Rng rng(17);
  const std::vector<double> w = {0.0, 7.0, 2.0, 3.0, 2.0};
  std::vector<double> totals(5, 0.0);
  for (int rep = 0; rep < 200; ++rep) {
    const auto c = sample_multinomial(rng, 1000, w);
    ASSERT_EQ(std::accumulate(c.begin(), c.end(), std::uint64_t{0}), 1000u);
    ASSERT_EQ(c[0], 0u);
    for (int i = 0; i < 5; ++i) totals[i] += static_cast<double>(c[i]);
  }
  const double n = 200000.0;
  const std::vector<double> observed = {totals[1], totals[2], totals[3], totals[4]};
  const std::vector<double> expected = {n * 7 / 14, n * 2 / 14, n * 3 / 14, n * 2 / 14};
  EXPECT_GT(oracle::chi2_gof_p(observed, expected), 1e-3);
}

TEST(RandomTest, SamplersRejectBadWeights) {
  Rng rng(1);
  const std::vector<double> zero = {0.0, 0.0};
  const std::vector<double> negative = {1.0, -1.0};
  EXPECT_THROW(sample_categorical(rng, zero), std::invalid_argument);
  EXPECT_THROW(sample_multinomial(rng, 3, negative), std::invalid_argument);
}

}  // namespace
}  // namespace seqcloseness
