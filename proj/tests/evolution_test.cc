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

#include "seqcloseness/evolution.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "seqcloseness/errors.h"
#include "seqcloseness/simdata.h"

namespace seqcloseness {
namespace {

StateSequence iota_sequence(std::size_t len) {
  std::vector<StateId> s(len);
  for (std::size_t i = 0; i < len; ++i) s[i] = static_cast<StateId>(1 + i % 5);
  return StateSequence(raw_state_spec(5), std::move(s));
}

std::vector<std::size_t> lengths(const std::vector<StateSequence>& segs) {
  std::vector<std::size_t> out;
  for (const auto& s : segs) out.push_back(s.size());
  return out;
}

TEST(SegmentByCountTest, Examples) {
  EXPECT_EQ(lengths(segment_by_count(iota_sequence(100), 4)),
            (std::vector<std::size_t>{25, 25, 25, 25}));
  EXPECT_EQ(lengths(segment_by_count(iota_sequence(10), 3)),
            (std::vector<std::size_t>{3, 3, 4}));
  const auto whole = segment_by_count(fixtures().qx, 1);
  ASSERT_EQ(whole.size(), 1u);
  EXPECT_EQ(whole[0], fixtures().qx);
}

TEST(SegmentByCountTest, PiecesConcatenateToInput) {
  const auto segs = segment_by_count(fixtures().qx, 7);
  std::vector<StateId> joined;
  for (const auto& s : segs) joined.insert(joined.end(), s.states().begin(), s.states().end());
  EXPECT_EQ(joined, fixtures().qx.states());
}

TEST(SegmentByCountTest, RejectsBadCounts) {
  EXPECT_THROW(segment_by_count(iota_sequence(5), 0), DomainError);
  EXPECT_THROW(segment_by_count(iota_sequence(5), 6), DomainError);
}

TEST(SegmentByCalendarTest, LabelsAndSlices) {
  std::vector<Date> dates;
  for (Date d = parse_date("2020-01-30"); d <= parse_date("2020-02-02");
       d += std::chrono::days{1}) {
    dates.push_back(d);
  }
  const StateSequence seq(raw_state_spec(5), {1, 2, 3, 4});
  const auto segs = segment_by_calendar(dates, seq, Period::kMonth);
  ASSERT_EQ(segs.size(), 2u);
  EXPECT_EQ(segs[0].label, "2020-01");
  EXPECT_EQ(segs[0].states.states(), (std::vector<StateId>{1, 2}));
  EXPECT_EQ(segs[1].label, "2020-02");
  EXPECT_EQ(segs[1].states.states(), (std::vector<StateId>{3, 4}));
  EXPECT_THROW(segment_by_calendar(std::span<const Date>(dates).first(3), seq,
                                   Period::kMonth),
               DomainError);
}

TEST(PairwiseClosenessTest, IdenticalSegments) {
  const std::vector<LabeledSegment> segs = {{"a", fixtures().qx},
                                            {"b", fixtures().qx}};
  const EvolutionMatrices m = pairwise_closeness(segs, ClosenessParams{});
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m.labels, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(m.accept(0, 1), 1.0);
  EXPECT_EQ(m.accept(1, 0), 1.0);
  EXPECT_LT(m.d(0, 1), 0.02);
  EXPECT_LT(m.d(1, 0), 0.02);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(m.accept(i, i), 1.0);
    EXPECT_EQ(m.reject(i, i), 0.0);
    EXPECT_EQ(m.z(i, i), 0.0);
    EXPECT_EQ(m.d(i, i), 0.0);
  }
  EXPECT_TRUE(m.warnings.empty());
}

TEST(PairwiseClosenessTest, PlantedChainsGiveBlockStructure) {
  // Chain A is the reference matrix; chain B is sticky, so every row of B is
  // at total variation distance >= 0.5 from the matching row of A.
  Matrix<double> pb(5, 5, 0.05);
  for (std::size_t i = 0; i < 5; ++i) pb(i, i) = 0.8;
  const TransitionMatrix a = fixtures().matrix;
  const TransitionMatrix b{pb};
  std::vector<LabeledSegment> segs;
  Rng rng(2718);
  for (int s = 0; s < 3; ++s) {
    segs.push_back({"A" + std::to_string(s),
                    generate_trajectory(a, 20000, uniform_initial(a), rng)});
  }
  for (int s = 0; s < 3; ++s) {
    segs.push_back({"B" + std::to_string(s),
                    generate_trajectory(b, 20000, uniform_initial(b), rng)});
  }
  ClosenessParams p;
  p.epsilon = 0.3;
  p.c = 100;
  p.seed = 5;
  const EvolutionMatrices m = pairwise_closeness(segs, p);
  double within = 0.0;
  double across = 0.0;
  int n_within = 0;
  int n_across = 0;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      if (i == j) continue;
      if ((i < 3) == (j < 3)) {
        within += m.accept(i, j);
        ++n_within;
      } else {
        across += m.accept(i, j);
        ++n_across;
        EXPECT_GT(m.d(i, j), 0.3);
      }
    }
  }
  EXPECT_GE(within / n_within, 0.8);
  EXPECT_LE(across / n_across, 0.1);
}

TEST(PairwiseClosenessTest, UndersampledSegmentIsAllSentinel) {
  const std::vector<LabeledSegment> segs = {
      {"full", fixtures().qx},
      {"tiny", StateSequence(raw_state_spec(5), {3, 4})},
      {"also", fixtures().qz}};
  const EvolutionMatrices m = pairwise_closeness(segs, ClosenessParams{});
  for (std::size_t k : {0u, 2u}) {
    for (const Matrix<double>* mat : {&m.accept, &m.reject, &m.z, &m.d}) {
      EXPECT_EQ((*mat)(1, k), kSentinel);
      EXPECT_EQ((*mat)(k, 1), kSentinel);
    }
    EXPECT_EQ(m.sentinel(1, k), 1);
    EXPECT_EQ(m.sentinel(k, 1), 1);
  }
  EXPECT_EQ(m.sentinel(0, 2), 0);
  EXPECT_EQ(m.accept(1, 1), 1.0);
  ASSERT_EQ(m.warnings.size(), 4u);
  EXPECT_EQ(m.warnings[0].row, 0u);
  EXPECT_EQ(m.warnings[0].col, 1u);
  EXPECT_EQ(m.warnings[3].row, 2u);
}

TEST(PairwiseClosenessTest, NeedsTwoSegments) {
  const std::vector<LabeledSegment> one = {{"x", fixtures().qx}};
  EXPECT_THROW(pairwise_closeness(one, ClosenessParams{}), DomainError);
}

TEST(PairwiseClosenessTest, ThreadCountDoesNotChangeOutput) {
  const auto pieces = segment_by_count(fixtures().qx, 4);
  std::vector<LabeledSegment> segs;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    segs.push_back({std::to_string(i), pieces[i]});
  }
  ClosenessParams p;
  p.epsilon = 0.4;
  p.c = 1;
  p.seed = 77;
  const EvolutionMatrices one = pairwise_closeness(segs, p, Aggregation::kMean, 1);
  const EvolutionMatrices many = pairwise_closeness(segs, p, Aggregation::kMean, 8);
  EXPECT_EQ(one.accept, many.accept);
  EXPECT_EQ(one.reject, many.reject);
  EXPECT_EQ(one.z, many.z);
  EXPECT_EQ(one.d, many.d);
  EXPECT_EQ(one.sentinel, many.sentinel);
}

TEST(PairwiseClosenessTest, CellsAreIndependentDraws) {
  const std::vector<LabeledSegment> segs = {{"x", fixtures().qx},
                                            {"z", fixtures().qz}};
  const EvolutionMatrices m = pairwise_closeness(segs, ClosenessParams{});
  EXPECT_NE(m.z(0, 1), m.z(1, 0));
}

// z(i, j) and z(j, i) are two independent estimates of the same quantity, so
// their gap stays within Monte Carlo error.
TEST(PairwiseClosenessTest, AsymmetryWithinMonteCarloError) {
  ClosenessParams p;
  p.iterations = 200;
  p.seed = 4;
  for (const StateSequence* other : {&fixtures().qz, &fixtures().qy}) {
    const Matrix<std::uint64_t> cx = full_transition_counts(fixtures().qx);
    const Matrix<std::uint64_t> co = full_transition_counts(*other);
    double gap = 0.0;
    double var = 0.0;
    for (std::size_t b = 0; b < 5; ++b) {
      const TransitionCounts tx{static_cast<StateId>(b + 1), {cx.row(b).begin(), cx.row(b).end()}};
      const TransitionCounts to{static_cast<StateId>(b + 1), {co.row(b).begin(), co.row(b).end()}};
      Rng r1(derive_seed(p.seed, {0, 1, b}));
      Rng r2(derive_seed(p.seed, {1, 0, b}));
      const StateTrials forward = run_state_trials(tx, to, p, r1);
      const StateTrials backward = run_state_trials(to, tx, p, r2);
      for (const StateTrials* t : {&forward, &backward}) {
        const double n = static_cast<double>(t->z.size());
        const double mean = std::accumulate(t->z.begin(), t->z.end(), 0.0) / n;
        double ss = 0.0;
        for (double z : t->z) ss += (z - mean) * (z - mean);
        var += ss / (n - 1.0) / n / 25.0;  // variance of the 5-state mean
        gap += (t == &forward ? mean : -mean) / 5.0;
      }
    }
    EXPECT_LT(std::fabs(gap), 3.0 * std::sqrt(var));
  }
}

TEST(SymmetrizedTest, AveragesAndDefersAroundSentinels) {
  Matrix<double> m(3, 3, 0.0);
  Matrix<std::uint8_t> mask(3, 3, 0);
  m(0, 1) = 0.2;
  m(1, 0) = 0.6;
  m(0, 2) = kSentinel;
  mask(0, 2) = 1;
  m(2, 0) = 0.9;
  m(1, 2) = kSentinel;
  m(2, 1) = kSentinel;
  mask(1, 2) = 1;
  mask(2, 1) = 1;
  const Matrix<double> s = symmetrized(m, mask);
  EXPECT_DOUBLE_EQ(s(0, 1), 0.4);
  EXPECT_DOUBLE_EQ(s(1, 0), 0.4);
  EXPECT_DOUBLE_EQ(s(0, 2), 0.9);
  EXPECT_DOUBLE_EQ(s(2, 0), 0.9);
  EXPECT_EQ(s(1, 2), kSentinel);
  // A genuine -1 is averaged like any other value.
  Matrix<double> z(2, 2, 0.0);
  z(0, 1) = -1.0;
  z(1, 0) = 3.0;
  EXPECT_DOUBLE_EQ(symmetrized(z, Matrix<std::uint8_t>(2, 2, 0))(0, 1), 1.0);
  EXPECT_THROW(symmetrized(z, Matrix<std::uint8_t>(3, 3, 0)), DomainError);
}

}  // namespace
}  // namespace seqcloseness
