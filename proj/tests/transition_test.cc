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

#include "seqcloseness/transition.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "oracles.h"
#include "seqcloseness/errors.h"
#include "seqcloseness/simdata.h"

namespace seqcloseness {
namespace {

using Counts = std::vector<std::uint64_t>;

TEST(TransitionTest, SortedFixtureFirstRow) {
  const TransitionCounts t = count_transitions_from(fixtures().qy, 1);
  EXPECT_EQ(t.from_state, 1u);
  EXPECT_EQ(t.counts, (Counts{13, 1, 0, 0, 0}));
  EXPECT_EQ(t.total(), 14u);
}

TEST(TransitionTest, ShortSequencesHaveNoTransitions) {
  const StateSequence one(raw_state_spec(5), {3});
  const StateSequence none(raw_state_spec(5), {});
  for (StateId b = 1; b <= 5; ++b) {
    EXPECT_EQ(count_transitions_from(one, b).counts, Counts(5, 0));
    EXPECT_EQ(count_transitions_from(none, b).counts, Counts(5, 0));
  }
}

TEST(TransitionTest, MatchesOnePassOracleOnFixtures) {
  for (const StateSequence* seq :
       {&fixtures().qx, &fixtures().qy, &fixtures().qz}) {
    const auto pairs = oracle::pair_counts(seq->states());
    for (StateId b = 1; b <= 5; ++b) {
      const TransitionCounts t = count_transitions_from(*seq, b);
      for (StateId k = 1; k <= 5; ++k) {
        const auto it = pairs.find({b, k});
        EXPECT_EQ(t.counts[k - 1], it == pairs.end() ? 0u : it->second)
            << "b " << b << " k " << k;
      }
    }
  }
  // Pinned reference row, counted by hand from the fixture.
  EXPECT_EQ(count_transitions_from(fixtures().qx, 5).counts,
            (Counts{7, 1, 7, 5, 9}));
}

TEST(TransitionTest, RowTotalsCountOccurrencesBeforeLast) {
  const StateSequence& qx = fixtures().qx;
  for (StateId b = 1; b <= 5; ++b) {
    const auto occurrences = static_cast<std::uint64_t>(
        std::count(qx.states().begin(), qx.states().end() - 1, b));
    EXPECT_EQ(count_transitions_from(qx, b).total(), occurrences);
  }
}

TEST(TransitionTest, RejectsStateOutsideSpace) {
  EXPECT_THROW(count_transitions_from(fixtures().qx, 0), DomainError);
  EXPECT_THROW(count_transitions_from(fixtures().qx, 6), DomainError);
}

TEST(TransitionTest, FullMatrixConstantSequence) {
  const StateSequence seq(raw_state_spec(5), {3, 3, 3, 3});
  const Matrix<std::uint64_t> m = full_transition_counts(seq);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      EXPECT_EQ(m(i, j), (i == 2 && j == 2) ? 3u : 0u);
    }
  }
}

TEST(TransitionTest, FullMatrixAgreesWithRowsAndTotals) {
  for (const StateSequence* seq :
       {&fixtures().qx, &fixtures().qy, &fixtures().qz}) {
    const Matrix<std::uint64_t> m = full_transition_counts(*seq);
    std::uint64_t total = 0;
    for (StateId b = 1; b <= 5; ++b) {
      const auto row = m.row(b - 1);
      EXPECT_EQ(Counts(row.begin(), row.end()),
                count_transitions_from(*seq, b).counts);
      total += std::accumulate(row.begin(), row.end(), std::uint64_t{0});
    }
    EXPECT_EQ(total, seq->size() - 1);
  }
  const Matrix<std::uint64_t> empty =
      full_transition_counts(StateSequence(raw_state_spec(4), {}));
  EXPECT_EQ(empty, Matrix<std::uint64_t>(4, 4, 0));
}

TEST(SampleCountsTest, Degenerate) {
  Rng rng(1);
  EXPECT_EQ(sample_counts(Counts{3, 1, 4}, 0, rng), Counts(3, 0));
  EXPECT_EQ(sample_counts(Counts{1, 0, 0}, 7, rng), (Counts{7, 0, 0}));
  EXPECT_THROW(sample_counts(Counts{0, 0}, 3, rng), DomainError);
}

TEST(SampleCountsTest, FairCoinWithinFiveSigma) {
  Rng rng(99);
  const Counts c = sample_counts(Counts{1, 1}, 1000000, rng);
  EXPECT_EQ(c[0] + c[1], 1000000u);
  EXPECT_LE(std::fabs(static_cast<double>(c[0]) - 500000.0), 5 * 500.0);
}

TEST(SampleCountsTest, GoodnessOfFitOnFixtureRow) {
  const TransitionCounts t = count_transitions_from(fixtures().qx, 4);
  Rng rng(7);
  const Counts c = sample_counts(t.counts, 100000, rng);
  std::vector<double> observed;
  std::vector<double> expected;
  for (std::size_t k = 0; k < c.size(); ++k) {
    observed.push_back(static_cast<double>(c[k]));
    expected.push_back(1e5 * static_cast<double>(t.counts[k]) /
                       static_cast<double>(t.total()));
  }
  EXPECT_GT(oracle::chi2_gof_p(observed, expected), 0.01);
}

TEST(SampleCountsTest, SeedDeterminism) {
  Rng a(123);
  Rng b(123);
  const Counts w = {5, 2, 9, 0, 1};
  EXPECT_EQ(sample_counts(w, 5000, a), sample_counts(w, 5000, b));
}

}  // namespace
}  // namespace seqcloseness
