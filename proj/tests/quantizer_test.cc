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

#include "seqcloseness/quantizer.h"

#include <gtest/gtest.h>

#include <vector>

#include "seqcloseness/errors.h"
#include "seqcloseness/random.h"

namespace seqcloseness {
namespace {

TEST(QuantizerTest, TwentyBinsOverUnitInterval) {
  const QuantizationSpec spec = build_uniform_spec(1.0, 20, 1);
  EXPECT_EQ(spec.state_count(), 20u);
  const std::vector<double> edges = spec.edges();
  ASSERT_EQ(edges.size(), 21u);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    EXPECT_NEAR(edges[i], 0.05 * static_cast<double>(i), 1e-15);
  }
  EXPECT_EQ(edges.back(), 1.0);
}

TEST(QuantizerTest, SmallestLegalBinCount) {
  const QuantizationSpec spec = build_uniform_spec(1.0, 2, 1);
  EXPECT_EQ(spec.edges(), (std::vector<double>{0.0, 0.5, 1.0}));
  EXPECT_EQ(spec.state_count(), 2u);
}

TEST(QuantizerTest, TwoDimensionalStateCount) {
  const QuantizationSpec spec = build_uniform_spec(0.5, 5, 2);
  EXPECT_EQ(spec.state_count(), 25u);
  EXPECT_NEAR(spec.bin_width(), 0.1, 1e-15);
}

TEST(QuantizerTest, RejectsInvalidSpecs) {
  EXPECT_THROW(build_uniform_spec(1.0, 1, 1), DomainError);
  EXPECT_THROW(build_uniform_spec(0.0, 5, 1), DomainError);
  EXPECT_THROW(build_uniform_spec(1.2, 5, 1), DomainError);
  EXPECT_THROW(build_uniform_spec(0.5, 5, 0), DomainError);
}

TEST(QuantizerTest, OpenClosedBins) {
  const QuantizationSpec spec = build_uniform_spec(1.0, 20, 1);
  EXPECT_EQ(quantize_value(spec, 0.13), 3u);
  EXPECT_EQ(quantize_value(spec, 0.0), 1u);
  EXPECT_EQ(quantize_value(spec, 1.0), 20u);
  EXPECT_EQ(quantize_value(spec, 0.05), 1u);  // upper edge is inclusive
  EXPECT_EQ(quantize_value(spec, 0.15), 3u);
  EXPECT_EQ(quantize_value(spec, 0.1500000001), 4u);
}

TEST(QuantizerTest, RejectsOutOfRangeValues) {
  const QuantizationSpec spec = build_uniform_spec(0.5, 10, 1);
  EXPECT_THROW(quantize_value(spec, 0.51), DomainError);
  EXPECT_THROW(quantize_value(spec, -0.01), DomainError);
}

TEST(QuantizerTest, FlattensWithFirstDimensionFastest) {
  const QuantizationSpec spec = build_uniform_spec(1.0, 4, 2);
  const std::vector<double> a = {0.1, 0.1};   // bins (1, 1)
  const std::vector<double> b = {0.3, 0.1};   // bins (2, 1)
  const std::vector<double> c = {0.1, 0.3};   // bins (1, 2)
  const std::vector<double> d = {1.0, 1.0};   // bins (4, 4)
  EXPECT_EQ(quantize_value(spec, a), 1u);
  EXPECT_EQ(quantize_value(spec, b), 2u);
  EXPECT_EQ(quantize_value(spec, c), 5u);
  EXPECT_EQ(quantize_value(spec, d), 16u);
  const std::vector<double> wrong_dim = {0.1};
  EXPECT_THROW(quantize_value(spec, wrong_dim), DomainError);
}

TEST(QuantizerTest, SequenceExamples) {
  const std::vector<double> series = {0.1, 0.9, 0.4};
  const StateSequence seq = quantize_sequence(build_uniform_spec(1.0, 2, 1), series);
  EXPECT_EQ(seq.states(), (std::vector<StateId>{1, 2, 1}));

  const QuantizationSpec twenty = build_uniform_spec(1.0, 20, 1);
  EXPECT_TRUE(quantize_sequence(twenty, std::vector<double>{}).empty());
  const StateSequence constant =
      quantize_sequence(twenty, std::vector<double>(6, 0.07));
  EXPECT_EQ(constant.states(), std::vector<StateId>(6, 2));
}

TEST(QuantizerTest, SequenceErrorNamesIndex) {
  const QuantizationSpec spec = build_uniform_spec(0.5, 5, 1);
  try {
    quantize_sequence(spec, std::vector<double>{0.1, 0.2, 0.7});
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("index 2"), std::string::npos);
  }
}

TEST(QuantizerTest, StateSequenceValidatesRange) {
  EXPECT_THROW(StateSequence(raw_state_spec(5), {1, 6}), DomainError);
  EXPECT_THROW(StateSequence(raw_state_spec(5), {0, 1}), DomainError);
  EXPECT_NO_THROW(StateSequence(raw_state_spec(5), {1, 5}));
}

TEST(QuantizerTest, DefaultPMaxRoundsUp) {
  EXPECT_DOUBLE_EQ(default_p_max(std::vector<double>{0.0123, 0.004}), 0.013);
  EXPECT_DOUBLE_EQ(default_p_max(std::vector<double>{0.013}), 0.013);
  EXPECT_DOUBLE_EQ(default_p_max(std::vector<double>{0.97, 0.2}), 0.97);
  EXPECT_DOUBLE_EQ(default_p_max(std::vector<double>{0.996}), 1.0);
  EXPECT_DOUBLE_EQ(default_p_max(std::vector<double>{0.0, 0.0}), 1.0);
  EXPECT_DOUBLE_EQ(default_p_max(std::vector<double>{}), 1.0);
}

TEST(QuantizerPropertyTest, MonotoneAndContainedInBin) {
  Rng rng(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    const double p_max = 0.01 + 0.99 * rng.uniform();
    const auto bins = static_cast<std::uint32_t>(2 + rng.uniform_index(40));
    const QuantizationSpec spec = build_uniform_spec(p_max, bins, 1);
    double u = p_max * rng.uniform();
    double v = p_max * rng.uniform();
    if (u > v) std::swap(u, v);
    const StateId su = quantize_value(spec, u);
    const StateId sv = quantize_value(spec, v);
    ASSERT_LE(su, sv);
    if (u > 0.0) {
      ASSERT_LT(spec.edge(su), u) << "p_max " << p_max << " B " << bins;
      ASSERT_LE(u, spec.edge(su + 1)) << "p_max " << p_max << " B " << bins;
    }
  }
}

TEST(QuantizerPropertyTest, EdgesThemselvesLandBelow) {
  for (std::uint32_t bins : {3u, 7u, 10u, 20u, 33u}) {
    for (double p_max : {0.013, 0.1, 0.3, 1.0}) {
      const QuantizationSpec spec = build_uniform_spec(p_max, bins, 1);
      for (std::uint32_t i = 2; i <= bins + 1; ++i) {
        ASSERT_EQ(quantize_value(spec, spec.edge(i)), i - 1);
      }
    }
  }
}

TEST(QuantizerPropertyTest, LengthPreserved) {
  Rng rng(5);
  const QuantizationSpec spec = build_uniform_spec(1.0, 20, 1);
  for (std::size_t len : {0u, 1u, 17u, 400u}) {
    std::vector<double> series(len);
    for (double& v : series) v = rng.uniform();
    EXPECT_EQ(quantize_sequence(spec, series).size(), len);
  }
}

}  // namespace
}  // namespace seqcloseness
