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

// Closeness testing of two state sequences, one conditional distribution at a
// time.
//
// For every state b the outgoing transition counts of both sequences are the
// two distributions under test. If either side has at most `min_transitions`
// observed transitions the state is a sentinel (all outputs -1). Otherwise the
// test is repeated `iterations` times:
//
//   m        = C * max(B^(2/3) / eps^(4/3), B^(1/2) / eps^2)
//   mx, my   ~ Poisson(m), drawn independently
//   cx, cy   = counts of mx (my) draws from the x (y) conditional
//   z        = sum_k ((cx_k - cy_k)^2 - (cx_k + cy_k)) / (cx_k + cy_k)
//   d        = total variation between the two empirical distributions
//   accept  <=> z <= m^2 eps^2 / (8 (m + B))
//   reject  <=> d > eps
//
// and the state reports the accept/reject frequencies and the mean z and d.
// B is the total number of states.

#ifndef SEQCLOSENESS_CLOSENESS_TESTER_H_
#define SEQCLOSENESS_CLOSENESS_TESTER_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seqcloseness/quantizer.h"
#include "seqcloseness/random.h"
#include "seqcloseness/transition.h"

namespace seqcloseness {

inline constexpr double kSentinel = -1.0;

struct ClosenessParams {
  double epsilon = 0.1;
  double c = 100.0;
  std::uint32_t iterations = 5;
  // A state is tested only when both sides have more transitions than this.
  std::uint64_t min_transitions = 1;
  // B^d. Zero means "take it from the sequences under test".
  std::size_t state_count = 0;
  std::uint64_t seed = 0;

  // Throws DomainError unless epsilon in (0,1), c > 0, iterations >= 1.
  void validate() const;
};

struct StateTestResult {
  double accept_prob = kSentinel;
  double reject_prob = kSentinel;
  double z_mean = kSentinel;
  double d_mean = kSentinel;
  bool sentinel = true;

  static StateTestResult Sentinel() { return {}; }

  friend bool operator==(const StateTestResult&,
                         const StateTestResult&) = default;
};

// Raw per-iteration outcomes of one state's test.
struct StateTrials {
  double sample_size = 0.0;  // m
  double threshold = 0.0;    // accept threshold for z
  std::vector<double> z;
  std::vector<double> d;
  std::uint32_t accepted = 0;
  std::uint32_t rejected = 0;
};

struct ClosenessResult {
  std::vector<StateTestResult> per_state;  // index b - 1
  ClosenessParams params;                  // state_count resolved
};

enum class Aggregation { kMean, kMedian, kMin };

std::string_view to_string(Aggregation method);
// Accepts "mean", "median", "min"; throws DomainError otherwise.
Aggregation parse_aggregation(std::string_view name);

struct ClosenessSummary {
  double accept_prob = 0.0;
  double reject_prob = 0.0;
  double z = 0.0;
  double d = 0.0;
  Aggregation method = Aggregation::kMean;
  std::size_t states_used = 0;
};

// C * max(B^(2/3) / eps^(4/3), B^(1/2) / eps^2).
double required_sample_size(double epsilon, double c, std::size_t state_count);

// m^2 eps^2 / (8 (m + B)).
double accept_threshold(double m, double epsilon, std::size_t state_count);

// Bins where both counts are zero contribute nothing.
double chi2_statistic(std::span<const std::uint64_t> cx,
                      std::span<const std::uint64_t> cy);

// Total variation between the normalized count vectors. Throws DomainError if
// either vector sums to zero.
double tv_distance(std::span<const std::uint64_t> cx,
                   std::span<const std::uint64_t> cy);

// Runs the repeated test unconditionally (no sentinel guard). An iteration in
// which either side drew zero samples has d = 0.
StateTrials run_state_trials(const TransitionCounts& tx,
                             const TransitionCounts& ty,
                             const ClosenessParams& params, Rng& rng);

StateTestResult test_state(const TransitionCounts& tx,
                           const TransitionCounts& ty,
                           const ClosenessParams& params, Rng& rng);

// State b draws from the stream derive_seed(params.seed, {b}), so the result
// does not depend on `threads`.
ClosenessResult closeness_analysis(const StateSequence& x,
                                   const StateSequence& y,
                                   const ClosenessParams& params,
                                   unsigned threads = 1);

// Throws UndeterminedError when every state is a sentinel.
ClosenessSummary aggregate(const ClosenessResult& result,
                           Aggregation method = Aggregation::kMean);

}  // namespace seqcloseness

#endif  // SEQCLOSENESS_CLOSENESS_TESTER_H_
