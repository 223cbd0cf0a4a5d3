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

#include "seqcloseness/closeness_tester.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "seqcloseness/errors.h"
#include "seqcloseness/parallel.h"

namespace seqcloseness {
namespace {

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw DomainError("epsilon must lie in (0, 1)");
  }
}

std::size_t resolve_state_count(const ClosenessParams& params,
                                std::size_t actual) {
  if (params.state_count != 0 && params.state_count != actual) {
    throw DomainError("params.state_count = " +
                      std::to_string(params.state_count) +
                      " but the data has " + std::to_string(actual) +
                      " states");
  }
  return actual;
}

double summarize(std::vector<double> values, Aggregation method) {
  switch (method) {
    case Aggregation::kMean:
      return std::accumulate(values.begin(), values.end(), 0.0) /
             static_cast<double>(values.size());
    case Aggregation::kMin:
      return *std::min_element(values.begin(), values.end());
    case Aggregation::kMedian: {
      const std::size_t mid = values.size() / 2;
      std::nth_element(values.begin(), values.begin() + mid, values.end());
      const double upper = values[mid];
      if (values.size() % 2 == 1) return upper;
      const double lower =
          *std::max_element(values.begin(), values.begin() + mid);
      return 0.5 * (lower + upper);
    }
  }
  return 0.0;
}

}  // namespace

void ClosenessParams::validate() const {
  check_epsilon(epsilon);
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("C must be > 0");
  if (iterations < 1) throw DomainError("N must be at least 1");
}

std::string_view to_string(Aggregation method) {
  switch (method) {
    case Aggregation::kMean:
      return "mean";
    case Aggregation::kMedian:
      return "median";
    case Aggregation::kMin:
      return "min";
  }
  return "mean";
}

Aggregation parse_aggregation(std::string_view name) {
  if (name == "mean") return Aggregation::kMean;
  if (name == "median") return Aggregation::kMedian;
  if (name == "min") return Aggregation::kMin;
  throw DomainError("unknown aggregation '" + std::string(name) +
                    "' (expected mean, median or min)");
}

double required_sample_size(double epsilon, double c,
                            std::size_t state_count) {
  check_epsilon(epsilon);
  if (!(c > 0.0)) throw DomainError("C must be > 0");
  if (state_count < 1) throw DomainError("state count must be >= 1");
  const double b = static_cast<double>(state_count);
  const double sublinear = std::cbrt(b * b) / std::pow(epsilon, 4.0 / 3.0);
  const double root = std::sqrt(b) / (epsilon * epsilon);
  return c * std::max(sublinear, root);
}

double accept_threshold(double m, double epsilon, std::size_t state_count) {
  if (!(m > 0.0)) throw DomainError("sample size m must be > 0");
  return m * m * epsilon * epsilon /
         (8.0 * (m + static_cast<double>(state_count)));
}

double chi2_statistic(std::span<const std::uint64_t> cx,
                      std::span<const std::uint64_t> cy) {
  if (cx.size() != cy.size()) {
    throw DomainError("chi2_statistic: count vectors differ in length");
  }
  double z = 0.0;
  for (std::size_t k = 0; k < cx.size(); ++k) {
    const double sum = static_cast<double>(cx[k]) + static_cast<double>(cy[k]);
    if (sum == 0.0) continue;
    const double diff = static_cast<double>(cx[k]) - static_cast<double>(cy[k]);
    z += (diff * diff - sum) / sum;
  }
  return z;
}

double tv_distance(std::span<const std::uint64_t> cx,
                   std::span<const std::uint64_t> cy) {
  if (cx.size() != cy.size()) {
    throw DomainError("tv_distance: count vectors differ in length");
  }
  const double nx = static_cast<double>(
      std::accumulate(cx.begin(), cx.end(), std::uint64_t{0}));
  const double ny = static_cast<double>(
      std::accumulate(cy.begin(), cy.end(), std::uint64_t{0}));
  if (nx == 0.0 || ny == 0.0) {
    throw DomainError("tv_distance: empty sample");
  }
  double d = 0.0;
  for (std::size_t k = 0; k < cx.size(); ++k) {
    d += std::fabs(static_cast<double>(cx[k]) / nx -
                   static_cast<double>(cy[k]) / ny);
  }
  return std::min(1.0, 0.5 * d);
}

StateTrials run_state_trials(const TransitionCounts& tx,
                             const TransitionCounts& ty,
                             const ClosenessParams& params, Rng& rng) {
  params.validate();
  if (tx.counts.size() != ty.counts.size()) {
    throw DomainError("transition count vectors differ in length");
  }
  const std::size_t states = resolve_state_count(params, tx.counts.size());

  StateTrials trials;
  trials.sample_size = required_sample_size(params.epsilon, params.c, states);
  trials.threshold =
      accept_threshold(trials.sample_size, params.epsilon, states);
  trials.z.reserve(params.iterations);
  trials.d.reserve(params.iterations);

  for (std::uint32_t n = 0; n < params.iterations; ++n) {
    const std::uint64_t mx = sample_poisson(rng, trials.sample_size);
    const std::uint64_t my = sample_poisson(rng, trials.sample_size);
    const std::vector<std::uint64_t> cx = sample_counts(tx.counts, mx, rng);
    const std::vector<std::uint64_t> cy = sample_counts(ty.counts, my, rng);

    const double z = chi2_statistic(cx, cy);
    const double d = (mx == 0 || my == 0) ? 0.0 : tv_distance(cx, cy);
    trials.z.push_back(z);
    trials.d.push_back(d);
    if (z <= trials.threshold) ++trials.accepted;
    if (d > params.epsilon) ++trials.rejected;
  }
  return trials;
}

StateTestResult test_state(const TransitionCounts& tx,
                           const TransitionCounts& ty,
                           const ClosenessParams& params, Rng& rng) {
  params.validate();
  if (tx.total() <= params.min_transitions ||
      ty.total() <= params.min_transitions) {
    return StateTestResult::Sentinel();
  }
  const StateTrials trials = run_state_trials(tx, ty, params, rng);
  const double n = static_cast<double>(params.iterations);
  StateTestResult result;
  result.sentinel = false;
  result.accept_prob = trials.accepted / n;
  result.reject_prob = trials.rejected / n;
  result.z_mean = std::accumulate(trials.z.begin(), trials.z.end(), 0.0) / n;
  result.d_mean = std::accumulate(trials.d.begin(), trials.d.end(), 0.0) / n;
  return result;
}

ClosenessResult closeness_analysis(const StateSequence& x,
                                   const StateSequence& y,
                                   const ClosenessParams& params,
                                   unsigned threads) {
  params.validate();
  if (x.empty() || y.empty()) {
    throw DomainError("closeness_analysis: input sequence is empty");
  }
  if (!(x.spec() == y.spec())) {
    throw DomainError(
        "closeness_analysis: sequences were quantized with different specs");
  }
  const std::size_t states = resolve_state_count(params, x.state_count());

  ClosenessResult result;
  result.params = params;
  result.params.state_count = states;
  result.per_state.resize(states);

  const Matrix<std::uint64_t> counts_x = full_transition_counts(x);
  const Matrix<std::uint64_t> counts_y = full_transition_counts(y);

  parallel_for(states, threads, [&](std::size_t index) {
    const auto b = static_cast<StateId>(index + 1);
    TransitionCounts tx{b, {counts_x.row(index).begin(),
                            counts_x.row(index).end()}};
    TransitionCounts ty{b, {counts_y.row(index).begin(),
                            counts_y.row(index).end()}};
    Rng rng(derive_seed(params.seed, {b}));
    result.per_state[index] = test_state(tx, ty, result.params, rng);
  });
  return result;
}

ClosenessSummary aggregate(const ClosenessResult& result, Aggregation method) {
  std::vector<double> accept, reject, z, d;
  for (const StateTestResult& s : result.per_state) {
    if (s.sentinel) continue;
    accept.push_back(s.accept_prob);
    reject.push_back(s.reject_prob);
    z.push_back(s.z_mean);
    d.push_back(s.d_mean);
  }
  if (accept.empty()) {
    throw UndeterminedError(
        "undetermined: every state has too few transitions to test");
  }
  ClosenessSummary summary;
  summary.method = method;
  summary.states_used = accept.size();
  summary.accept_prob = summarize(std::move(accept), method);
  summary.reject_prob = summarize(std::move(reject), method);
  summary.z = summarize(std::move(z), method);
  summary.d = summarize(std::move(d), method);
  return summary;
}

}  // namespace seqcloseness
