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

#include "seqcloseness/divergences.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "seqcloseness/errors.h"

namespace seqcloseness {
namespace {

constexpr double kSumTolerance = 1e-12;

void check_same_length(const FiniteDistribution& p,
                       const FiniteDistribution& q) {
  if (p.size() != q.size()) {
    throw DomainError("distributions have different support sizes");
  }
}

}  // namespace

FiniteDistribution::FiniteDistribution(std::vector<double> probs)
    : probs_(std::move(probs)) {
  double sum = 0.0;
  for (double x : probs_) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
      throw DomainError("probabilities must be finite and non-negative");
    }
    sum += x;
  }
  if (std::fabs(sum - 1.0) > kSumTolerance) {
    throw DomainError("probabilities must sum to 1");
  }
}

FiniteDistribution FiniteDistribution::FromWeights(
    std::span<const double> weights) {
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (!(total > 0.0)) throw DomainError("weights must have a positive sum");
  std::vector<double> probs;
  probs.reserve(weights.size());
  for (double w : weights) probs.push_back(w / total);
  // Push the rounding residue into the largest entry so the sum check holds.
  const double residue =
      1.0 - std::accumulate(probs.begin(), probs.end(), 0.0);
  auto largest = std::max_element(probs.begin(), probs.end());
  *largest = std::max(0.0, *largest + residue);
  return FiniteDistribution(std::move(probs));
}

double hellinger(const FiniteDistribution& p, const FiniteDistribution& q) {
  check_same_length(p, q);
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double diff = std::sqrt(p.probs()[i]) - std::sqrt(q.probs()[i]);
    sum += diff * diff;
  }
  return std::min(1.0, std::sqrt(0.5 * sum));
}

double total_variation(const FiniteDistribution& p,
                       const FiniteDistribution& q) {
  check_same_length(p, q);
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    sum += std::fabs(p.probs()[i] - q.probs()[i]);
  }
  return 0.5 * sum;
}

double chi2_divergence(const FiniteDistribution& p,
                       const FiniteDistribution& q) {
  check_same_length(p, q);
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double pi = p.probs()[i];
    const double qi = q.probs()[i];
    if (qi == 0.0) {
      if (pi > 0.0) return std::numeric_limits<double>::infinity();
      continue;
    }
    sum += (pi - qi) * (pi - qi) / qi;
  }
  return sum;
}

}  // namespace seqcloseness
