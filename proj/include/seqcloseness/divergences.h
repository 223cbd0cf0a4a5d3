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

// Divergences between explicit finite distributions. With the normalizations
// below, d_H^2 <= d_TV <= sqrt(2) d_H <= sqrt(d_chi2) for every pair.

#ifndef SEQCLOSENESS_DIVERGENCES_H_
#define SEQCLOSENESS_DIVERGENCES_H_

#include <span>
#include <vector>

namespace seqcloseness {

class FiniteDistribution {
 public:
  // Throws DomainError on negative entries or a sum off 1 by more than 1e-12.
  explicit FiniteDistribution(std::vector<double> probs);

  // Normalizes non-negative weights with a positive sum.
  static FiniteDistribution FromWeights(std::span<const double> weights);

  std::span<const double> probs() const noexcept { return probs_; }
  std::size_t size() const noexcept { return probs_.size(); }

 private:
  std::vector<double> probs_;
};

// sqrt(1/2 sum (sqrt p - sqrt q)^2), in [0, 1].
double hellinger(const FiniteDistribution& p, const FiniteDistribution& q);

// 1/2 sum |p - q|.
double total_variation(const FiniteDistribution& p,
                       const FiniteDistribution& q);

// sum (p - q)^2 / q over q > 0; +infinity when p puts mass where q has none.
double chi2_divergence(const FiniteDistribution& p,
                       const FiniteDistribution& q);

}  // namespace seqcloseness

#endif  // SEQCLOSENESS_DIVERGENCES_H_
