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

// Classical order-blind two-sample tests, used as baselines.

#ifndef SEQCLOSENESS_BASELINES_H_
#define SEQCLOSENESS_BASELINES_H_

#include <cstddef>
#include <span>
#include <string>

namespace seqcloseness {

// Exact enumeration is used when both samples have at most this many values.
inline constexpr std::size_t kWilcoxonExactMaxSize = 20;

struct TestReport {
  double statistic = 0.0;
  double p_value = 1.0;
  std::string method;
};

// Two-sided rank-sum test with mid-ranks for ties. `statistic` is the
// standardized rank sum of x, (W - E[W]) / sd(W) with the tie-corrected
// variance (0 when the variance vanishes). The p-value is exact (enumeration
// of all splits of the pooled mid-ranks) for small samples and the
// tie-corrected normal approximation otherwise.
TestReport wilcoxon_rank_sum(std::span<const double> x,
                             std::span<const double> y);

// D = sup |F_x - F_y|; p = Q_KS(sqrt(n_x n_y / (n_x + n_y)) * D) from the
// asymptotic Kolmogorov distribution.
TestReport ks_two_sample(std::span<const double> x, std::span<const double> y);

// P(K > lambda) for the Kolmogorov distribution.
double kolmogorov_survival(double lambda);

}  // namespace seqcloseness

#endif  // SEQCLOSENESS_BASELINES_H_
