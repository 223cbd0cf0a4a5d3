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

#include "seqcloseness/baselines.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "seqcloseness/errors.h"

namespace seqcloseness {
namespace {

void check_nonempty(std::span<const double> x, std::span<const double> y) {
  if (x.empty() || y.empty()) throw DomainError("empty sample");
}

struct RankedPool {
  std::vector<double> doubled_rank;  // 2 * mid-rank, integral
  double tie_term = 0.0;             // sum over tie groups of t^3 - t
};

// Pooled mid-ranks with x first (indices 0..nx-1), then y.
RankedPool rank_pool(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size() + y.size();
  std::vector<std::pair<double, std::size_t>> pooled;
  pooled.reserve(n);
  for (std::size_t i = 0; i < x.size(); ++i) pooled.emplace_back(x[i], i);
  for (std::size_t i = 0; i < y.size(); ++i) {
    pooled.emplace_back(y[i], x.size() + i);
  }
  std::sort(pooled.begin(), pooled.end());

  RankedPool out;
  out.doubled_rank.resize(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && pooled[j + 1].first == pooled[i].first) ++j;
    // Ranks i+1 .. j+1 share the mid-rank (i + j + 2) / 2.
    const double doubled = static_cast<double>(i + j + 2);
    for (std::size_t k = i; k <= j; ++k) {
      out.doubled_rank[pooled[k].second] = doubled;
    }
    const double t = static_cast<double>(j - i + 1);
    out.tie_term += t * t * t - t;
    i = j + 1;
  }
  return out;
}

// P(|W - E| >= |w - E|) by counting subsets of size nx of the pooled doubled
// mid-ranks by their sum.
double exact_rank_sum_p(const RankedPool& pool, std::size_t nx,
                        double observed_doubled) {
  const std::size_t n = pool.doubled_rank.size();
  std::size_t max_sum = 0;
  for (double r : pool.doubled_rank) max_sum += static_cast<std::size_t>(r);
  // ways[j][s]: subsets of size j with doubled rank sum s.
  std::vector<std::vector<double>> ways(nx + 1,
                                        std::vector<double>(max_sum + 1, 0.0));
  ways[0][0] = 1.0;
  for (std::size_t item = 0; item < n; ++item) {
    const auto r = static_cast<std::size_t>(pool.doubled_rank[item]);
    for (std::size_t j = std::min(nx, item + 1); j >= 1; --j) {
      for (std::size_t s = max_sum; s >= r; --s) {
        ways[j][s] += ways[j - 1][s - r];
        if (s == r) break;
      }
    }
  }
  const double doubled_mean = static_cast<double>(nx) *
                              static_cast<double>(n + 1);
  const double observed_dev = std::fabs(observed_doubled - doubled_mean);
  double total = 0.0;
  double extreme = 0.0;
  for (std::size_t s = 0; s <= max_sum; ++s) {
    const double w = ways[nx][s];
    if (w == 0.0) continue;
    total += w;
    // Doubled sums are integers, so a half-unit slack is exact.
    if (std::fabs(static_cast<double>(s) - doubled_mean) >= observed_dev - 0.5e-9) {
      extreme += w;
    }
  }
  return std::min(1.0, extreme / total);
}

}  // namespace

TestReport wilcoxon_rank_sum(std::span<const double> x,
                             std::span<const double> y) {
  check_nonempty(x, y);
  const RankedPool pool = rank_pool(x, y);
  const double nx = static_cast<double>(x.size());
  const double ny = static_cast<double>(y.size());
  const double n = nx + ny;

  double doubled_w = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) doubled_w += pool.doubled_rank[i];
  const double w = 0.5 * doubled_w;
  const double mean = nx * (n + 1.0) / 2.0;
  double variance = nx * ny / 12.0 * (n + 1.0);
  if (n > 1.0) variance -= nx * ny / 12.0 * pool.tie_term / (n * (n - 1.0));
  const double z = variance > 0.0 ? (w - mean) / std::sqrt(variance) : 0.0;

  TestReport report;
  report.statistic = z;
  if (x.size() <= kWilcoxonExactMaxSize && y.size() <= kWilcoxonExactMaxSize) {
    report.method = "wilcoxon-exact";
    report.p_value = exact_rank_sum_p(pool, x.size(), doubled_w);
  } else {
    report.method = "wilcoxon-normal";
    report.p_value =
        variance > 0.0 ? std::erfc(std::fabs(z) / std::numbers::sqrt2) : 1.0;
  }
  report.p_value = std::clamp(report.p_value, 0.0, 1.0);
  return report;
}

double kolmogorov_survival(double lambda) {
  if (!(lambda > 0.0)) return 1.0;
  constexpr double kPi = std::numbers::pi;
  if (lambda < 1.18) {
    // Jacobi-transformed series; converges fast for small lambda.
    const double factor = -kPi * kPi / (8.0 * lambda * lambda);
    double sum = 0.0;
    for (int k = 1; k <= 20; ++k) {
      const double odd = 2.0 * k - 1.0;
      sum += std::exp(factor * odd * odd);
    }
    return std::clamp(1.0 - std::sqrt(2.0 * kPi) / lambda * sum, 0.0, 1.0);
  }
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 == 1) ? term : -term;
    if (term < 1e-300) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

TestReport ks_two_sample(std::span<const double> x, std::span<const double> y) {
  check_nonempty(x, y);
  std::vector<double> xs(x.begin(), x.end());
  std::vector<double> ys(y.begin(), y.end());
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  const double nx = static_cast<double>(xs.size());
  const double ny = static_cast<double>(ys.size());

  double d = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < xs.size() && j < ys.size()) {
    const double v = std::min(xs[i], ys[j]);
    while (i < xs.size() && xs[i] == v) ++i;
    while (j < ys.size() && ys[j] == v) ++j;
    d = std::max(d, std::fabs(static_cast<double>(i) / nx -
                              static_cast<double>(j) / ny));
  }

  TestReport report;
  report.method = "ks-asymptotic";
  report.statistic = d;
  report.p_value = kolmogorov_survival(std::sqrt(nx * ny / (nx + ny)) * d);
  return report;
}

}  // namespace seqcloseness
