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

#include "seqcloseness/clustering.h"

#include <algorithm>
#include <limits>
#include <numeric>

#include "seqcloseness/closeness_tester.h"
#include "seqcloseness/errors.h"
#include "seqcloseness/random.h"

namespace seqcloseness {
namespace {

using Point = std::span<const double>;

double squared_distance(Point a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    sum += diff * diff;
  }
  return sum;
}

std::vector<std::vector<double>> kmeanspp_centers(const Matrix<double>& data,
                                                  std::size_t k, Rng& rng) {
  const std::size_t n = data.rows();
  std::vector<std::vector<double>> centers;
  centers.reserve(k);
  auto first = data.row(rng.uniform_index(n));
  centers.emplace_back(first.begin(), first.end());

  std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
  while (centers.size() < k) {
    for (std::size_t i = 0; i < n; ++i) {
      nearest[i] =
          std::min(nearest[i], squared_distance(data.row(i), centers.back()));
    }
    const double total = std::accumulate(nearest.begin(), nearest.end(), 0.0);
    const std::size_t pick = total > 0.0 ? sample_categorical(rng, nearest)
                                         : rng.uniform_index(n);
    auto row = data.row(pick);
    centers.emplace_back(row.begin(), row.end());
  }
  return centers;
}

struct LloydRun {
  std::vector<std::size_t> labels;
  std::vector<std::vector<double>> centroids;
  std::vector<double> history;
};

LloydRun lloyd(const Matrix<double>& data,
               std::vector<std::vector<double>> centroids,
               std::size_t max_iter) {
  const std::size_t n = data.rows();
  const std::size_t dims = data.cols();
  const std::size_t k = centroids.size();
  LloydRun run;
  run.labels.assign(n, k);  // k marks "unassigned"

  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      // Ties keep the current label so that duplicated rows settle.
      std::size_t best = run.labels[i];
      double best_dist = best < k ? squared_distance(data.row(i), centroids[best])
                                  : std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c < k; ++c) {
        const double dist = squared_distance(data.row(i), centroids[c]);
        if (dist < best_dist) {
          best_dist = dist;
          best = c;
        }
      }
      if (best != run.labels[i]) {
        run.labels[i] = best;
        changed = true;
      }
    }
    if (!changed && iter > 0) break;

    std::vector<std::size_t> sizes(k, 0);
    std::vector<std::vector<double>> sums(k, std::vector<double>(dims, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
      ++sizes[run.labels[i]];
      auto row = data.row(i);
      for (std::size_t j = 0; j < dims; ++j) sums[run.labels[i]][j] += row[j];
    }
    for (std::size_t c = 0; c < k; ++c) {
      if (sizes[c] == 0) continue;
      for (std::size_t j = 0; j < dims; ++j) {
        centroids[c][j] = sums[c][j] / static_cast<double>(sizes[c]);
      }
    }

    // Re-seed empty clusters with the worst-fit row of a cluster that can
    // spare it.
    for (std::size_t c = 0; c < k; ++c) {
      if (sizes[c] != 0) continue;
      std::size_t worst = n;
      double worst_dist = -1.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (sizes[run.labels[i]] < 2) continue;
        const double dist =
            squared_distance(data.row(i), centroids[run.labels[i]]);
        if (dist > worst_dist) {
          worst_dist = dist;
          worst = i;
        }
      }
      if (worst == n) break;
      --sizes[run.labels[worst]];
      run.labels[worst] = c;
      sizes[c] = 1;
      auto row = data.row(worst);
      centroids[c].assign(row.begin(), row.end());
      // Recompute the donor centroid without the moved row.
      std::fill(sums.begin(), sums.end(), std::vector<double>(dims, 0.0));
      std::fill(sizes.begin(), sizes.end(), 0);
      for (std::size_t i = 0; i < n; ++i) {
        ++sizes[run.labels[i]];
        auto r = data.row(i);
        for (std::size_t j = 0; j < dims; ++j) sums[run.labels[i]][j] += r[j];
      }
      for (std::size_t cc = 0; cc < k; ++cc) {
        if (sizes[cc] == 0) continue;
        for (std::size_t j = 0; j < dims; ++j) {
          centroids[cc][j] = sums[cc][j] / static_cast<double>(sizes[cc]);
        }
      }
    }

    double objective = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      objective += squared_distance(data.row(i), centroids[run.labels[i]]);
    }
    run.history.push_back(objective);
  }
  run.centroids = std::move(centroids);
  return run;
}

}  // namespace

Matrix<double> impute_sentinels(const Matrix<double>& m) {
  Matrix<double> out = m;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    double sum = 0.0;
    std::size_t present = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (m(i, j) == kSentinel) continue;
      sum += m(i, j);
      ++present;
    }
    const double fill = present > 0 ? sum / static_cast<double>(present) : 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (m(i, j) == kSentinel) out(i, j) = fill;
    }
  }
  return out;
}

ClusterAssignment kmeans_rows(const Matrix<double>& m,
                              const KMeansOptions& options) {
  if (options.k == 0) throw DomainError("k must be positive");
  if (options.k > m.rows()) {
    throw DomainError("k = " + std::to_string(options.k) + " exceeds the " +
                      std::to_string(m.rows()) + " rows");
  }
  if (options.max_iter == 0) throw DomainError("max_iter must be positive");
  const Matrix<double> data = impute_sentinels(m);

  LloydRun best;
  double best_objective = std::numeric_limits<double>::infinity();
  const std::size_t restarts = std::max<std::size_t>(options.restarts, 1);
  for (std::size_t r = 0; r < restarts; ++r) {
    Rng rng(derive_seed(options.seed, {r}));
    LloydRun run =
        lloyd(data, kmeanspp_centers(data, options.k, rng), options.max_iter);
    const double objective = run.history.empty() ? 0.0 : run.history.back();
    if (objective < best_objective) {
      best_objective = objective;
      best = std::move(run);
    }
  }

  ClusterAssignment out;
  out.labels = std::move(best.labels);
  out.centroids = std::move(best.centroids);
  out.objective_history = std::move(best.history);
  out.objective = best_objective;

  std::vector<double> level(options.k);
  for (std::size_t c = 0; c < options.k; ++c) {
    const auto& centroid = out.centroids[c];
    level[c] = centroid.empty()
                   ? 0.0
                   : std::accumulate(centroid.begin(), centroid.end(), 0.0) /
                         static_cast<double>(centroid.size());
  }
  std::vector<std::size_t> by_level(options.k);
  std::iota(by_level.begin(), by_level.end(), 0);
  std::stable_sort(by_level.begin(), by_level.end(),
                   [&](std::size_t a, std::size_t b) {
                     return level[a] < level[b];
                   });
  out.level_order.resize(options.k);
  for (std::size_t rank = 0; rank < options.k; ++rank) {
    out.level_order[by_level[rank]] = rank;
  }
  return out;
}

std::string severity_name(std::size_t rank, std::size_t k) {
  if (k == 3) {
    static const char* const kNames[] = {"low", "moderate", "high"};
    if (rank < 3) return kNames[rank];
  }
  return "level-" + std::to_string(rank);
}

}  // namespace seqcloseness
