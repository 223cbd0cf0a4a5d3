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

#ifndef SEQCLOSENESS_CLUSTERING_H_
#define SEQCLOSENESS_CLUSTERING_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "seqcloseness/matrix.h"

namespace seqcloseness {

struct KMeansOptions {
  std::size_t k = 3;
  std::uint64_t seed = 0;
  std::size_t max_iter = 300;
  // Independent k-means++ starts; the lowest final objective wins.
  std::size_t restarts = 10;
};

struct ClusterAssignment {
  std::vector<std::size_t> labels;       // per row, in 0..k-1
  std::vector<std::size_t> level_order;  // cluster -> severity rank
  std::vector<std::vector<double>> centroids;
  // Within-cluster sum of squares after each Lloyd iteration of the winning
  // start.
  std::vector<double> objective_history;
  double objective = 0.0;

  std::size_t severity(std::size_t row) const {
    return level_order[labels[row]];
  }
};

// Replaces kSentinel entries with the mean of the non-sentinel entries of the
// same column (0 when the whole column is missing).
Matrix<double> impute_sentinels(const Matrix<double>& m);

// Lloyd's algorithm with k-means++ seeding over the rows of `m`. Sentinels are
// imputed first. Clusters are ranked by the mean value of their centroid,
// lowest first. Throws DomainError when k is 0 or exceeds the row count.
ClusterAssignment kmeans_rows(const Matrix<double>& m,
                              const KMeansOptions& options = {});

// "low", "moderate", "high" for k = 3; "level-<rank>" otherwise.
std::string severity_name(std::size_t rank, std::size_t k);

}  // namespace seqcloseness

#endif  // SEQCLOSENESS_CLUSTERING_H_
