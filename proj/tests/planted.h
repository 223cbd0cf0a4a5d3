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

// Synthetic inputs shared by unit and acceptance tests.

#ifndef SEQCLOSENESS_TESTS_PLANTED_H_
#define SEQCLOSENESS_TESTS_PLANTED_H_

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "seqcloseness/matrix.h"
#include "seqcloseness/random.h"

namespace seqcloseness::testing {

inline double normal(Rng& rng) {
  const double u1 = 1.0 - rng.uniform();  // (0, 1]
  const double u2 = rng.uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

struct PlantedBlocks {
  Matrix<double> values;
  std::vector<std::size_t> block;  // true block per row, 0 = lowest level
};

// rows x rows matrix; row i of block g holds level[g] + N(0, sigma^2) in
// every column. Rows are assigned to blocks in a shuffled order.
inline PlantedBlocks planted_blocks(std::size_t rows,
                                    const std::vector<double>& levels,
                                    double sigma, std::uint64_t seed) {
  Rng rng(seed);
  PlantedBlocks out;
  out.block.resize(rows);
  for (std::size_t i = 0; i < rows; ++i) out.block[i] = i % levels.size();
  for (std::size_t i = rows; i > 1; --i) {
    std::swap(out.block[i - 1], out.block[rng.uniform_index(i)]);
  }
  out.values = Matrix<double>(rows, rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < rows; ++j) {
      out.values(i, j) = levels[out.block[i]] + sigma * normal(rng);
    }
  }
  return out;
}

}  // namespace seqcloseness::testing

#endif  // SEQCLOSENESS_TESTS_PLANTED_H_
