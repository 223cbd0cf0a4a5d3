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

// Periodical evolution: split one sequence into segments and test every
// ordered pair of segments against each other.

#ifndef SEQCLOSENESS_EVOLUTION_H_
#define SEQCLOSENESS_EVOLUTION_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "seqcloseness/closeness_tester.h"
#include "seqcloseness/dates.h"
#include "seqcloseness/matrix.h"
#include "seqcloseness/quantizer.h"

namespace seqcloseness {

struct LabeledSegment {
  std::string label;
  StateSequence states;
};

// `count` contiguous pieces; all but the last have floor(len / count) entries.
// Throws DomainError when count is 0 or exceeds the sequence length.
std::vector<StateSequence> segment_by_count(const StateSequence& seq,
                                            std::size_t count);

// Groups seq by the calendar period of dates[i] (see group_by_period).
std::vector<LabeledSegment> segment_by_calendar(std::span<const Date> dates,
                                                const StateSequence& seq,
                                                Period period);

struct CellWarning {
  std::size_t row = 0;
  std::size_t col = 0;
  std::string message;
};

// Cell (i, j) holds the aggregated closeness of segment i (as x) against
// segment j (as y), or kSentinel when the pair could not be tested. The
// diagonal is not tested; it carries the self-pair values accept = 1,
// reject = 0, z = 0, d = 0.
struct EvolutionMatrices {
  std::vector<std::string> labels;
  Matrix<double> accept;
  Matrix<double> reject;
  Matrix<double> z;
  Matrix<double> d;
  // 1 where the off-diagonal pair could not be tested. A z cell can hold a
  // genuine -1, so this mask is the authority on sentinels.
  Matrix<std::uint8_t> sentinel;
  std::vector<CellWarning> warnings;

  std::size_t size() const noexcept { return labels.size(); }
};

// Cell (i, j) uses seed derive_seed(params.seed, {i, j}); output does not
// depend on `threads`. Throws DomainError for fewer than two segments.
EvolutionMatrices pairwise_closeness(std::span<const LabeledSegment> segments,
                                     const ClosenessParams& params,
                                     Aggregation aggregation = Aggregation::kMean,
                                     unsigned threads = 1);

// Mean of cells (i, j) and (j, i). A sentinel cell defers to its partner;
// two sentinels stay kSentinel.
Matrix<double> symmetrized(const Matrix<double>& m,
                           const Matrix<std::uint8_t>& sentinel);

}  // namespace seqcloseness

#endif  // SEQCLOSENESS_EVOLUTION_H_
