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

#ifndef SEQCLOSENESS_TRANSITION_H_
#define SEQCLOSENESS_TRANSITION_H_

#include <cstdint>
#include <span>
#include <vector>

#include "seqcloseness/matrix.h"
#include "seqcloseness/quantizer.h"
#include "seqcloseness/random.h"

namespace seqcloseness {

// Empirical outgoing transitions of one state: counts[k - 1] is the number of
// observed moves from_state -> k.
struct TransitionCounts {
  StateId from_state = 1;
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const noexcept;
};

TransitionCounts count_transitions_from(const StateSequence& seq, StateId b);

// Row b - 1 equals count_transitions_from(seq, b).counts.
Matrix<std::uint64_t> full_transition_counts(const StateSequence& seq);

// Counts of m0 i.i.d. draws from weights / |weights|_1.
// Throws DomainError when every weight is zero.
std::vector<std::uint64_t> sample_counts(std::span<const std::uint64_t> weights,
                                         std::uint64_t m0, Rng& rng);

}  // namespace seqcloseness

#endif  // SEQCLOSENESS_TRANSITION_H_
