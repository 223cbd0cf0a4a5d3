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

#include "seqcloseness/transition.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "seqcloseness/errors.h"

namespace seqcloseness {

std::uint64_t TransitionCounts::total() const noexcept {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

TransitionCounts count_transitions_from(const StateSequence& seq, StateId b) {
  const std::size_t states = seq.state_count();
  if (b < 1 || b > states) {
    throw DomainError("state " + std::to_string(b) + " outside 1.." +
                      std::to_string(states));
  }
  TransitionCounts out{b, std::vector<std::uint64_t>(states, 0)};
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (seq[i] == b) ++out.counts[seq[i + 1] - 1];
  }
  return out;
}

Matrix<std::uint64_t> full_transition_counts(const StateSequence& seq) {
  const std::size_t states = seq.state_count();
  Matrix<std::uint64_t> counts(states, states, 0);
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    ++counts(seq[i] - 1, seq[i + 1] - 1);
  }
  return counts;
}

std::vector<std::uint64_t> sample_counts(std::span<const std::uint64_t> weights,
                                         std::uint64_t m0, Rng& rng) {
  std::vector<double> w(weights.begin(), weights.end());
  if (std::all_of(w.begin(), w.end(), [](double x) { return x == 0.0; })) {
    throw DomainError("sample_counts: all weights are zero");
  }
  return sample_multinomial(rng, m0, w);
}

}  // namespace seqcloseness
