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

// Simulated Markov trajectories and the embedded five-state reference data.

#ifndef SEQCLOSENESS_SIMDATA_H_
#define SEQCLOSENESS_SIMDATA_H_

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "seqcloseness/matrix.h"
#include "seqcloseness/quantizer.h"
#include "seqcloseness/random.h"

namespace seqcloseness {

class TransitionMatrix {
 public:
  // Throws DomainError unless `p` is square (at least 2x2), entries lie in
  // [0, 1] and every row sums to 1 within 1e-9.
  explicit TransitionMatrix(Matrix<double> p);

  // Divides every row by its sum first. Rows must be non-negative with a
  // positive sum.
  static TransitionMatrix Renormalized(Matrix<double> p);

  std::size_t states() const noexcept { return p_.rows(); }
  // Outgoing probabilities of state s (1-based).
  std::span<const double> row(StateId s) const { return p_.row(s - 1); }
  const Matrix<double>& probabilities() const noexcept { return p_; }

 private:
  Matrix<double> p_;
};

// A fixed start state, or a distribution over states (index s - 1).
using InitialState = std::variant<StateId, std::vector<double>>;

// Uniform over the states of `p`.
InitialState uniform_initial(const TransitionMatrix& p);

StateSequence generate_trajectory(const TransitionMatrix& p,
                                  std::size_t length,
                                  const InitialState& initial, Rng& rng);

// Number of tail positions replaced at `alpha` percent: round(alpha * len / 100).
std::size_t perturbed_count(std::size_t length, double alpha);

// Replaces the final perturbed_count(len, alpha) entries with `replacement`.
StateSequence perturb_tail(const StateSequence& seq, double alpha,
                           StateId replacement);

struct Fixtures {
  StateSequence qx;  // 100-step trajectory of the reference chain
  StateSequence qy;  // qx's states sorted, no Markov structure
  StateSequence qz;  // qx with a 5% tail of state 2
  Matrix<double> printed_matrix;  // as printed, rows off 1 by print rounding
  TransitionMatrix matrix;        // printed_matrix, rows renormalized
};

const Fixtures& fixtures();

// qx with the last round(alpha) percent replaced by state 2.
StateSequence fixture_qz(double alpha);

}  // namespace seqcloseness

#endif  // SEQCLOSENESS_SIMDATA_H_
