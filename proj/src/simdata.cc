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

#include "seqcloseness/simdata.h"

#include <cmath>
#include <numeric>
#include <string>

#include "seqcloseness/errors.h"

namespace seqcloseness {
namespace {

constexpr double kRowSumTolerance = 1e-9;
constexpr StateId kTailState = 2;

constexpr StateId kQx[100] = {
    1, 4, 1, 2, 2, 5, 1, 2, 2, 5, 5, 5, 1, 2, 5, 5, 3, 3, 4, 5,
    4, 2, 4, 4, 5, 3, 4, 4, 5, 5, 5, 5, 4, 3, 2, 2, 5, 1, 4, 3,
    2, 4, 5, 3, 5, 5, 1, 5, 2, 3, 5, 3, 2, 4, 1, 2, 4, 4, 5, 5,
    1, 2, 2, 1, 2, 2, 1, 5, 5, 3, 5, 3, 5, 1, 2, 4, 5, 3, 4, 4,
    4, 5, 4, 3, 1, 4, 5, 4, 5, 4, 3, 2, 1, 3, 2, 3, 5, 1, 3, 4};

constexpr StateId kQy[100] = {
    1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2,
    2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3,
    3, 3, 3, 3, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4,
    4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 5, 5, 5, 5, 5, 5, 5, 5, 5,
    5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5};

constexpr double kPrintedMatrix[5][5] = {
    {0.02126912, 0.40209113, 0.3423650, 0.1571781, 0.07709659},
    {0.19377434, 0.19871080, 0.1079850, 0.1904423, 0.30908763},
    {0.16414480, 0.33028736, 0.0176185, 0.3189076, 0.16904172},
    {0.04017933, 0.03392901, 0.2268634, 0.2755908, 0.42343754},
    {0.24338862, 0.09483701, 0.2326078, 0.1308475, 0.29831911},
};

Matrix<double> printed_matrix() {
  Matrix<double> m(5, 5);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) m(i, j) = kPrintedMatrix[i][j];
  }
  return m;
}

Fixtures build_fixtures() {
  const QuantizationSpec spec = raw_state_spec(5);
  StateSequence qx(spec, {std::begin(kQx), std::end(kQx)});
  StateSequence qy(spec, {std::begin(kQy), std::end(kQy)});
  StateSequence qz = perturb_tail(qx, 5.0, kTailState);
  return Fixtures{std::move(qx), std::move(qy), std::move(qz),
                  printed_matrix(),
                  TransitionMatrix::Renormalized(printed_matrix())};
}

}  // namespace

TransitionMatrix::TransitionMatrix(Matrix<double> p) : p_(std::move(p)) {
  if (p_.rows() != p_.cols() || p_.rows() < 2) {
    throw DomainError("transition matrix must be square with >= 2 states");
  }
  for (std::size_t i = 0; i < p_.rows(); ++i) {
    double sum = 0.0;
    for (double v : p_.row(i)) {
      if (!(v >= 0.0 && v <= 1.0)) {
        throw DomainError("transition probability outside [0, 1] in row " +
                          std::to_string(i + 1));
      }
      sum += v;
    }
    if (std::fabs(sum - 1.0) > kRowSumTolerance) {
      throw DomainError("row " + std::to_string(i + 1) +
                        " of the transition matrix sums to " +
                        std::to_string(sum));
    }
  }
}

TransitionMatrix TransitionMatrix::Renormalized(Matrix<double> p) {
  for (std::size_t i = 0; i < p.rows(); ++i) {
    auto row = p.row(i);
    double sum = 0.0;
    for (double v : row) {
      if (!(v >= 0.0) || !std::isfinite(v)) {
        throw DomainError("negative or non-finite transition weight in row " +
                          std::to_string(i + 1));
      }
      sum += v;
    }
    if (!(sum > 0.0)) {
      throw DomainError("row " + std::to_string(i + 1) + " has no mass");
    }
    for (double& v : row) v /= sum;
  }
  return TransitionMatrix(std::move(p));
}

InitialState uniform_initial(const TransitionMatrix& p) {
  return std::vector<double>(p.states(), 1.0 / static_cast<double>(p.states()));
}

StateSequence generate_trajectory(const TransitionMatrix& p,
                                  std::size_t length,
                                  const InitialState& initial, Rng& rng) {
  if (length < 1) throw DomainError("trajectory length must be >= 1");
  const std::size_t states = p.states();
  StateId current = 0;
  if (const auto* fixed = std::get_if<StateId>(&initial)) {
    if (*fixed < 1 || *fixed > states) {
      throw DomainError("initial state " + std::to_string(*fixed) +
                        " outside 1.." + std::to_string(states));
    }
    current = *fixed;
  } else {
    const auto& dist = std::get<std::vector<double>>(initial);
    if (dist.size() != states) {
      throw DomainError("initial distribution has the wrong length");
    }
    current = static_cast<StateId>(sample_categorical(rng, dist) + 1);
  }

  std::vector<StateId> out;
  out.reserve(length);
  out.push_back(current);
  while (out.size() < length) {
    current = static_cast<StateId>(sample_categorical(rng, p.row(current)) + 1);
    out.push_back(current);
  }
  return StateSequence(raw_state_spec(static_cast<std::uint32_t>(states)),
                       std::move(out));
}

std::size_t perturbed_count(std::size_t length, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 100.0)) {
    throw DomainError("alpha must lie in [0, 100]");
  }
  return static_cast<std::size_t>(
      std::lround(alpha * static_cast<double>(length) / 100.0));
}

StateSequence perturb_tail(const StateSequence& seq, double alpha,
                           StateId replacement) {
  const std::size_t count = perturbed_count(seq.size(), alpha);
  if (replacement < 1 || replacement > seq.state_count()) {
    throw DomainError("replacement state " + std::to_string(replacement) +
                      " outside 1.." + std::to_string(seq.state_count()));
  }
  std::vector<StateId> states = seq.states();
  std::fill(states.end() - static_cast<long>(count), states.end(), replacement);
  return StateSequence(seq.spec(), std::move(states));
}

const Fixtures& fixtures() {
  static const Fixtures kFixtures = build_fixtures();
  return kFixtures;
}

StateSequence fixture_qz(double alpha) {
  return perturb_tail(fixtures().qx, alpha, kTailState);
}

}  // namespace seqcloseness
