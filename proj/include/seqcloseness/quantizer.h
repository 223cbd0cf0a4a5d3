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

// Uniform quantization of proportions in [0, p_max]^d into B^d states.
//
// Bin i (1-based) of a dimension covers (s_i, s_{i+1}] with
// s_i = (i - 1) * p_max / B. The value 0 belongs to bin 1. Multi-dimensional
// bins are flattened row-major with dimension 1 varying fastest:
//   state = 1 + sum_k (i_k - 1) * B^k.

#ifndef SEQCLOSENESS_QUANTIZER_H_
#define SEQCLOSENESS_QUANTIZER_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace seqcloseness {

// State identifiers are 1-based.
using StateId = std::uint32_t;

class QuantizationSpec {
 public:
  // Throws DomainError unless 0 < p_max <= 1, bins >= 2 and dim >= 1.
  QuantizationSpec(double p_max, std::uint32_t bins, std::uint32_t dim);

  double p_max() const noexcept { return p_max_; }
  std::uint32_t bins() const noexcept { return bins_; }
  std::uint32_t dim() const noexcept { return dim_; }
  double bin_width() const noexcept { return p_max_ / bins_; }

  // B^d.
  std::size_t state_count() const noexcept { return state_count_; }

  // The B + 1 edges of one dimension.
  std::vector<double> edges() const;
  // Edge s_i for i in 1..B+1.
  double edge(std::uint32_t i) const noexcept;

  friend bool operator==(const QuantizationSpec&,
                         const QuantizationSpec&) = default;

 private:
  double p_max_;
  std::uint32_t bins_;
  std::uint32_t dim_;
  std::size_t state_count_;
};

QuantizationSpec build_uniform_spec(double p_max, std::uint32_t bins,
                                    std::uint32_t dim);

// Trajectory over the states of `spec`.
class StateSequence {
 public:
  // Throws DomainError if some state is outside 1..state_count.
  StateSequence(QuantizationSpec spec, std::vector<StateId> states);

  const QuantizationSpec& spec() const noexcept { return spec_; }
  const std::vector<StateId>& states() const noexcept { return states_; }
  std::size_t size() const noexcept { return states_.size(); }
  bool empty() const noexcept { return states_.empty(); }
  StateId operator[](std::size_t i) const { return states_[i]; }
  std::size_t state_count() const noexcept { return spec_.state_count(); }

  friend bool operator==(const StateSequence&, const StateSequence&) = default;

 private:
  QuantizationSpec spec_;
  std::vector<StateId> states_;
};

// Spec for raw state lists over 1..state_count (one dimension, p_max = 1).
QuantizationSpec raw_state_spec(std::uint32_t state_count);

StateId quantize_value(const QuantizationSpec& spec, std::span<const double> v);
inline StateId quantize_value(const QuantizationSpec& spec, double v) {
  return quantize_value(spec, std::span<const double>(&v, 1));
}

// `series` holds one proportion vector of length d per row.
StateSequence quantize_sequence(const QuantizationSpec& spec,
                                std::span<const std::vector<double>> series);
// Scalar series convenience for d = 1.
StateSequence quantize_sequence(const QuantizationSpec& spec,
                                std::span<const double> series);

// Default upper bound: the largest observed component, rounded up to two
// significant digits and capped at 1. Returns 1 when nothing positive was seen.
double default_p_max(std::span<const double> observed);

}  // namespace seqcloseness

#endif  // SEQCLOSENESS_QUANTIZER_H_
