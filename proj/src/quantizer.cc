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

#include "seqcloseness/quantizer.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "seqcloseness/errors.h"

namespace seqcloseness {
namespace {

// Bin of a single coordinate, 1..B.
std::uint32_t bin_of(const QuantizationSpec& spec, double v) {
  if (!(v >= 0.0) || v > spec.p_max()) {
    throw DomainError("quantize_value: " + std::to_string(v) +
                      " outside [0, " + std::to_string(spec.p_max()) + "]");
  }
  const std::uint32_t bins = spec.bins();
  if (v == 0.0) return 1;
  // Initial guess from the width, then settle against the exact edges so the
  // (s_i, s_{i+1}] contract holds despite rounding in v / width.
  auto i = static_cast<std::int64_t>(std::ceil(v / spec.bin_width()));
  i = std::clamp<std::int64_t>(i, 1, bins);
  while (i > 1 && v <= spec.edge(static_cast<std::uint32_t>(i))) --i;
  while (i < bins && v > spec.edge(static_cast<std::uint32_t>(i + 1))) ++i;
  return static_cast<std::uint32_t>(i);
}

}  // namespace

QuantizationSpec::QuantizationSpec(double p_max, std::uint32_t bins,
                                   std::uint32_t dim)
    : p_max_(p_max), bins_(bins), dim_(dim), state_count_(1) {
  if (!(p_max > 0.0 && p_max <= 1.0)) {
    throw DomainError("p_max must lie in (0, 1]");
  }
  if (bins < 2) throw DomainError("B must be at least 2");
  if (dim < 1) throw DomainError("d must be at least 1");
  for (std::uint32_t k = 0; k < dim; ++k) {
    if (state_count_ > (std::size_t{1} << 32) / bins) {
      throw DomainError("B^d is too large");
    }
    state_count_ *= bins;
  }
}

double QuantizationSpec::edge(std::uint32_t i) const noexcept {
  if (i == bins_ + 1) return p_max_;
  return static_cast<double>(i - 1) * p_max_ / bins_;
}

std::vector<double> QuantizationSpec::edges() const {
  std::vector<double> out;
  out.reserve(bins_ + 1);
  for (std::uint32_t i = 1; i <= bins_ + 1; ++i) out.push_back(edge(i));
  return out;
}

QuantizationSpec build_uniform_spec(double p_max, std::uint32_t bins,
                                    std::uint32_t dim) {
  return QuantizationSpec(p_max, bins, dim);
}

QuantizationSpec raw_state_spec(std::uint32_t state_count) {
  return QuantizationSpec(1.0, state_count, 1);
}

StateSequence::StateSequence(QuantizationSpec spec, std::vector<StateId> states)
    : spec_(spec), states_(std::move(states)) {
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (states_[i] < 1 || states_[i] > spec_.state_count()) {
      throw DomainError("state " + std::to_string(states_[i]) +
                        " at index " + std::to_string(i) + " outside 1.." +
                        std::to_string(spec_.state_count()));
    }
  }
}

StateId quantize_value(const QuantizationSpec& spec,
                       std::span<const double> v) {
  if (v.size() != spec.dim()) {
    throw DomainError("quantize_value: expected " + std::to_string(spec.dim()) +
                      " components, got " + std::to_string(v.size()));
  }
  std::size_t state = 0;
  std::size_t stride = 1;
  for (double component : v) {
    state += (bin_of(spec, component) - 1) * stride;
    stride *= spec.bins();
  }
  return static_cast<StateId>(state + 1);
}

StateSequence quantize_sequence(const QuantizationSpec& spec,
                                std::span<const std::vector<double>> series) {
  std::vector<StateId> states;
  states.reserve(series.size());
  for (std::size_t i = 0; i < series.size(); ++i) {
    try {
      states.push_back(quantize_value(spec, series[i]));
    } catch (const DomainError& e) {
      throw DomainError("index " + std::to_string(i) + ": " + e.what());
    }
  }
  return StateSequence(spec, std::move(states));
}

StateSequence quantize_sequence(const QuantizationSpec& spec,
                                std::span<const double> series) {
  std::vector<StateId> states;
  states.reserve(series.size());
  for (std::size_t i = 0; i < series.size(); ++i) {
    try {
      states.push_back(quantize_value(spec, series[i]));
    } catch (const DomainError& e) {
      throw DomainError("index " + std::to_string(i) + ": " + e.what());
    }
  }
  return StateSequence(spec, std::move(states));
}

double default_p_max(std::span<const double> observed) {
  double peak = 0.0;
  for (double v : observed) {
    if (v > peak) peak = v;
  }
  if (!(peak > 0.0)) return 1.0;
  if (peak >= 1.0) return 1.0;
  const double scale = std::pow(10.0, std::floor(std::log10(peak)) - 1.0);
  double rounded = std::ceil(peak / scale) * scale;
  if (rounded < peak) rounded += scale;
  return std::min(rounded, 1.0);
}

}  // namespace seqcloseness
