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

// Reproducible random streams and the discrete samplers used by the tester.
//
// The standard library's distribution objects are implementation-defined, so
// results would differ between libstdc++ and libc++. Everything here is built
// on the bit-exact std::mt19937_64 engine and hand-written samplers, which
// makes a (seed, path) pair produce the same numbers on every platform.
//
// Stream splitting rule: a child stream for path (k1, k2, ...) is seeded with
//   s = splitmix64(seed ^ kStreamSalt); s = splitmix64(s ^ k1); ...
// so that state b of cell (i, j) of an evolution run always draws from
// derive_seed(derive_seed(seed, {i, j}), {b}).

#ifndef SEQCLOSENESS_RANDOM_H_
#define SEQCLOSENESS_RANDOM_H_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <vector>

namespace seqcloseness {

std::uint64_t splitmix64(std::uint64_t x) noexcept;

// Seed of the child stream addressed by `path` under `seed`.
std::uint64_t derive_seed(std::uint64_t seed,
                          std::initializer_list<std::uint64_t> path) noexcept;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform on [0, n).
  std::uint64_t uniform_index(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

// Exact Poisson(mean) variate. Inversion by multiplication below mean 10,
// Hormann's transformed rejection (PTRS) above.
std::uint64_t sample_poisson(Rng& rng, double mean);

// Exact Binomial(n, p) variate. Sequential inversion when n*min(p,1-p) < 10,
// Hormann's BTRS otherwise.
std::uint64_t sample_binomial(Rng& rng, std::uint64_t n, double p);

// Index drawn with probability weights[i] / sum(weights). Weights must be
// non-negative with a positive sum.
std::size_t sample_categorical(Rng& rng, std::span<const double> weights);

// Counts of `trials` categorical draws from weights / sum(weights), generated
// as a chain of conditional binomials.
std::vector<std::uint64_t> sample_multinomial(Rng& rng, std::uint64_t trials,
                                              std::span<const double> weights);

}  // namespace seqcloseness

#endif  // SEQCLOSENESS_RANDOM_H_
