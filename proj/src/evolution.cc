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

#include "seqcloseness/evolution.h"

#include <algorithm>
#include <mutex>

#include "seqcloseness/errors.h"
#include "seqcloseness/parallel.h"

namespace seqcloseness {
namespace {

StateSequence slice(const StateSequence& seq, std::size_t begin,
                    std::size_t end) {
  return StateSequence(seq.spec(),
                       {seq.states().begin() + static_cast<long>(begin),
                        seq.states().begin() + static_cast<long>(end)});
}

}  // namespace

std::vector<StateSequence> segment_by_count(const StateSequence& seq,
                                            std::size_t count) {
  if (count == 0) throw DomainError("segment count must be positive");
  if (count > seq.size()) {
    throw DomainError("cannot split " + std::to_string(seq.size()) +
                      " observations into " + std::to_string(count) +
                      " segments");
  }
  const std::size_t width = seq.size() / count;
  std::vector<StateSequence> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t begin = i * width;
    const std::size_t end = (i + 1 == count) ? seq.size() : begin + width;
    out.push_back(slice(seq, begin, end));
  }
  return out;
}

std::vector<LabeledSegment> segment_by_calendar(std::span<const Date> dates,
                                                const StateSequence& seq,
                                                Period period) {
  if (dates.size() != seq.size()) {
    throw DomainError("dates and states differ in length");
  }
  std::vector<LabeledSegment> out;
  for (PeriodGroup& g : group_by_period(dates, period)) {
    out.push_back({std::move(g.label), slice(seq, g.begin, g.end)});
  }
  return out;
}

EvolutionMatrices pairwise_closeness(std::span<const LabeledSegment> segments,
                                     const ClosenessParams& params,
                                     Aggregation aggregation,
                                     unsigned threads) {
  params.validate();
  const std::size_t n = segments.size();
  if (n < 2) throw DomainError("pairwise closeness needs at least 2 segments");

  EvolutionMatrices out;
  for (const LabeledSegment& s : segments) out.labels.push_back(s.label);
  out.accept = Matrix<double>(n, n, kSentinel);
  out.reject = Matrix<double>(n, n, kSentinel);
  out.z = Matrix<double>(n, n, kSentinel);
  out.d = Matrix<double>(n, n, kSentinel);
  out.sentinel = Matrix<std::uint8_t>(n, n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    out.accept(i, i) = 1.0;
    out.reject(i, i) = 0.0;
    out.z(i, i) = 0.0;
    out.d(i, i) = 0.0;
    out.sentinel(i, i) = 0;
  }

  std::mutex warnings_mutex;
  parallel_for(n * n, threads, [&](std::size_t cell) {
    const std::size_t i = cell / n;
    const std::size_t j = cell % n;
    if (i == j) return;
    ClosenessParams cell_params = params;
    cell_params.seed = derive_seed(params.seed, {i, j});
    try {
      const ClosenessResult result = closeness_analysis(
          segments[i].states, segments[j].states, cell_params, 1);
      const ClosenessSummary summary = aggregate(result, aggregation);
      out.accept(i, j) = summary.accept_prob;
      out.reject(i, j) = summary.reject_prob;
      out.z(i, j) = summary.z;
      out.d(i, j) = summary.d;
      out.sentinel(i, j) = 0;
    } catch (const UndeterminedError& e) {
      std::lock_guard<std::mutex> lock(warnings_mutex);
      out.warnings.push_back({i, j, e.what()});
    } catch (const DomainError& e) {
      std::lock_guard<std::mutex> lock(warnings_mutex);
      out.warnings.push_back({i, j, e.what()});
    }
  });

  std::sort(out.warnings.begin(), out.warnings.end(),
            [](const CellWarning& a, const CellWarning& b) {
              return a.row != b.row ? a.row < b.row : a.col < b.col;
            });
  return out;
}

Matrix<double> symmetrized(const Matrix<double>& m,
                           const Matrix<std::uint8_t>& sentinel) {
  if (m.rows() != m.cols()) throw DomainError("matrix must be square");
  if (sentinel.rows() != m.rows() || sentinel.cols() != m.cols()) {
    throw DomainError("sentinel mask does not match the matrix");
  }
  Matrix<double> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const double a = m(i, j);
      const double b = m(j, i);
      const bool a_missing = sentinel(i, j) != 0;
      const bool b_missing = sentinel(j, i) != 0;
      if (a_missing && b_missing) {
        out(i, j) = kSentinel;
      } else if (a_missing) {
        out(i, j) = b;
      } else if (b_missing) {
        out(i, j) = a;
      } else {
        out(i, j) = 0.5 * (a + b);
      }
    }
  }
  return out;
}

}  // namespace seqcloseness
