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

// Panel data loading: per-segment daily counts, segment populations, the
// observed proportions n / N, and the weekly response table export.
//
// File formats (UTF-8, comma separated, header row mandatory, '#' comments):
//   counts:       date,segment_id,count
//   populations:  segment_id,population
//   observations: [date,]value[,value...]   one column per dimension
//   predictors:   week,<name>,...           values kept verbatim

#ifndef SEQCLOSENESS_INGEST_H_
#define SEQCLOSENESS_INGEST_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "seqcloseness/dates.h"
#include "seqcloseness/evolution.h"

namespace seqcloseness {

struct CountRow {
  Date date;
  std::string segment_id;
  std::uint64_t count = 0;
  std::size_t line = 0;  // source line, for diagnostics
};

struct CountPanel {
  std::vector<CountRow> rows;  // sorted by (segment_id, date)

  // Distinct segment ids in sorted order.
  std::vector<std::string> segments() const;
};

// Throws ParseError (with line number) on malformed rows, negative counts
// and duplicate (date, segment_id) keys.
CountPanel load_counts(std::istream& in);
CountPanel load_counts(const std::filesystem::path& path);

struct PopulationTable {
  std::map<std::string, std::uint64_t> sizes;
};

// Throws ParseError on non-positive populations and duplicate ids.
PopulationTable load_populations(std::istream& in);
PopulationTable load_populations(const std::filesystem::path& path);

struct ProportionPoint {
  Date date;
  double value = 0.0;
};

struct ProportionSeries {
  std::map<std::string, std::vector<ProportionPoint>> by_segment;
};

struct ProportionOptions {
  // Missing dates inside a segment's observed range are gaps by default.
  // With zero_fill they become explicit zero proportions.
  bool zero_fill = false;
};

// n / N per row. Throws DataError when segments are missing from `pops`
// (all missing ids are listed) or when n > N.
ProportionSeries proportions(const CountPanel& panel,
                             const PopulationTable& pops,
                             const ProportionOptions& options = {});

// Sum of counts over all segments divided by the total population of the
// panel's segments, per date.
std::vector<ProportionPoint> pooled_proportions(
    const CountPanel& panel, const PopulationTable& pops,
    const ProportionOptions& options = {});

// Observation series: one row per time step, `dim` value columns. Dates are
// present when the first header column is "date".
struct ObservationTable {
  std::vector<Date> dates;  // empty for undated tables
  std::vector<std::vector<double>> values;
  std::size_t dim = 0;
};

ObservationTable load_observations(std::istream& in);
ObservationTable load_observations(const std::filesystem::path& path);

// Whitespace or comma separated positive integers; '#' starts a comment.
std::vector<StateId> load_state_list(std::istream& in);
std::vector<StateId> load_state_list(const std::filesystem::path& path);

struct PredictorTable {
  std::vector<std::string> columns;  // columns[0] == "week"
  std::vector<std::vector<std::string>> rows;
};

// Throws ParseError unless the first header column is "week", every row has
// the header's width and week keys are unique.
PredictorTable load_predictors(std::istream& in);
PredictorTable load_predictors(const std::filesystem::path& path);
void write_predictors(std::ostream& out, const PredictorTable& table);

struct ResponseTable {
  std::vector<std::string> columns;  // week, Z, D, then predictor columns
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> unmatched_weeks;
};

// Response for week t is the (t, t-1) cell of the z and d matrices, t >= 1.
// Predictors are taken from the response week `delay` steps earlier in that
// series, so the first `delay` response weeks are unmatched. Response weeks
// whose lagged key is missing from `predictors` are unmatched as well.
// Sentinel cells are written as NA.
ResponseTable export_response_table(const EvolutionMatrices& matrices,
                                    const PredictorTable& predictors,
                                    int delay);
void write_response_table(std::ostream& out, const ResponseTable& table);

}  // namespace seqcloseness

#endif  // SEQCLOSENESS_INGEST_H_
