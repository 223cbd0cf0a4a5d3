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

#include "seqcloseness/ingest.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "seqcloseness/csv.h"
#include "seqcloseness/errors.h"

namespace seqcloseness {
namespace {

void expect_header(const CsvRow& row,
                   const std::vector<std::string>& expected) {
  if (row.fields != expected) {
    std::string want;
    for (const std::string& f : expected) {
      if (!want.empty()) want += ',';
      want += f;
    }
    throw ParseError("expected header '" + want + "'", row.line);
  }
}

void expect_width(const CsvRow& row, std::size_t width) {
  if (row.fields.size() != width) {
    throw ParseError("expected " + std::to_string(width) + " fields, got " +
                         std::to_string(row.fields.size()),
                     row.line);
  }
}

Date parse_date_at(const std::string& text, std::size_t line) {
  try {
    return parse_date(text);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line);
  }
}

// Calls fn(date, value) for every day of each segment's range, inserting
// zeros for absent days when zero_fill is set.
template <typename Fn>
void walk_segment(const std::vector<const CountRow*>& rows, bool zero_fill,
                  Fn&& fn) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (zero_fill && i > 0) {
      for (Date d = rows[i - 1]->date + std::chrono::days{1};
           d < rows[i]->date; d += std::chrono::days{1}) {
        fn(d, nullptr);
      }
    }
    fn(rows[i]->date, rows[i]);
  }
}

std::map<std::string, std::vector<const CountRow*>> by_segment(
    const CountPanel& panel) {
  std::map<std::string, std::vector<const CountRow*>> out;
  for (const CountRow& row : panel.rows) out[row.segment_id].push_back(&row);
  return out;
}

void check_join(const CountPanel& panel, const PopulationTable& pops) {
  std::string missing;
  for (const std::string& id : panel.segments()) {
    if (!pops.sizes.contains(id)) {
      if (!missing.empty()) missing += ", ";
      missing += id;
    }
  }
  if (!missing.empty()) {
    throw DataError("segments without a population entry: " + missing);
  }
}

double ratio(const CountRow& row, std::uint64_t population) {
  if (row.count > population) {
    throw DataError("count " + std::to_string(row.count) + " exceeds population " +
                    std::to_string(population) + " for segment '" +
                    row.segment_id + "' on " + format_date(row.date) +
                    " (line " + std::to_string(row.line) + ")");
  }
  return static_cast<double>(row.count) / static_cast<double>(population);
}

}  // namespace

std::vector<std::string> CountPanel::segments() const {
  std::set<std::string> ids;
  for (const CountRow& row : rows) ids.insert(row.segment_id);
  return {ids.begin(), ids.end()};
}

CountPanel load_counts(std::istream& in) {
  CsvReader reader(in);
  CsvRow row;
  if (!reader.next(row)) throw ParseError("counts file has no header");
  expect_header(row, {"date", "segment_id", "count"});

  CountPanel panel;
  while (reader.next(row)) {
    expect_width(row, 3);
    if (row.fields[1].empty()) throw ParseError("empty segment_id", row.line);
    CountRow parsed;
    parsed.date = parse_date_at(row.fields[0], row.line);
    parsed.segment_id = row.fields[1];
    if (!row.fields[2].empty() && row.fields[2].front() == '-') {
      throw ParseError("negative count '" + row.fields[2] + "'", row.line);
    }
    parsed.count = parse_uint(row.fields[2], row.line);
    parsed.line = row.line;
    panel.rows.push_back(std::move(parsed));
  }

  std::stable_sort(panel.rows.begin(), panel.rows.end(),
                   [](const CountRow& a, const CountRow& b) {
                     return std::tie(a.segment_id, a.date) <
                            std::tie(b.segment_id, b.date);
                   });
  for (std::size_t i = 1; i < panel.rows.size(); ++i) {
    const CountRow& a = panel.rows[i - 1];
    const CountRow& b = panel.rows[i];
    if (a.segment_id == b.segment_id && a.date == b.date) {
      throw ParseError("duplicate row for segment '" + b.segment_id + "' on " +
                           format_date(b.date) + " (lines " +
                           std::to_string(std::min(a.line, b.line)) + " and " +
                           std::to_string(std::max(a.line, b.line)) + ")",
                       std::max(a.line, b.line));
    }
  }
  return panel;
}

CountPanel load_counts(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  return load_counts(in);
}

PopulationTable load_populations(std::istream& in) {
  CsvReader reader(in);
  CsvRow row;
  if (!reader.next(row)) throw ParseError("populations file has no header");
  expect_header(row, {"segment_id", "population"});

  PopulationTable table;
  std::unordered_map<std::string, std::size_t> first_line;
  while (reader.next(row)) {
    expect_width(row, 2);
    const std::string& id = row.fields[0];
    if (id.empty()) throw ParseError("empty segment_id", row.line);
    const std::string& text = row.fields[1];
    if (!text.empty() && text.front() == '-') {
      throw ParseError("population must be positive", row.line);
    }
    const std::uint64_t n = parse_uint(text, row.line);
    if (n == 0) throw ParseError("population must be positive", row.line);
    auto [it, inserted] = first_line.emplace(id, row.line);
    if (!inserted) {
      throw ParseError("duplicate segment_id '" + id + "' (lines " +
                           std::to_string(it->second) + " and " +
                           std::to_string(row.line) + ")",
                       row.line);
    }
    table.sizes.emplace(id, n);
  }
  return table;
}

PopulationTable load_populations(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  return load_populations(in);
}

ProportionSeries proportions(const CountPanel& panel,
                             const PopulationTable& pops,
                             const ProportionOptions& options) {
  check_join(panel, pops);
  ProportionSeries out;
  for (const auto& [id, rows] : by_segment(panel)) {
    const std::uint64_t population = pops.sizes.at(id);
    auto& series = out.by_segment[id];
    walk_segment(rows, options.zero_fill,
                 [&](Date date, const CountRow* row) {
                   series.push_back(
                       {date, row == nullptr ? 0.0 : ratio(*row, population)});
                 });
  }
  return out;
}

std::vector<ProportionPoint> pooled_proportions(
    const CountPanel& panel, const PopulationTable& pops,
    const ProportionOptions& options) {
  check_join(panel, pops);
  std::uint64_t total_population = 0;
  std::map<Date, std::uint64_t> totals;
  for (const auto& [id, rows] : by_segment(panel)) {
    const std::uint64_t population = pops.sizes.at(id);
    total_population += population;
    walk_segment(rows, options.zero_fill,
                 [&](Date date, const CountRow* row) {
                   if (row != nullptr) {
                     ratio(*row, population);  // range check
                     totals[date] += row->count;
                   } else {
                     totals.try_emplace(date, 0);
                   }
                 });
  }
  std::vector<ProportionPoint> out;
  out.reserve(totals.size());
  for (const auto& [date, count] : totals) {
    out.push_back({date, static_cast<double>(count) /
                             static_cast<double>(total_population)});
  }
  return out;
}

ObservationTable load_observations(std::istream& in) {
  CsvReader reader(in);
  CsvRow row;
  if (!reader.next(row)) throw ParseError("observation file has no header");
  const bool dated = !row.fields.empty() && row.fields.front() == "date";
  const std::size_t width = row.fields.size();
  ObservationTable table;
  table.dim = width - (dated ? 1 : 0);
  if (table.dim == 0) throw ParseError("no value columns", row.line);

  while (reader.next(row)) {
    expect_width(row, width);
    std::size_t col = 0;
    if (dated) table.dates.push_back(parse_date_at(row.fields[col++], row.line));
    std::vector<double> values;
    values.reserve(table.dim);
    for (; col < width; ++col) {
      values.push_back(parse_double(row.fields[col], row.line));
    }
    table.values.push_back(std::move(values));
  }
  if (table.values.empty()) throw ParseError("observation file has no rows");
  return table;
}

ObservationTable load_observations(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  return load_observations(in);
}

std::vector<StateId> load_state_list(std::istream& in) {
  std::vector<StateId> states;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) {
      const std::uint64_t v = parse_uint(token, line_number);
      if (v == 0 || v > UINT32_MAX) {
        throw ParseError("state '" + token + "' is not a positive 32-bit id",
                         line_number);
      }
      states.push_back(static_cast<StateId>(v));
    }
  }
  if (states.empty()) throw ParseError("state list is empty");
  return states;
}

std::vector<StateId> load_state_list(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  return load_state_list(in);
}

PredictorTable load_predictors(std::istream& in) {
  CsvReader reader(in);
  CsvRow row;
  if (!reader.next(row)) throw ParseError("predictor file has no header");
  if (row.fields.empty() || row.fields.front() != "week") {
    throw ParseError("first predictor column must be 'week'", row.line);
  }
  PredictorTable table;
  table.columns = row.fields;
  std::unordered_map<std::string, std::size_t> seen;
  while (reader.next(row)) {
    expect_width(row, table.columns.size());
    auto [it, inserted] = seen.emplace(row.fields.front(), row.line);
    if (!inserted) {
      throw ParseError("duplicate week '" + row.fields.front() + "' (lines " +
                           std::to_string(it->second) + " and " +
                           std::to_string(row.line) + ")",
                       row.line);
    }
    table.rows.push_back(row.fields);
  }
  return table;
}

PredictorTable load_predictors(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  return load_predictors(in);
}

void write_predictors(std::ostream& out, const PredictorTable& table) {
  auto write_row = [&out](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i > 0) out << ',';
      out << csv_escape(fields[i]);
    }
    out << '\n';
  };
  write_row(table.columns);
  for (const auto& row : table.rows) write_row(row);
}

ResponseTable export_response_table(const EvolutionMatrices& matrices,
                                    const PredictorTable& predictors,
                                    int delay) {
  if (delay < 0 || delay > 2) throw DomainError("delay must be 0, 1 or 2");
  if (predictors.columns.empty() || predictors.columns.front() != "week") {
    throw DomainError("predictor table must be keyed by 'week'");
  }
  const std::size_t n = matrices.size();
  if (n < 2) throw DomainError("need at least two periods for a response");

  std::unordered_map<std::string, const std::vector<std::string>*> lookup;
  for (const auto& row : predictors.rows) lookup.emplace(row.front(), &row);

  ResponseTable table;
  table.columns = {"week", "Z", "D"};
  table.columns.insert(table.columns.end(), predictors.columns.begin() + 1,
                       predictors.columns.end());

  const auto lag = static_cast<std::size_t>(delay);
  for (std::size_t t = 1; t < n; ++t) {
    const std::string& week = matrices.labels[t];
    // Response series index is t - 1; the predictor week sits `lag` earlier.
    if (t - 1 < lag) {
      table.unmatched_weeks.push_back(week);
      continue;
    }
    const auto found = lookup.find(matrices.labels[t - lag]);
    if (found == lookup.end()) {
      table.unmatched_weeks.push_back(week);
      continue;
    }
    std::vector<std::string> row = {week};
    if (matrices.sentinel(t, t - 1) != 0) {
      row.emplace_back("NA");
      row.emplace_back("NA");
    } else {
      row.push_back(format_number(matrices.z(t, t - 1)));
      row.push_back(format_number(matrices.d(t, t - 1)));
    }
    row.insert(row.end(), found->second->begin() + 1, found->second->end());
    table.rows.push_back(std::move(row));
  }
  return table;
}

void write_response_table(std::ostream& out, const ResponseTable& table) {
  write_predictors(out, PredictorTable{table.columns, table.rows});
}

}  // namespace seqcloseness
