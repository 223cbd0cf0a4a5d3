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

#include "seqcloseness/csv.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

#include "seqcloseness/errors.h"

namespace seqcloseness {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool is_number(std::string_view text) {
  text = trim(text);
  double value;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc() && ptr == text.data() + text.size() &&
         !text.empty();
}

}  // namespace

bool CsvReader::next(CsvRow& row) {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    if (line_ == 1 && line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) {
      line.erase(0, 3);  // UTF-8 byte order mark
    }
    const std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    row.fields = split_csv_line(view, line_);
    row.line = line_;
    return true;
  }
  return false;
}

std::vector<std::string> split_csv_line(std::string_view line,
                                        std::size_t line_number) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
      was_quoted = true;
    } else if (c == ',') {
      fields.push_back(was_quoted ? current : std::string(trim(current)));
      current.clear();
      was_quoted = false;
    } else {
      current.push_back(c);
    }
  }
  if (quoted) throw ParseError("unterminated quoted field", line_number);
  fields.push_back(was_quoted ? current : std::string(trim(current)));
  return fields;
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string format_number(double value) {
  if (value == 0.0) return "0";  // also folds -0
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

double parse_double(std::string_view text, std::size_t line) {
  const std::string_view t = trim(text);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty() ||
      !std::isfinite(value)) {
    throw ParseError("expected a number, got '" + std::string(text) + "'",
                     line);
  }
  return value;
}

std::uint64_t parse_uint(std::string_view text, std::size_t line) {
  const std::string_view t = trim(text);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    throw ParseError(
        "expected a non-negative integer, got '" + std::string(text) + "'",
        line);
  }
  return value;
}

std::int64_t parse_int(std::string_view text, std::size_t line) {
  const std::string_view t = trim(text);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    throw ParseError("expected an integer, got '" + std::string(text) + "'",
                     line);
  }
  return value;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  return out;
}

void write_labeled_matrix(std::ostream& out,
                          const std::vector<std::string>& labels,
                          const Matrix<double>& m, std::string_view corner) {
  out << csv_escape(corner);
  for (const std::string& label : labels) out << ',' << csv_escape(label);
  out << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << csv_escape(labels[i]);
    for (double v : m.row(i)) out << ',' << format_number(v);
    out << '\n';
  }
}

LabeledMatrix read_labeled_matrix(std::istream& in) {
  CsvReader reader(in);
  std::vector<CsvRow> rows;
  CsvRow row;
  while (reader.next(row)) rows.push_back(row);
  if (rows.empty()) throw ParseError("matrix file is empty");

  // Labeled when the header's second cell is not a number.
  const bool labeled = rows.front().fields.size() > 1 &&
                       !is_number(rows.front().fields[1]);
  LabeledMatrix out;
  std::size_t first_data = 0;
  std::size_t first_col = 0;
  if (labeled) {
    const auto& header = rows.front().fields;
    out.labels.assign(header.begin() + 1, header.end());
    first_data = 1;
    first_col = 1;
  }

  const std::size_t n = rows.size() - first_data;
  const std::size_t width = rows[first_data < rows.size() ? first_data : 0]
                                .fields.size() - first_col;
  if (n == 0) throw ParseError("matrix file has no data rows");
  if (labeled && width != out.labels.size()) {
    throw ParseError("row width does not match the header",
                     rows[first_data].line);
  }
  out.values = Matrix<double>(n, width);
  std::vector<std::string> row_labels;
  for (std::size_t r = 0; r < n; ++r) {
    const CsvRow& cur = rows[first_data + r];
    if (cur.fields.size() != width + first_col) {
      throw ParseError("expected " + std::to_string(width + first_col) +
                           " fields, got " + std::to_string(cur.fields.size()),
                       cur.line);
    }
    if (labeled) row_labels.push_back(cur.fields[0]);
    for (std::size_t c = 0; c < width; ++c) {
      out.values(r, c) = parse_double(cur.fields[first_col + c], cur.line);
    }
  }
  if (!labeled) {
    for (std::size_t r = 0; r < n; ++r) out.labels.push_back(std::to_string(r + 1));
  } else if (n == width && row_labels != out.labels) {
    throw ParseError("row labels do not match the column labels");
  } else if (n != width) {
    out.labels = row_labels;  // rectangular: rows carry the labels
  }
  return out;
}

}  // namespace seqcloseness
