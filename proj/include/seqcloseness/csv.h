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

// Minimal CSV plumbing: UTF-8, comma separated, optional double-quoted fields.
// Lines starting with '#' are comments and blank lines are ignored, so files
// written with a provenance comment can be read back.

#ifndef SEQCLOSENESS_CSV_H_
#define SEQCLOSENESS_CSV_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "seqcloseness/matrix.h"

namespace seqcloseness {

struct CsvRow {
  std::vector<std::string> fields;
  std::size_t line = 0;  // 1-based physical line
};

class CsvReader {
 public:
  explicit CsvReader(std::istream& in) : in_(in) {}

  // Next data row; false at end of input.
  bool next(CsvRow& row);

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

std::vector<std::string> split_csv_line(std::string_view line,
                                        std::size_t line_number = 0);

// Quotes the field when it contains a comma, quote or newline.
std::string csv_escape(std::string_view field);

// Shortest decimal that round-trips to the same double.
std::string format_number(double value);

double parse_double(std::string_view text, std::size_t line = 0);
std::uint64_t parse_uint(std::string_view text, std::size_t line = 0);
std::int64_t parse_int(std::string_view text, std::size_t line = 0);

// Opens for reading; throws IoError when the file cannot be opened.
std::ifstream open_input(const std::filesystem::path& path);
std::ofstream open_output(const std::filesystem::path& path);

struct LabeledMatrix {
  std::vector<std::string> labels;
  Matrix<double> values;
};

// Square matrix with a header row of column labels and a leading label
// column. The top-left header cell is `corner`.
void write_labeled_matrix(std::ostream& out, const std::vector<std::string>& labels,
                          const Matrix<double>& m,
                          std::string_view corner = "segment");

// Reads either a labeled matrix as written above, or a plain numeric grid
// (labels then default to "1".."n"). Rows must all have the same width.
LabeledMatrix read_labeled_matrix(std::istream& in);

}  // namespace seqcloseness

#endif  // SEQCLOSENESS_CSV_H_
