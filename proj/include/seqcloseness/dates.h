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

#ifndef SEQCLOSENESS_DATES_H_
#define SEQCLOSENESS_DATES_H_

#include <chrono>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace seqcloseness {

using Date = std::chrono::sys_days;

// Strict ISO-8601 calendar date, YYYY-MM-DD. Throws ParseError.
Date parse_date(std::string_view text);
std::string format_date(Date date);

enum class Period { kWeek, kMonth };

std::string_view to_string(Period period);
Period parse_period(std::string_view name);

// A run of consecutive observations sharing one calendar period:
// indices [begin, end) of the input.
struct PeriodGroup {
  std::string label;
  std::size_t begin = 0;
  std::size_t end = 0;
};

// Groups non-decreasing dates by period.
//
// kMonth: calendar months, labelled YYYY-MM; partial months are kept.
// kWeek: 7-day blocks anchored at the first date, labelled by the block's
//   first day (YYYY-MM-DD). A trailing block that does not span 7 calendar
//   days is merged into the previous block.
//
// Throws DomainError on empty input or decreasing dates.
std::vector<PeriodGroup> group_by_period(std::span<const Date> dates,
                                         Period period);

}  // namespace seqcloseness

#endif  // SEQCLOSENESS_DATES_H_
