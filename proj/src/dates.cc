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

#include "seqcloseness/dates.h"

#include <cctype>
#include <charconv>
#include <cstdio>

#include "seqcloseness/errors.h"

namespace seqcloseness {
namespace {

using std::chrono::day;
using std::chrono::days;
using std::chrono::month;
using std::chrono::year;
using std::chrono::year_month_day;

int parse_digits(std::string_view text, std::string_view whole) {
  int value = 0;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("invalid date '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

std::string month_label(Date date) {
  const year_month_day ymd{date};
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()));
  return buf;
}

}  // namespace

Date parse_date(std::string_view text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') {
    throw ParseError("invalid date '" + std::string(text) +
                     "' (expected YYYY-MM-DD)");
  }
  const int y = parse_digits(text.substr(0, 4), text);
  const int m = parse_digits(text.substr(5, 2), text);
  const int d = parse_digits(text.substr(8, 2), text);
  const year_month_day ymd{year{y}, month{static_cast<unsigned>(m)},
                           day{static_cast<unsigned>(d)}};
  if (!ymd.ok()) {
    throw ParseError("invalid date '" + std::string(text) + "'");
  }
  return Date{ymd};
}

std::string format_date(Date date) {
  const year_month_day ymd{date};
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u",
                static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()));
  return buf;
}

std::string_view to_string(Period period) {
  return period == Period::kWeek ? "week" : "month";
}

Period parse_period(std::string_view name) {
  if (name == "week") return Period::kWeek;
  if (name == "month") return Period::kMonth;
  throw DomainError("unknown period '" + std::string(name) +
                    "' (expected week or month)");
}

std::vector<PeriodGroup> group_by_period(std::span<const Date> dates,
                                         Period period) {
  if (dates.empty()) throw DomainError("cannot group an empty series");
  for (std::size_t i = 1; i < dates.size(); ++i) {
    if (dates[i] < dates[i - 1]) {
      throw DomainError("dates must be non-decreasing (index " +
                        std::to_string(i) + ")");
    }
  }

  std::vector<PeriodGroup> groups;
  if (period == Period::kMonth) {
    for (std::size_t i = 0; i < dates.size(); ++i) {
      std::string label = month_label(dates[i]);
      if (groups.empty() || groups.back().label != label) {
        groups.push_back({std::move(label), i, i});
      }
      groups.back().end = i + 1;
    }
    return groups;
  }

  const Date anchor = dates.front();
  long current_block = -1;
  for (std::size_t i = 0; i < dates.size(); ++i) {
    const long block = (dates[i] - anchor).count() / 7;
    if (block != current_block) {
      groups.push_back({format_date(anchor + days{7 * block}), i, i});
      current_block = block;
    }
    groups.back().end = i + 1;
  }
  const Date last_block_start = anchor + days{7 * current_block};
  const bool trailing_partial = (dates.back() - last_block_start).count() < 6;
  if (trailing_partial && groups.size() > 1) {
    const std::size_t end = groups.back().end;
    groups.pop_back();
    groups.back().end = end;
  }
  return groups;
}

}  // namespace seqcloseness
