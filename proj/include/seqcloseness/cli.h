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

// Command-line front end. Everything lives in a library so the commands can
// be exercised in-process by tests.

#ifndef SEQCLOSENESS_CLI_H_
#define SEQCLOSENESS_CLI_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "seqcloseness/closeness_tester.h"
#include "seqcloseness/dates.h"

namespace seqcloseness {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 2;       // usage, I/O, parse, domain
inline constexpr int kExitUndetermined = 3;  // every state was a sentinel

inline constexpr int kSummarySchemaVersion = 1;
inline constexpr const char* kSeedEnvVar = "SEQCLOSENESS_SEED";

struct RunConfig {
  std::string subcommand;

  double epsilon = 0.1;
  double c = 100.0;
  std::uint32_t iterations = 5;  // N
  std::uint32_t bins = 20;       // B
  std::uint64_t mu = 1;
  std::uint32_t dim = 1;
  std::uint64_t seed = 0;
  Aggregation aggregation = Aggregation::kMean;
  std::optional<double> p_max;  // derived from the data when unset
  Period period = Period::kMonth;
  std::size_t k = 3;
  int delay = 0;
  unsigned threads = 0;  // 0: hardware concurrency
  std::filesystem::path out_dir = ".";

  // Positional inputs and subcommand-specific options.
  std::vector<std::string> inputs;
  std::string counts;
  std::string populations;
  std::string segment;
  bool zero_fill = false;
  bool symmetrize = false;
  std::string matrix;
  bool renormalize = false;
  std::size_t length = 100;
  std::optional<std::uint32_t> initial_state;
  bool export_fixtures = false;
  std::string matrices_dir;
  std::string predictors;
};

// One '#' comment recording the full configuration. Worker count and output
// directory are left out because they cannot change any output byte.
std::string provenance_line(const RunConfig& config);

// Parses argv and runs the subcommand. Results go to files under --out-dir;
// summaries go to `out`, diagnostics to `err`. Returns an exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

// Runs an already parsed configuration.
int run_config(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace seqcloseness

#endif  // SEQCLOSENESS_CLI_H_
