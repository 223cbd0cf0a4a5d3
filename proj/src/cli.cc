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

#include "seqcloseness/cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>
#include <utility>

#include "seqcloseness/baselines.h"
#include "seqcloseness/clustering.h"
#include "seqcloseness/csv.h"
#include "seqcloseness/errors.h"
#include "seqcloseness/evolution.h"
#include "seqcloseness/ingest.h"
#include "seqcloseness/random.h"
#include "seqcloseness/simdata.h"

namespace seqcloseness {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

constexpr std::string_view kFixturePrefix = "fixture:";

// A resolved input: either states already, or raw observations that still
// need a shared quantization.
struct Input {
  std::optional<StateSequence> states;
  std::optional<ObservationTable> observations;
};

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

unsigned worker_count(const RunConfig& config) {
  if (config.threads > 0) return config.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

ClosenessParams closeness_params(const RunConfig& config) {
  ClosenessParams params;
  params.epsilon = config.epsilon;
  params.c = config.c;
  params.iterations = config.iterations;
  params.min_transitions = config.mu;
  params.seed = config.seed;
  params.validate();
  return params;
}

void write_output(const RunConfig& config, const std::string& name,
                  const std::function<void(std::ostream&)>& body,
                  bool comment_header = true) {
  std::ostringstream buffer;
  if (comment_header) buffer << provenance_line(config) << '\n';
  body(buffer);
  fs::create_directories(config.out_dir);
  std::ofstream out = open_output(config.out_dir / name);
  out << buffer.str();
  out.flush();
  if (!out) throw IoError("failed writing '" + (config.out_dir / name).string() + "'");
}

void write_state_list(std::ostream& out, const StateSequence& seq) {
  for (StateId s : seq.states()) out << s << '\n';
}

StateSequence resolve_fixture(std::string_view name) {
  if (name == "qx") return fixtures().qx;
  if (name == "qy") return fixtures().qy;
  if (name == "qz") return fixtures().qz;
  if (name.starts_with("qz:")) {
    return fixture_qz(parse_double(name.substr(3)));
  }
  throw DomainError("unknown fixture '" + std::string(name) +
                    "' (expected qx, qy, qz or qz:<alpha>)");
}

// A file whose first data line starts with a digit is a state list;
// anything else must be an observation table with a header row.
bool looks_like_state_list(const fs::path& path) {
  std::ifstream in = open_input(path);
  std::string line;
  while (std::getline(in, line)) {
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    return line[pos] >= '0' && line[pos] <= '9';
  }
  throw ParseError("'" + path.string() + "' has no data");
}

Input load_input(const std::string& spec, const RunConfig& config) {
  Input input;
  if (std::string_view(spec).starts_with(kFixturePrefix)) {
    input.states = resolve_fixture(std::string_view(spec).substr(kFixturePrefix.size()));
  } else if (looks_like_state_list(spec)) {
    input.states = StateSequence(raw_state_spec(config.bins), load_state_list(fs::path(spec)));
  } else {
    input.observations = load_observations(fs::path(spec));
  }
  return input;
}

QuantizationSpec observation_spec(
    const RunConfig& config,
    std::initializer_list<const ObservationTable*> tables) {
  std::vector<double> all;
  for (const ObservationTable* t : tables) {
    if (t->dim != config.dim) {
      throw DomainError("input has " + std::to_string(t->dim) +
                        " value columns but --dim is " +
                        std::to_string(config.dim));
    }
    for (const auto& row : t->values) all.insert(all.end(), row.begin(), row.end());
  }
  const double p_max = config.p_max ? *config.p_max : default_p_max(all);
  return build_uniform_spec(p_max, config.bins, config.dim);
}

std::pair<StateSequence, StateSequence> resolve_pair(const RunConfig& config) {
  if (config.inputs.size() != 2) throw DomainError("expected two inputs");
  Input a = load_input(config.inputs[0], config);
  Input b = load_input(config.inputs[1], config);
  if (a.states && b.states) {
    if (!(a.states->spec() == b.states->spec())) {
      throw DomainError("inputs have different state spaces (" +
                        std::to_string(a.states->state_count()) + " vs " +
                        std::to_string(b.states->state_count()) + " states)");
    }
    return {std::move(*a.states), std::move(*b.states)};
  }
  if (a.observations && b.observations) {
    const QuantizationSpec spec =
        observation_spec(config, {&*a.observations, &*b.observations});
    return {quantize_sequence(spec, a.observations->values),
            quantize_sequence(spec, b.observations->values)};
  }
  throw DomainError("cannot compare a state list with an observation table");
}

// Dated scalar or vector series for the evolution command.
struct DatedSeries {
  std::vector<Date> dates;
  std::vector<std::vector<double>> values;
  std::size_t dim = 1;
};

DatedSeries resolve_dated(const RunConfig& config) {
  DatedSeries out;
  if (!config.counts.empty() || !config.populations.empty()) {
    if (config.counts.empty() || config.populations.empty()) {
      throw DomainError("--counts and --populations go together");
    }
    const CountPanel panel = load_counts(fs::path(config.counts));
    const PopulationTable pops = load_populations(fs::path(config.populations));
    const ProportionOptions options{config.zero_fill};
    std::vector<ProportionPoint> points;
    if (config.segment.empty()) {
      points = pooled_proportions(panel, pops, options);
    } else {
      ProportionSeries series = proportions(panel, pops, options);
      const auto it = series.by_segment.find(config.segment);
      if (it == series.by_segment.end()) {
        throw DataError("segment '" + config.segment + "' not in the panel");
      }
      points = std::move(it->second);
    }
    for (const ProportionPoint& p : points) {
      out.dates.push_back(p.date);
      out.values.push_back({p.value});
    }
    return out;
  }
  if (config.inputs.size() != 1) {
    throw DomainError("evolve needs one dated observation file or --counts");
  }
  ObservationTable table = load_observations(fs::path(config.inputs[0]));
  if (table.dates.empty()) {
    throw DomainError("evolve needs a 'date' column in '" + config.inputs[0] + "'");
  }
  out.dates = std::move(table.dates);
  out.values = std::move(table.values);
  out.dim = table.dim;
  return out;
}

int cmd_closeness(const RunConfig& config, std::ostream& out,
                  std::ostream& err) {
  const auto [x, y] = resolve_pair(config);
  const ClosenessParams params = closeness_params(config);
  const ClosenessResult result =
      closeness_analysis(x, y, params, worker_count(config));

  write_output(config, "closeness_states.csv", [&](std::ostream& os) {
    os << "state,accept_prob,reject_prob,z_mean,d_mean,sentinel\n";
    for (std::size_t b = 0; b < result.per_state.size(); ++b) {
      const StateTestResult& s = result.per_state[b];
      os << b + 1 << ',' << format_number(s.accept_prob) << ','
         << format_number(s.reject_prob) << ',' << format_number(s.z_mean)
         << ',' << format_number(s.d_mean) << ',' << (s.sentinel ? 1 : 0)
         << '\n';
    }
  });

  Json summary;
  summary["schema_version"] = kSummarySchemaVersion;
  summary["provenance"] = provenance_line(config).substr(2);
  summary["params"] = {
      {"epsilon", params.epsilon},
      {"C", params.c},
      {"N", params.iterations},
      {"states", result.params.state_count},
      {"mu", params.min_transitions},
      {"seed", params.seed},
      {"aggregation", std::string(to_string(config.aggregation))},
      {"sample_size", required_sample_size(params.epsilon, params.c,
                                           result.params.state_count)}};
  const auto sentinels = static_cast<std::size_t>(
      std::count_if(result.per_state.begin(), result.per_state.end(),
                    [](const StateTestResult& s) { return s.sentinel; }));
  summary["states_total"] = result.per_state.size();
  summary["sentinel_states"] = sentinels;

  int status = kExitOk;
  try {
    const ClosenessSummary agg = aggregate(result, config.aggregation);
    summary["status"] = "ok";
    summary["states_used"] = agg.states_used;
    summary["accept_prob"] = agg.accept_prob;
    summary["reject_prob"] = agg.reject_prob;
    summary["z"] = agg.z;
    summary["d"] = agg.d;
  } catch (const UndeterminedError& e) {
    summary["status"] = "undetermined";
    summary["states_used"] = 0;
    summary["accept_prob"] = nullptr;
    summary["reject_prob"] = nullptr;
    summary["z"] = nullptr;
    summary["d"] = nullptr;
    err << "seqcloseness: " << e.what() << '\n';
    status = kExitUndetermined;
  }
  const std::string text = summary.dump(2) + "\n";
  write_output(config, "closeness.json",
               [&](std::ostream& os) { os << text; }, false);
  out << text;
  return status;
}

int cmd_evolve(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const DatedSeries series = resolve_dated(config);
  if (series.dim != config.dim) {
    throw DomainError("input has " + std::to_string(series.dim) +
                      " value columns but --dim is " + std::to_string(config.dim));
  }
  std::vector<double> all;
  for (const auto& row : series.values) all.insert(all.end(), row.begin(), row.end());
  const double p_max = config.p_max ? *config.p_max : default_p_max(all);
  const QuantizationSpec spec = build_uniform_spec(p_max, config.bins, config.dim);
  const StateSequence seq = quantize_sequence(spec, series.values);
  const std::vector<LabeledSegment> segments =
      segment_by_calendar(series.dates, seq, config.period);

  const EvolutionMatrices m = pairwise_closeness(
      segments, closeness_params(config), config.aggregation, worker_count(config));

  const std::pair<const char*, const Matrix<double>*> outputs[] = {
      {"accept", &m.accept}, {"reject", &m.reject}, {"z", &m.z}, {"d", &m.d}};
  for (const auto& [name, matrix] : outputs) {
    write_output(config, std::string(name) + ".csv", [&](std::ostream& os) {
      write_labeled_matrix(os, m.labels, *matrix, "period");
    });
    if (config.symmetrize) {
      const Matrix<double> sym = symmetrized(*matrix, m.sentinel);
      write_output(config, std::string(name) + "_sym.csv", [&](std::ostream& os) {
        write_labeled_matrix(os, m.labels, sym, "period");
      });
    }
  }
  for (const CellWarning& w : m.warnings) {
    err << "warning: cell (" << m.labels[w.row] << ", " << m.labels[w.col]
        << "): " << w.message << '\n';
  }
  out << "evolve: " << m.size() << " periods, p_max=" << format_number(p_max)
      << ", " << m.warnings.size() << " untested cells\n";
  return kExitOk;
}

int cmd_cluster(const RunConfig& config, std::ostream& out, std::ostream&) {
  if (config.inputs.size() != 1) throw DomainError("cluster needs one matrix file");
  std::ifstream in = open_input(config.inputs[0]);
  const LabeledMatrix matrix = read_labeled_matrix(in);
  KMeansOptions options;
  options.k = config.k;
  options.seed = config.seed;
  const ClusterAssignment result = kmeans_rows(matrix.values, options);

  write_output(config, "clusters.csv", [&](std::ostream& os) {
    os << "segment,cluster,severity_rank,severity\n";
    for (std::size_t r = 0; r < matrix.values.rows(); ++r) {
      os << csv_escape(matrix.labels[r]) << ',' << result.labels[r] << ','
         << result.severity(r) << ','
         << severity_name(result.severity(r), config.k) << '\n';
    }
  });
  out << "cluster: " << matrix.values.rows() << " rows, k=" << config.k
      << ", objective=" << format_number(result.objective) << '\n';
  return kExitOk;
}

int cmd_simulate(const RunConfig& config, std::ostream& out, std::ostream&) {
  if (config.export_fixtures) {
    const Fixtures& f = fixtures();
    write_output(config, "qx.txt", [&](std::ostream& os) { write_state_list(os, f.qx); });
    write_output(config, "qy.txt", [&](std::ostream& os) { write_state_list(os, f.qy); });
    write_output(config, "qz.txt", [&](std::ostream& os) { write_state_list(os, f.qz); });
    std::vector<std::string> labels;
    for (std::size_t s = 1; s <= f.printed_matrix.rows(); ++s) {
      labels.push_back(std::to_string(s));
    }
    write_output(config, "transition_matrix.csv", [&](std::ostream& os) {
      write_labeled_matrix(os, labels, f.printed_matrix, "state");
    });
    out << "simulate: exported fixtures\n";
    return kExitOk;
  }

  std::optional<TransitionMatrix> loaded;
  if (!config.matrix.empty()) {
    std::ifstream in = open_input(config.matrix);
    Matrix<double> values = read_labeled_matrix(in).values;
    loaded = config.renormalize ? TransitionMatrix::Renormalized(std::move(values))
                                : TransitionMatrix(std::move(values));
  }
  const TransitionMatrix& p = loaded ? *loaded : fixtures().matrix;
  const InitialState initial =
      config.initial_state ? InitialState(*config.initial_state) : uniform_initial(p);
  Rng rng(derive_seed(config.seed, {}));
  const StateSequence seq = generate_trajectory(p, config.length, initial, rng);
  write_output(config, "trajectory.txt",
               [&](std::ostream& os) { write_state_list(os, seq); });
  out << "simulate: " << seq.size() << " steps over " << p.states()
      << " states\n";
  return kExitOk;
}

std::vector<double> baseline_values(const Input& input) {
  if (input.states) {
    return {input.states->states().begin(), input.states->states().end()};
  }
  if (input.observations->dim != 1) {
    throw DomainError("baseline tests need one value column");
  }
  std::vector<double> v;
  for (const auto& row : input.observations->values) v.push_back(row.front());
  return v;
}

int cmd_baseline(const RunConfig& config, std::ostream& out, std::ostream&) {
  if (config.inputs.size() != 2) throw DomainError("expected two inputs");
  const std::vector<double> x = baseline_values(load_input(config.inputs[0], config));
  const std::vector<double> y = baseline_values(load_input(config.inputs[1], config));
  const TestReport reports[] = {wilcoxon_rank_sum(x, y), ks_two_sample(x, y)};
  write_output(config, "baseline.csv", [&](std::ostream& os) {
    os << "method,statistic,p_value\n";
    for (const TestReport& r : reports) {
      os << r.method << ',' << format_number(r.statistic) << ','
         << format_number(r.p_value) << '\n';
    }
  });
  for (const TestReport& r : reports) {
    out << r.method << ": statistic=" << format_number(r.statistic)
        << " p=" << format_number(r.p_value) << '\n';
  }
  return kExitOk;
}

LabeledMatrix read_matrix_file(const fs::path& path) {
  std::ifstream in = open_input(path);
  return read_labeled_matrix(in);
}

int cmd_export_response(const RunConfig& config, std::ostream& out,
                        std::ostream& err) {
  if (config.matrices_dir.empty() || config.predictors.empty()) {
    throw DomainError("export-response needs --matrices and --predictors");
  }
  const LabeledMatrix z = read_matrix_file(fs::path(config.matrices_dir) / "z.csv");
  const LabeledMatrix d = read_matrix_file(fs::path(config.matrices_dir) / "d.csv");
  if (z.labels != d.labels || z.values.rows() != z.values.cols()) {
    throw DataError("z.csv and d.csv must be square with the same labels");
  }
  EvolutionMatrices m;
  m.labels = z.labels;
  m.z = z.values;
  m.d = d.values;
  // d is a mean total variation in [0, 1], so -1 there is always a sentinel.
  m.sentinel = Matrix<std::uint8_t>(m.size(), m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      m.sentinel(i, j) = (i != j && m.d(i, j) == kSentinel) ? 1 : 0;
    }
  }
  const ResponseTable table =
      export_response_table(m, load_predictors(fs::path(config.predictors)),
                            config.delay);
  write_output(config, "response.csv", [&](std::ostream& os) {
    if (!table.unmatched_weeks.empty()) {
      os << "# unmatched weeks: " << join(table.unmatched_weeks, ' ') << '\n';
    }
    write_response_table(os, table);
  });
  if (!table.unmatched_weeks.empty()) {
    err << "warning: " << table.unmatched_weeks.size()
        << " unmatched weeks: " << join(table.unmatched_weeks, ' ') << '\n';
  }
  out << "export-response: " << table.rows.size() << " rows\n";
  return kExitOk;
}

}  // namespace

std::string provenance_line(const RunConfig& c) {
  std::ostringstream os;
  os << "# seqcloseness " << c.subcommand << " epsilon=" << format_number(c.epsilon)
     << " C=" << format_number(c.c) << " N=" << c.iterations << " B=" << c.bins
     << " mu=" << c.mu << " dim=" << c.dim << " seed=" << c.seed
     << " agg=" << to_string(c.aggregation)
     << " pmax=" << (c.p_max ? format_number(*c.p_max) : std::string("auto"))
     << " period=" << to_string(c.period) << " k=" << c.k
     << " delay=" << c.delay << " inputs=" << join(c.inputs, ';');
  if (!c.counts.empty()) os << " counts=" << c.counts;
  if (!c.populations.empty()) os << " populations=" << c.populations;
  if (!c.segment.empty()) os << " segment=" << c.segment;
  if (c.zero_fill) os << " zero_fill=1";
  if (c.symmetrize) os << " symmetrize=1";
  if (c.subcommand == "simulate") {
    os << " matrix=" << (c.matrix.empty() ? std::string("fixture") : c.matrix)
       << " renormalize=" << (c.renormalize ? 1 : 0) << " length=" << c.length
       << " initial="
       << (c.initial_state ? std::to_string(*c.initial_state) : std::string("uniform"));
    if (c.export_fixtures) os << " export_fixtures=1";
  }
  if (!c.matrices_dir.empty()) os << " matrices=" << c.matrices_dir;
  if (!c.predictors.empty()) os << " predictors=" << c.predictors;
  return os.str();
}

int run_config(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.subcommand == "closeness") return cmd_closeness(config, out, err);
    if (config.subcommand == "evolve") return cmd_evolve(config, out, err);
    if (config.subcommand == "cluster") return cmd_cluster(config, out, err);
    if (config.subcommand == "simulate") return cmd_simulate(config, out, err);
    if (config.subcommand == "baseline") return cmd_baseline(config, out, err);
    if (config.subcommand == "export-response") {
      return cmd_export_response(config, out, err);
    }
    err << "seqcloseness: unknown subcommand '" << config.subcommand << "'\n";
    return kExitFailure;
  } catch (const UndeterminedError& e) {
    err << "seqcloseness: " << e.what() << '\n';
    return kExitUndetermined;
  } catch (const std::exception& e) {
    err << "seqcloseness: " << e.what() << '\n';
    return kExitFailure;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  RunConfig config;
  std::optional<std::uint64_t> seed;
  std::string agg = "mean";
  std::string period = "month";

  CLI::App app{"Closeness testing of quantized Markov sequences", "seqcloseness"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--epsilon", config.epsilon, "Distance parameter")->capture_default_str();
  app.add_option("--C", config.c, "Sample size constant")->capture_default_str();
  app.add_option("--N", config.iterations, "Repetitions per state")->capture_default_str();
  app.add_option("--B", config.bins, "Bins per dimension")->capture_default_str();
  app.add_option("--mu", config.mu, "Minimum transitions per state")->capture_default_str();
  app.add_option("--dim", config.dim, "Dimensions of the observations")->capture_default_str();
  app.add_option("--seed", seed, "Random seed (env SEQCLOSENESS_SEED, else 0)");
  app.add_option("--agg", agg, "Aggregation")
      ->check(CLI::IsMember({"mean", "median", "min"}))->capture_default_str();
  app.add_option("--pmax", config.p_max, "Quantization upper bound");
  app.add_option("--period", period, "Evolution period")
      ->check(CLI::IsMember({"week", "month"}))->capture_default_str();
  app.add_option("--k", config.k, "Number of clusters")->capture_default_str();
  app.add_option("--delay", config.delay, "Predictor delay in weeks")
      ->check(CLI::IsMember({0, 1, 2}))->capture_default_str();
  app.add_option("--threads", config.threads, "Worker threads (0: all cores)");
  app.add_option("--out-dir", config.out_dir, "Output directory")->capture_default_str();

  auto* closeness = app.add_subcommand("closeness", "Test two sequences");
  closeness->add_option("inputs", config.inputs,
                        "Two inputs: fixture:qx|qy|qz[:alpha], state list or observation CSV")
      ->expected(2)->required();

  auto* evolve = app.add_subcommand("evolve", "Pairwise closeness of calendar periods");
  evolve->add_option("input", config.inputs, "Dated observation CSV")->expected(0, 1);
  evolve->add_option("--counts", config.counts, "Panel counts CSV");
  evolve->add_option("--populations", config.populations, "Segment populations CSV");
  evolve->add_option("--segment", config.segment, "Segment id (default: all pooled)");
  evolve->add_flag("--zero-fill", config.zero_fill, "Treat missing days as zero counts");
  evolve->add_flag("--symmetrize", config.symmetrize, "Also write symmetrized matrices");

  auto* cluster = app.add_subcommand("cluster", "k-means over matrix rows");
  cluster->add_option("matrix", config.inputs, "Labeled matrix CSV")->expected(1)->required();

  auto* simulate = app.add_subcommand("simulate", "Generate a Markov trajectory");
  simulate->add_option("--matrix", config.matrix, "Transition matrix CSV (default: built-in)");
  simulate->add_flag("--renormalize", config.renormalize, "Divide rows by their sums");
  simulate->add_option("--length", config.length, "Trajectory length")->capture_default_str();
  simulate->add_option("--initial", config.initial_state, "Start state (default: uniform)");
  simulate->add_flag("--export-fixtures", config.export_fixtures,
                     "Write the built-in reference sequences and matrix");

  auto* baseline = app.add_subcommand("baseline", "Rank-sum and KS tests");
  baseline->add_option("inputs", config.inputs, "Two inputs, as for closeness")
      ->expected(2)->required();

  auto* response = app.add_subcommand("export-response", "Join weekly responses with predictors");
  response->add_option("--matrices", config.matrices_dir, "Directory holding z.csv and d.csv")
      ->required();
  response->add_option("--predictors", config.predictors, "Predictor CSV keyed by week")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitFailure;
  }

  config.subcommand = app.get_subcommands().front()->get_name();
  config.aggregation = parse_aggregation(agg);
  config.period = parse_period(period);
  if (seed) {
    config.seed = *seed;
  } else if (const char* env = std::getenv(kSeedEnvVar); env != nullptr && *env) {
    try {
      config.seed = parse_uint(env);
    } catch (const ParseError&) {
      err << "seqcloseness: " << kSeedEnvVar << " must be a non-negative integer\n";
      return kExitFailure;
    }
  }
  return run_config(config, out, err);
}

}  // namespace seqcloseness
