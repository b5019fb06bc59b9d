// Copyright 2026 The qperm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"
#include "qperm/analysis.hpp"
#include "qperm/error.hpp"
#include "qperm/hadamard.hpp"
#include "qperm/matrix_io.hpp"
#include "qperm/permanent.hpp"
#include "qperm/protocol.hpp"
#include "qperm/serialize.hpp"

#ifndef QPERM_VERSION
#define QPERM_VERSION "0.0.0"
#endif

namespace qperm::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { automatic, json_lines, table, csv };

struct Globals {
  Format format = Format::automatic;
  unsigned threads = 1;
  std::string manifest_path;
};

struct ComputeArgs {
  std::string input;
  std::string method = "ryser";
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  bool exhaustive = false;
};

struct QuantumArgs {
  std::string input;
  std::string dt = "auto";
  std::string mode = "exact";
  std::optional<std::uint64_t> shots;
  double epsilon = 0.05;
  double delta = 0.05;
  std::uint64_t seed = 0;
  unsigned richardson = 0;
  bool no_halve = false;
  bool force = false;
  bool verbose = false;
};

struct ResourcesArgs {
  std::size_t n = 1;
  std::optional<std::size_t> n_max;
  bool complex_input = false;
};

struct AdvantageArgs {
  int n_min = 2;
  int n_max = 40;
  std::vector<std::uint64_t> ensemble;
};

struct GenerateArgs {
  std::size_t n = 3;
  std::uint64_t seed = 0;
  bool complex_input = false;
  std::string output;
};

/// Flattens nested objects into dotted keys for table output.
void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    }
  } else if (j.is_string()) {
    out.emplace_back(prefix, j.get<std::string>());
  } else {
    out.emplace_back(prefix, j.dump());
  }
}

std::string cell(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void print_record(const json& record, Format format, std::ostream& out) {
  if (format == Format::table) {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(record, "", rows);
    std::size_t width = 0;
    for (const auto& row : rows) {
      width = std::max(width, row.first.size());
    }
    for (const auto& [key, value] : rows) {
      out << std::left << std::setw(static_cast<int>(width) + 2) << key << value << '\n';
    }
  } else {
    out << record.dump() << '\n';
  }
}

/// Rows share the keys of the first row, in that order.
void print_rows(const std::vector<json>& rows, Format format, std::ostream& out) {
  if (rows.empty()) {
    return;
  }
  std::vector<std::string> keys;
  for (const auto& item : rows.front().items()) {
    keys.push_back(item.key());
  }
  if (format == Format::json_lines) {
    for (const json& row : rows) {
      out << row.dump() << '\n';
    }
    return;
  }
  if (format == Format::csv) {
    for (std::size_t c = 0; c < keys.size(); ++c) {
      out << (c ? "," : "") << keys[c];
    }
    out << '\n';
    for (const json& row : rows) {
      for (std::size_t c = 0; c < keys.size(); ++c) {
        out << (c ? "," : "") << cell(row.at(keys[c]));
      }
      out << '\n';
    }
    return;
  }
  std::vector<std::size_t> widths(keys.size());
  for (std::size_t c = 0; c < keys.size(); ++c) {
    widths[c] = keys[c].size();
    for (const json& row : rows) {
      widths[c] = std::max(widths[c], cell(row.at(keys[c])).size());
    }
  }
  for (std::size_t c = 0; c < keys.size(); ++c) {
    out << std::right << std::setw(static_cast<int>(widths[c]) + (c ? 2 : 0)) << keys[c];
  }
  out << '\n';
  for (const json& row : rows) {
    for (std::size_t c = 0; c < keys.size(); ++c) {
      out << std::right << std::setw(static_cast<int>(widths[c]) + (c ? 2 : 0)) << cell(row.at(keys[c]));
    }
    out << '\n';
  }
}

Format resolve(Format f, Format fallback) { return f == Format::automatic ? fallback : f; }

void cmd_compute(const ComputeArgs& args, const Globals& g, json& manifest, std::ostream& out) {
  const SquareMatrix a = read_matrix_file(args.input);
  const Method method = parse_method(args.method);
  GurvitsOptions gurvits{args.samples, args.seed, args.exhaustive};
  const PermanentEstimate e = compute_permanent(a, method, gurvits, ExecOptions{g.threads});
  manifest["input_path"] = args.input;
  manifest["config"] = {{"method", args.method}, {"samples", args.samples}, {"exhaustive", args.exhaustive}};
  manifest["seed"] = args.seed;
  print_record(to_json(e), resolve(g.format, Format::json_lines), out);
}

void cmd_quantum(const QuantumArgs& args, const Globals& g, json& manifest, std::ostream& out) {
  const SquareMatrix a = read_matrix_file(args.input);
  const DtWindow windows = select_dt(a);

  ProtocolConfig cfg;
  if (args.dt == "auto") {
    cfg.dt = windows.chosen;
  } else {
    try {
      std::size_t used = 0;
      cfg.dt = std::stod(args.dt, &used);
      if (used != args.dt.size()) {
        throw std::invalid_argument(args.dt);
      }
    } catch (const std::logic_error&) {
      throw InvalidInput("--dt expects a number or 'auto', got '" + args.dt + "'");
    }
  }
  if (args.mode == "exact") {
    cfg.mode = EvaluationMode::exact_overlap;
  } else if (args.mode == "shots") {
    cfg.mode = EvaluationMode::hadamard_shots;
  } else {
    throw InvalidInput("--mode expects exact or shots, got '" + args.mode + "'");
  }
  cfg.failure_probability = args.delta;
  cfg.shots_per_overlap = args.shots ? *args.shots : hoeffding_shots(args.epsilon, args.delta);
  cfg.richardson_levels = args.richardson;
  cfg.seed = args.seed;
  cfg.halve_by_time_reversal = !args.no_halve;
  cfg.allow_divergent_dt = args.force;
  cfg.exec.threads = g.threads;

  const ProtocolRun run = run_protocol_detailed(a, cfg);
  const bool is_complex = !a.is_real();

  json record;
  record["estimate"] = to_json(run.estimate);
  record["dt"] = cfg.dt;
  record["mode"] = args.mode;
  if (cfg.mode == EvaluationMode::hadamard_shots) {
    record["shots_per_overlap"] = cfg.shots_per_overlap;
  }
  const double eps_ht =
      cfg.mode == EvaluationMode::hadamard_shots ? hoeffding_precision(cfg.shots_per_overlap, args.delta) : 0.0;
  try {
    record["budget"] = to_json(total_error_bound(a, cfg.dt, eps_ht, 1.0, is_complex));
    record["budget"]["eps_ht"] = eps_ht;
    record["budget"]["eps_fd"] = 1.0;
  } catch (const InvalidTimeStep&) {
    record["budget"] = nullptr;
  }
  record["windows"] = to_json(windows);
  record["terms"] = run.terms.size();
  if (args.verbose) {
    record["overlaps"] = terms_to_json(run.terms, run.overlaps);
  }

  manifest["input_path"] = args.input;
  manifest["config"] = {
      {"dt", cfg.dt},
      {"mode", args.mode},
      {"shots_per_overlap", cfg.shots_per_overlap},
      {"richardson_levels", cfg.richardson_levels},
      {"seed", cfg.seed},
      {"halve_by_time_reversal", cfg.halve_by_time_reversal},
      {"allow_divergent_dt", cfg.allow_divergent_dt},
      {"failure_probability", cfg.failure_probability},
  };
  manifest["seed"] = args.seed;
  print_record(record, resolve(g.format, Format::json_lines), out);
}

void cmd_resources(const ResourcesArgs& args, const Globals& g, std::ostream& out) {
  const std::size_t last = args.n_max ? *args.n_max : args.n;
  if (args.n < 1 || last < args.n) {
    throw InvalidInput("resources needs 1 <= n <= n-max");
  }
  std::vector<json> rows;
  for (std::size_t n = args.n; n <= last; ++n) {
    json row = to_json(resource_table(n, args.complex_input));
    row["cnot_gap"] = row["cnots_formula"].get<std::uint64_t>() - row["cnots_measured"].get<std::uint64_t>();
    rows.push_back(std::move(row));
  }
  const Format format = resolve(g.format, Format::table);
  print_rows(rows, format, out);
  if (format != Format::json_lines) {
    out << "# cnots_measured counts the synthesized circuit (4N^2); cnots_formula is the tabulated 4N^2+2N, "
           "leaving a gap of 2N\n";
  }
}

void cmd_advantage(const AdvantageArgs& args, const Globals& g, std::ostream& out) {
  if (!args.ensemble.empty() && args.ensemble.size() != 2) {
    throw InvalidInput("--ensemble expects: trials seed");
  }
  std::vector<json> rows;
  for (const auto& [n, q] : advantage_domain_ratios(args.n_min, args.n_max)) {
    json row;
    row["N"] = n;
    row["Q"] = q;
    if (!args.ensemble.empty()) {
      const std::uint64_t trials = args.ensemble[0];
      const std::uint64_t seed = args.ensemble[1] + static_cast<std::uint64_t>(n);
      std::array<std::uint64_t, 4> counts{};
      for (const SquareMatrix& a :
           gaussian_ensemble(static_cast<std::size_t>(n), trials, seed, GaussianKind::real_standard_normal)) {
        ++counts[static_cast<std::size_t>(advantage_classify(a).label)];
      }
      const auto frac = [&](std::size_t i) { return static_cast<double>(counts[i]) / static_cast<double>(trials); };
      row["case1"] = frac(0);
      row["case2"] = frac(1);
      row["case3"] = frac(2);
      row["advantage"] = frac(0) + frac(1) + frac(2);
    }
    rows.push_back(std::move(row));
  }
  print_rows(rows, resolve(g.format, Format::csv), out);
}

void cmd_generate(const GenerateArgs& args, json& manifest, std::ostream& out) {
  const GaussianKind kind = args.complex_input ? GaussianKind::complex_standard_normal : GaussianKind::real_standard_normal;
  const SquareMatrix a = gaussian_ensemble(args.n, 1, args.seed, kind).front();
  if (args.output.empty() || args.output == "-") {
    out << format_matrix_json(a) << '\n';
  } else {
    write_matrix_file(args.output, a);
    manifest["outputs"].push_back(args.output);
  }
  manifest["seed"] = args.seed;
}

int cmd_replay(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open manifest " + path);
  }
  json manifest;
  try {
    manifest = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("manifest " + path + ": " + e.what());
  }
  if (!manifest.contains("argv") || !manifest.contains("stdout")) {
    throw ParseError("manifest " + path + " lacks argv or stdout");
  }
  const auto args = manifest["argv"].get<std::vector<std::string>>();
  std::ostringstream replayed;
  std::ostringstream replay_err;
  const int code = run(args, replayed, replay_err);
  const bool identical = code == manifest.value("exit_code", 0) && replayed.str() == manifest["stdout"].get<std::string>();
  out << json{{"manifest", path}, {"command", manifest.value("command", "")}, {"identical", identical}}.dump() << '\n';
  if (!identical) {
    err << "replay differs from recorded output\n" << replay_err.str();
    return kReplayMismatch;
  }
  return kOk;
}

std::vector<std::string> strip_manifest_flag(const std::vector<std::string>& args) {
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--manifest") {
      ++i;
      continue;
    }
    if (args[i].rfind("--manifest=", 0) == 0) {
      continue;
    }
    kept.push_back(args[i]);
  }
  return kept;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matrix permanents: classical formulas and a simulated Ising-propagator protocol", "qperm"};
  app.set_version_flag("--version", std::string("qperm ") + QPERM_VERSION);
  app.require_subcommand(1);

  Globals g;
  const std::map<std::string, Format> formats{
      {"json", Format::json_lines}, {"table", Format::table}, {"csv", Format::csv}};
  app.add_option("--format", g.format, "Output format: json (JSON lines), table or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--threads", g.threads, "Worker threads for exponential sums")->check(CLI::Range(1u, 256u));
  app.add_option("--manifest", g.manifest_path, "Write a JSON manifest that reproduces this run");

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Evaluate a permanent with a classical method");
  c->add_option("--input", compute.input, "Matrix JSON file")->required();
  c->add_option("--method", compute.method,
                "naive, ryser, glynn, glynn_kan, glynn_kan_complex, gapp, gurvits or operator_expectation");
  c->add_option("--samples", compute.samples, "Gurvits sample count")->check(CLI::PositiveNumber);
  c->add_option("--seed", compute.seed, "Gurvits seed");
  c->add_flag("--exhaustive", compute.exhaustive, "Gurvits over all 2^N sign vectors (needs --samples 2^N)");

  QuantumArgs quantum;
  auto* q = app.add_subcommand("quantum", "Run the finite-difference Hadamard-test protocol in simulation");
  q->add_option("--input", quantum.input, "Matrix JSON file")->required();
  q->add_option("--dt", quantum.dt, "Time step, or 'auto' to pick from the error windows");
  q->add_option("--mode", quantum.mode, "exact or shots");
  q->add_option("--shots", quantum.shots, "Shots per overlap (default: Hoeffding count for --epsilon, --delta)")
      ->check(CLI::PositiveNumber);
  q->add_option("--epsilon", quantum.epsilon, "Per-overlap precision for the default shot count");
  q->add_option("--delta", quantum.delta, "Failure probability");
  q->add_option("--seed", quantum.seed, "Shot sampling seed");
  q->add_option("--richardson", quantum.richardson, "Richardson extrapolation levels (0 to 4)")
      ->check(CLI::Range(0u, 4u));
  q->add_flag("--no-halve", quantum.no_halve, "Evaluate both members of each time-reversal pair");
  q->add_flag("--force", quantum.force, "Accept a dt above the convergence limit");
  q->add_flag("--verbose", quantum.verbose, "Print per-term weights and overlaps");

  ResourcesArgs resources;
  auto* r = app.add_subcommand("resources", "Overlap, qubit, CNOT and depth counts");
  r->add_option("--n", resources.n, "Matrix dimension")->required()->check(CLI::PositiveNumber);
  r->add_option("--n-max", resources.n_max, "Last dimension of a range starting at --n");
  r->add_flag("--complex", resources.complex_input, "Complex input matrices");

  AdvantageArgs advantage;
  auto* adv = app.add_subcommand("advantage", "Advantage-domain ratio Q(N) and ensemble case fractions");
  adv->add_option("--n-min", advantage.n_min, "First dimension")->check(CLI::Range(2, 100000));
  adv->add_option("--n-max", advantage.n_max, "Last dimension")->check(CLI::Range(2, 100000));
  adv->add_option("--ensemble", advantage.ensemble, "Gaussian ensemble: trials seed")->expected(2);

  GenerateArgs generate;
  auto* gen = app.add_subcommand("generate", "Write a seeded standard-normal matrix");
  gen->add_option("--n", generate.n, "Matrix dimension")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", generate.seed, "Generator seed");
  gen->add_flag("--complex", generate.complex_input, "Complex entries with variance 1/2 per part");
  gen->add_option("--output", generate.output, "Output file ('-' or omitted for stdout)");

  std::string replay_path;
  auto* rep = app.add_subcommand("replay", "Re-run a manifest and compare against its recorded output");
  rep->add_option("manifest", replay_path, "Manifest file")->required();

  for (CLI::App* sub : app.get_subcommands({})) {
    sub->fallthrough();
  }

  std::vector<const char*> argv{"qperm"};
  for (const std::string& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  json manifest;
  manifest["version"] = std::string("qperm ") + QPERM_VERSION;
  manifest["argv"] = strip_manifest_flag(args);
  manifest["threads"] = g.threads;
  manifest["outputs"] = json::array();
  manifest["seed"] = nullptr;
  manifest["input_path"] = nullptr;
  manifest["config"] = nullptr;

  std::ostringstream captured;
  int code = kOk;
  try {
    if (*c) {
      manifest["command"] = "compute";
      cmd_compute(compute, g, manifest, captured);
    } else if (*q) {
      manifest["command"] = "quantum";
      cmd_quantum(quantum, g, manifest, captured);
    } else if (*r) {
      manifest["command"] = "resources";
      cmd_resources(resources, g, captured);
    } else if (*adv) {
      manifest["command"] = "advantage";
      cmd_advantage(advantage, g, captured);
    } else if (*gen) {
      manifest["command"] = "generate";
      cmd_generate(generate, manifest, captured);
    } else if (*rep) {
      return cmd_replay(replay_path, out, err);
    }
  } catch (const DimensionTooLarge& e) {
    err << "error: " << e.what() << '\n';
    code = kDimensionCap;
  } catch (const InvalidTimeStep& e) {
    err << "error: " << e.what() << " (use --force to override)\n";
    code = kInvalidTimeStep;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    code = kParseError;
  }
  out << captured.str();

  if (!g.manifest_path.empty()) {
    manifest["exit_code"] = code;
    manifest["stdout"] = captured.str();
    std::ofstream file(g.manifest_path);
    if (!file) {
      err << "error: cannot write manifest " << g.manifest_path << '\n';
      return code == kOk ? kParseError : code;
    }
    file << manifest.dump(2) << '\n';
  }
  return code;
}

}  // namespace qperm::cli
