// Copyright 2026 The qaesolve Authors
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

#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qaesolve/checks.hpp"
#include "qaesolve/errors.hpp"
#include "qaesolve/io.hpp"
#include "qaesolve/qae.hpp"
#include "qaesolve/report.hpp"
#include "qaesolve/solver_config.hpp"

namespace qaesolve::cli {

namespace {

std::uint64_t env_seed() {
  if (const char* s = std::getenv("QAE_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw ArgumentError(std::string("QAE_SEED is not an integer: ") + s);
    }
  }
  return 0;
}

std::string bit_string(const Bits& bits) {
  std::string s;
  s.reserve(bits.size());
  for (auto b : bits) s += b ? '1' : '0';
  return s;
}

// Solver flags shared by solve-qubo and eigensolve. Values apply only when
// given on the command line so a --config file can supply the rest.
struct SolverFlags {
  std::string method;
  std::string backend;
  std::size_t subqubo_size = 0;
  std::uint64_t repeat_limit = 0;
  std::size_t jobs = 1;
  std::uint64_t seed = 0;
  std::string config;
  CLI::Option* method_opt = nullptr;
  CLI::Option* backend_opt = nullptr;
  CLI::Option* subqubo_opt = nullptr;
  CLI::Option* repeat_opt = nullptr;
  CLI::Option* jobs_opt = nullptr;
  CLI::Option* seed_opt = nullptr;

  void add_to(CLI::App* app) {
    method_opt = app->add_option("--method", method, "exact | tabu | decompose")
                     ->check(CLI::IsMember({"exact", "tabu", "decompose"}));
    backend_opt = app->add_option("--backend", backend,
                                  "subQUBO backend: exact | tabu")
                      ->check(CLI::IsMember({"exact", "tabu"}));
    subqubo_opt = app->add_option("--subqubo-size", subqubo_size,
                                  "variables per subQUBO block");
    repeat_opt = app->add_option("--repeat-limit", repeat_limit,
                                 "outer iterations without improvement");
    jobs_opt = app->add_option("--jobs", jobs, "subQUBOs solved in parallel");
    seed_opt = app->add_option("--seed", seed, "RNG seed (default $QAE_SEED or 0)");
    app->add_option("--config", config, "key = value solver configuration");
  }

  void apply(QaeOptions& opts) const {
    auto& s = opts.solver;
    if (*method_opt) s.method = parse_method(method);
    if (*backend_opt) s.decomposer.backend = parse_backend(backend);
    if (*subqubo_opt) s.decomposer.subqubo_size = subqubo_size;
    if (*repeat_opt) s.decomposer.repeat_limit = repeat_limit;
    if (*jobs_opt) s.decomposer.parallel_subqubos = jobs;
    if (*seed_opt)
      s.seed = seed;
    else if (config.empty())
      s.seed = env_seed();
  }
};

QaeOptions load_options(const SolverFlags& flags, QaeOptions base) {
  if (!flags.config.empty())
    base = parse_config(read_file(flags.config), flags.config).qae;
  flags.apply(base);
  return base;
}

NamedConfig load_named(const std::string& path, const std::string& fallback) {
  if (path.empty()) {
    NamedConfig c{fallback, QaeOptions{}};
    c.qae.solver.seed = env_seed();
    return c;
  }
  return parse_config(read_file(path), fallback);
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-")
    out << text;
  else
    write_file(path, text);
}

int solve_qubo(const std::string& input, const SolverFlags& flags,
               bool json_out, bool csv_out, bool timing,
               const std::string& output, std::ostream& out) {
  const auto q = parse_qubo(read_file(input));
  QaeOptions defaults;
  defaults.solver = SolverConfig{};
  const auto opts = load_options(flags, defaults);
  const auto& cfg = opts.solver;
  const auto r = solve(q, cfg, cfg.seed);
  const double secs = std::chrono::duration<double>(r.elapsed).count();

  std::string text;
  if (json_out) {
    nlohmann::ordered_json j;
    j["energy"] = r.best_energy;
    j["bits"] = bit_string(r.solution.bits());
    j["num_vars"] = q.num_vars();
    j["method"] = to_string(cfg.method);
    j["evaluations"] = r.evaluations;
    j["restarts"] = r.restarts;
    j["iterations"] = r.iterations;
    j["seed"] = cfg.seed;
    if (timing) j["time_s"] = secs;
    text = j.dump(2) + "\n";
  } else if (csv_out) {
    text = "energy,bits,num_vars,method,evaluations,restarts,iterations,seed";
    if (timing) text += ",time_s";
    text += "\n" + format_double(r.best_energy) + "," +
            bit_string(r.solution.bits()) + "," +
            std::to_string(q.num_vars()) + "," + to_string(cfg.method) + "," +
            std::to_string(r.evaluations) + "," + std::to_string(r.restarts) +
            "," + std::to_string(r.iterations) + "," + std::to_string(cfg.seed);
    if (timing) text += "," + format_double(secs);
    text += "\n";
  } else {
    std::ostringstream os;
    os << "energy: " << format_double(r.best_energy) << "\n"
       << "bits: " << bit_string(r.solution.bits()) << "\n"
       << "method: " << to_string(cfg.method) << "\n"
       << "evaluations: " << r.evaluations << "\n"
       << "restarts: " << r.restarts << "\n"
       << "iterations: " << r.iterations << "\n"
       << "seed: " << cfg.seed << "\n"
       << "time_s: " << secs << "\n";
    text = os.str();
  }
  emit(text, output, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"QUBO decomposition solver and annealer-style eigensolver",
               "qaesolve"};
  app.require_subcommand(1);

  // solve-qubo
  auto* sq = app.add_subcommand("solve-qubo", "minimize a .qubo problem");
  std::string sq_input, sq_output;
  bool sq_json = false, sq_csv = false, sq_timing = false;
  SolverFlags sq_flags;
  sq->add_option("--input", sq_input, ".qubo file")->required();
  sq_flags.add_to(sq);
  auto* json_flag = sq->add_flag("--json", sq_json, "JSON output");
  sq->add_flag("--csv", sq_csv, "CSV output")->excludes(json_flag);
  sq->add_flag("--timing", sq_timing, "include wall time in JSON/CSV");
  sq->add_option("--output", sq_output, "write the result here");

  // eigensolve
  auto* es = app.add_subcommand("eigensolve", "lowest eigenpairs of a matrix");
  std::string es_matrix, es_csv, es_unit = "hartree", es_reference = "jacobi";
  std::size_t es_states = 1;
  int es_k = 10;
  SolverFlags es_flags;
  es->add_option("--matrix", es_matrix, "matrix file")->required();
  es->add_option("--states", es_states, "number of eigenpairs");
  auto* k_opt = es->add_option("--k-bits", es_k, "bits per vector element");
  es->add_option("--reference", es_reference, "reference eigensolver")
      ->check(CLI::IsMember({"jacobi"}));
  es->add_option("--csv", es_csv, "write per-state CSV here");
  es->add_option("--unit", es_unit, "hartree | kcalmol")
      ->check(CLI::IsMember({"hartree", "kcalmol"}));
  es_flags.add_to(es);

  // compare
  auto* cmp = app.add_subcommand(
      "compare", "two solver configurations against Jacobi on many matrices");
  std::string cfg_a, cfg_b, table_out, conv_out, scan_out, cmp_unit = "kcalmol";
  std::vector<std::string> matrices;
  std::size_t cmp_jobs = 1;
  bool cmp_timing = false;
  cmp->add_option("--config-a", cfg_a, "configuration A (default settings if omitted)");
  cmp->add_option("--config-b", cfg_b, "configuration B (default settings if omitted)");
  cmp->add_option("matrices", matrices, "matrix files")->required();
  cmp->add_option("--unit", cmp_unit, "hartree | kcalmol")
      ->check(CLI::IsMember({"hartree", "kcalmol"}));
  cmp->add_option("--jobs", cmp_jobs, "matrices solved concurrently");
  cmp->add_option("--table", table_out, "error table CSV (default stdout)");
  cmp->add_option("--convergence", conv_out, "|dE| per matrix index CSV");
  cmp->add_option("--scan", scan_out, "energy curve CSV for a scan series");
  cmp->add_flag("--timing", cmp_timing, "add wall-time columns to the table");

  // selftest
  auto* st = app.add_subcommand("selftest", "run the oracle-based checks");
  bool st_quick = false;
  std::string st_scratch;
  st->add_flag("--quick", st_quick, "fewer instances per check");
  st->add_option("--scratch", st_scratch, "directory for temporary files");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*sq)
      return solve_qubo(sq_input, sq_flags, sq_json, sq_csv, sq_timing,
                        sq_output, out);

    if (*es) {
      auto opts = load_options(es_flags, QaeOptions{});
      if (*k_opt) opts.encoding = EncodingScheme(es_k);
      const auto a = parse_matrix(read_file(es_matrix));
      const auto report =
          run_eigensolve(a, es_states, opts, parse_unit(es_unit));
      out << to_text(report);
      if (!es_csv.empty()) write_file(es_csv, to_csv(report));
      return kOk;
    }

    if (*cmp) {
      const auto a = load_named(cfg_a, "A");
      const auto b = load_named(cfg_b, "B");
      std::vector<MatrixInput> inputs;
      for (const auto& path : matrices)
        inputs.push_back(
            {std::filesystem::path(path).stem().string(),
             parse_matrix(read_file(path))});
      const auto unit = parse_unit(cmp_unit);
      const auto report = run_comparison(inputs, a, b, unit, cmp_jobs);
      err << "# A = " << report.name_a << ", B = " << report.name_b
          << ", unit = " << to_string(unit) << " (1 hartree = "
          << format_double(kHartreeToKcalMol) << " kcal/mol)\n";
      emit(table_csv(report, cmp_timing), table_out, out);
      if (!conv_out.empty()) write_file(conv_out, convergence_csv(report));
      if (!scan_out.empty()) write_file(scan_out, scan_csv(report));
      return kOk;
    }

    if (*st) {
      checks::CriteriaOptions opts;
      opts.quick = st_quick;
      const auto scratch =
          st_scratch.empty()
              ? std::filesystem::temp_directory_path() / "qaesolve-selftest"
              : std::filesystem::path(st_scratch);
      std::filesystem::create_directories(scratch);
      opts.scratch_dir = scratch.string();
      opts.cli = [](const std::vector<std::string>& a) {
        std::ostringstream sink_out, sink_err;
        return run(a, sink_out, sink_err);
      };
      std::size_t failed = 0;
      const auto results = checks::run_all(opts, [&](const auto& r) {
        out << checks::format_result(r) << std::endl;
      });
      for (const auto& r : results)
        if (!r.passed) ++failed;
      out << (results.size() - failed) << "/" << results.size()
          << " checks passed\n";
      return failed ? kCheckFailed : kOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kParseError;
  } catch (const ArgumentError& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kParseError;
  } catch (const std::exception& e) {
    err << "solver error: " << e.what() << "\n";
    return kSolverError;
  }
  return kUsage;
}

}  // namespace qaesolve::cli
