// Copyright 2026 The symsmt Authors
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

// symsmt command-line driver.
//
// Exit codes: 0 decided answer (or successful non-solving command),
// 2 unknown, 1 usage or input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "symsmt/bench.hpp"
#include "symsmt/corpus.hpp"
#include "symsmt/errors.hpp"
#include "symsmt/frontend.hpp"
#include "symsmt/oracle.hpp"
#include "symsmt/report.hpp"
#include "symsmt/sbp.hpp"
#include "symsmt/solver.hpp"

namespace {

using namespace symsmt;
using nlohmann::json;

constexpr int kExitDecided = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUnknown = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "5s", "250ms", "2m"; a bare number is seconds.
Millis parse_duration(const std::string& text) {
  static const std::regex pattern(R"(^\s*([0-9]+(?:\.[0-9]+)?)\s*(ms|s|m)?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw UsageError("invalid duration '" + text + "'");
  double value = std::stod(m[1].str());
  std::string unit = m[2].matched ? m[2].str() : "s";
  double ms = unit == "ms" ? value : unit == "s" ? value * 1000 : value * 60000;
  return Millis(static_cast<Millis::rep>(ms));
}

struct SolveFlags {
  std::string mode = "plain";
  std::int64_t bound = 32;
  int k = 16;
  std::string t_budget;
  std::string hybrid_order = "sym-first";
  std::string ordering = "heuristic";
  std::string timeout;
  std::uint64_t seed = 0;
  std::size_t generator_limit = 8;
  std::uint64_t node_budget = 1000000;
  std::string restarts = "none";
  bool carry_conflicts = false;
  bool shrink_core = false;

  void attach(CLI::App* app, bool with_mode) {
    if (with_mode)
      app->add_option("--mode", mode, "Solver mode")->check(CLI::IsMember({"plain", "sym", "hybrid"}));
    app->add_option("--bound", bound, "Domain bound B: variables range over [-B, B]")->check(CLI::Range(1, 1 << 30));
    app->add_option("--k", k, "SBP truncation: support variables per generator")->check(CLI::PositiveNumber);
    app->add_option("--t-budget", t_budget, "Hybrid phase-one budget (e.g. 500ms, 2s)");
    app->add_option("--hybrid-order", hybrid_order, "Hybrid phase order")
        ->check(CLI::IsMember({"sym-first", "plain-first"}));
    app->add_option("--ordering", ordering, "Skeleton variable ordering for SBPs")
        ->check(CLI::IsMember({"heuristic", "index"}));
    app->add_option("--timeout", timeout, "Wall-clock limit (e.g. 5s, 500ms)");
    app->add_option("--seed", seed, "Seed (echoed; solving is deterministic)");
    app->add_option("--generator-limit", generator_limit, "Maximum automorphism generators");
    app->add_option("--node-budget", node_budget, "Automorphism search node budget");
    app->add_option("--restarts", restarts, "SAT restart policy")->check(CLI::IsMember({"none", "luby"}));
    app->add_flag("--carry-conflicts", carry_conflicts, "Hybrid: keep phase-one conflict clauses");
    app->add_flag("--shrink-core", shrink_core, "Shrink theory conflict cores greedily");
  }

  SolveConfig config() const {
    SolveConfig c;
    c.mode = mode == "sym" ? SolveMode::Sym : mode == "hybrid" ? SolveMode::Hybrid : SolveMode::Plain;
    c.bound = DomainBound{bound};
    c.k = k;
    c.ordering = ordering == "index" ? OrderingMode::Index : OrderingMode::Heuristic;
    c.hybrid_order = hybrid_order == "plain-first" ? HybridOrder::PlainFirst : HybridOrder::SymFirst;
    if (!t_budget.empty()) c.hybrid_budget = parse_duration(t_budget);
    if (!timeout.empty()) c.timeout = parse_duration(timeout);
    c.generator_limit = generator_limit;
    c.node_budget = node_budget;
    c.carry_conflicts = carry_conflicts;
    c.shrink_core = shrink_core;
    c.sat.restarts = restarts == "luby" ? RestartPolicy::Luby : RestartPolicy::None;
    try {
      c.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    return c;
  }
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << content;
}

// JSON goes to PATH when given, else to stderr.
void emit_json(const json& doc, const std::string& path) {
  if (path.empty()) {
    std::cerr << doc.dump(2) << '\n';
  } else {
    write_file(path, doc.dump(2) + "\n");
  }
}

bool is_dimacs(const std::string& path) {
  return path.size() >= 4 && (path.ends_with(".cnf") || path.ends_with(".dimacs"));
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int solve_dimacs(const std::string& file, const SolveFlags& flags, const std::string& json_path) {
  Cnf cnf = read_dimacs(read_text(file));
  SolveConfig config = flags.config();
  SatSolver solver(cnf, config.sat);
  SatResult r = solver.solve(config.timeout ? Deadline::after(*config.timeout) : Deadline::never());
  const char* status = r.outcome == SatOutcome::Sat ? "sat" : r.outcome == SatOutcome::Unsat ? "unsat" : "unknown";
  std::cout << status << '\n';
  json model = json::array();
  if (r.outcome == SatOutcome::Sat) {
    for (int v = 0; v < cnf.num_vars; ++v) model.push_back(r.model[v] ? v + 1 : -(v + 1));
    std::cout << "v";
    for (const auto& lit : model) std::cout << ' ' << lit.get<int>();
    std::cout << " 0\n";
  }
  emit_json({{"schema", kJsonSchema},
             {"status", status},
             {"model", r.outcome == SatOutcome::Sat ? model : json(nullptr)},
             {"stats",
              {{"decisions", r.stats.decisions},
               {"conflicts", r.stats.conflicts},
               {"propagations", r.stats.propagations}}}},
            json_path);
  return r.outcome == SatOutcome::Cancelled ? kExitUnknown : kExitDecided;
}

int run_solve(const std::string& file, const SolveFlags& flags, const std::string& json_path,
              const std::string& dimacs_path) {
  if (is_dimacs(file)) return solve_dimacs(file, flags, json_path);
  Script script = parse_file(file);
  SolveConfig config = flags.config();

  if (!dimacs_path.empty()) {
    if (config.mode == SolveMode::Plain) {
      Skeleton sk = extract_skeleton(script);
      write_file(dimacs_path, write_dimacs(to_cnf(sk.psi, sk.phi.size()), &sk.phi));
    } else {
      BreakingSkeleton b = build_breaking_skeleton(script, config);
      write_file(dimacs_path, write_dimacs(b.cnf, &b.skeleton.phi));
    }
  }

  SolveResult result = solve(script, config);
  switch (result.status) {
    case SolveStatus::Sat: std::cout << "sat\n"; break;
    case SolveStatus::UnsatBounded: std::cout << "unsat\n"; break;
    case SolveStatus::Unknown: std::cout << "unknown\n"; break;
  }
  if (result.status == SolveStatus::Sat) {
    std::cout << "(\n";
    for (const auto& name : script.int_variables()) {
      std::int64_t v = result.model.values.at(name);
      std::cout << "  (define-fun " << serialize(Term::var(name)) << " () Int "
                << serialize(Term::constant(v)) << ")\n";
    }
    std::cout << ")\n";
  }
  json doc = result_to_json(result, config);
  doc["config_echo"]["seed"] = flags.seed;
  doc["file"] = file;
  emit_json(doc, json_path);
  return result.status == SolveStatus::Unknown ? kExitUnknown : kExitDecided;
}

int run_preprocess(const std::string& file, const SolveFlags& flags, const std::string& dimacs_path,
                   const std::string& smt2_path) {
  Script script = parse_file(file);
  SolveConfig config = flags.config();
  Deadline deadline = config.timeout ? Deadline::after(*config.timeout) : Deadline::never();
  BreakingSkeleton b = build_breaking_skeleton(script, config, deadline);

  std::string dimacs = write_dimacs(b.cnf, &b.skeleton.phi);
  if (dimacs_path.empty() && smt2_path.empty()) {
    std::cout << dimacs;
  } else if (!dimacs_path.empty()) {
    write_file(dimacs_path, dimacs);
  }

  std::size_t theory_sbps = 0;
  if (!smt2_path.empty()) {
    std::vector<Formula> conjuncts{script.assertion};
    for (const auto& theta : b.report.accepted) {
      if (theta.theory_map.empty()) continue;
      conjuncts.push_back(build_theory_sbp(theta, script));
      ++theory_sbps;
    }
    Script out = script;
    out.assertion = Formula::conj(std::move(conjuncts));
    write_file(smt2_path, serialize(out));
  }
  std::cerr << json{{"schema", kJsonSchema},
                    {"symmetries_accepted", b.report.accepted.size()},
                    {"symmetries_used", b.used},
                    {"sbp_clauses", b.sbp_clauses.size()},
                    {"sbp_aux_vars", b.sbp_aux_vars},
                    {"theory_sbps", theory_sbps}}
                   .dump()
            << '\n';
  return kExitDecided;
}

int run_syms(const std::string& file, const SolveFlags& flags, const std::string& json_path) {
  Script script = normalize(parse_file(file));
  Skeleton skeleton = extract_skeleton(script);
  SolveConfig config = flags.config();
  SymmetryOptions options;
  options.generator_limit = config.generator_limit;
  options.node_budget = config.node_budget;
  if (config.timeout) options.deadline = Deadline::after(*config.timeout);
  SymmetryReport report = detect_symmetries(script, skeleton, options);

  json generators = json::array();
  for (const auto& theta : report.accepted) {
    std::string cycles = to_cycle_string(theta, skeleton.phi, script.int_variables());
    std::cout << cycles << '\n';
    generators.push_back(cycles);
  }
  json doc = {{"schema", kJsonSchema},     {"accepted", report.accepted.size()},
              {"rejected", report.rejected}, {"found", report.found},
              {"complete", report.complete}, {"generators", generators}};
  if (json_path.empty()) {
    std::cout << doc.dump() << '\n';
  } else {
    write_file(json_path, doc.dump(2) + "\n");
  }
  return kExitDecided;
}

int run_oracle(const std::string& file, std::int64_t bound, std::uint64_t max_models, const std::string& json_path) {
  Script script = parse_file(file);
  BruteForceOptions options;
  options.max_models = max_models;
  BruteForceResult r;
  try {
    r = brute_force(script, DomainBound{bound}, options);
  } catch (const ResourceExceeded& e) {
    std::cout << "unknown\n";
    std::cerr << e.what() << '\n';
    return kExitUnknown;
  }
  std::cout << (r.sat ? "sat" : "unsat") << '\n';
  std::cout << "models: " << r.models.size() << (r.truncated ? "+" : "") << '\n';
  json doc = {{"schema", kJsonSchema},        {"status", r.sat ? "sat" : "unsat(bounded)"},
              {"models", r.models.size()},      {"truncated", r.truncated},
              {"points_checked", r.points_checked}, {"variables", r.variables}};
  if (!r.models.empty()) doc["first_model"] = r.models.front();
  if (!json_path.empty()) write_file(json_path, doc.dump(2) + "\n");
  return kExitDecided;
}

std::vector<SolveMode> parse_modes(const std::string& text) {
  std::vector<SolveMode> modes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "plain") modes.push_back(SolveMode::Plain);
    else if (item == "sym") modes.push_back(SolveMode::Sym);
    else if (item == "hybrid") modes.push_back(SolveMode::Hybrid);
    else throw UsageError("unknown mode '" + item + "'");
  }
  if (modes.empty()) throw UsageError("no modes given");
  return modes;
}

int run_bench(const std::string& directory, const std::string& modes, SolveFlags flags, const std::string& json_path,
              const std::string& csv_path) {
  BenchOptions options;
  options.modes = parse_modes(modes);
  options.timeout = parse_duration(flags.timeout.empty() ? "5s" : flags.timeout);
  flags.timeout.clear();
  flags.mode = "plain";
  options.base = flags.config();
  if (!std::filesystem::is_directory(directory)) throw UsageError("not a directory: " + directory);
  BenchReport report = run_bench_directory(directory, options);

  std::cout << "instances: " << report.rows.size() / options.modes.size() << '\n';
  for (auto m : options.modes) std::cout << "solved " << to_string(m) << ": " << report.summary.solved[m] << '\n';
  std::cout << "timeouts: " << report.summary.timeouts << '\n';
  std::cout << "non-overlap (row solved, column not):\n";
  for (auto a : options.modes) {
    std::cout << "  " << to_string(a) << ':';
    for (auto b : options.modes) std::cout << ' ' << to_string(b) << '=' << report.summary.non_overlap[a][b];
    std::cout << '\n';
  }
  if (!json_path.empty()) write_file(json_path, report.to_json().dump(2) + "\n");
  if (!csv_path.empty()) write_file(csv_path, report.to_csv());
  return kExitDecided;
}

int run_gen(const std::string& profile_name, std::uint64_t seed, std::size_t count, const std::string& out,
            int max_vars) {
  auto profile = parse_profile(profile_name);
  if (!profile) throw UsageError("unknown profile '" + profile_name + "'");
  CorpusOptions options;
  options.max_vars = max_vars;
  for (const auto& path : write_corpus(generate_corpus(seed, count, *profile, options), out))
    std::cout << path << '\n';
  return kExitDecided;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symsmt: lazy SMT over bounded integers with symmetry breaking"};
  app.require_subcommand(1);

  std::string file, json_path, dimacs_path, smt2_path, csv_path, modes = "plain,sym,hybrid", out_dir = "corpus";
  std::string profile = "mixed";
  std::uint64_t gen_seed = 1, max_models = 100000;
  std::size_t count = 10;
  int max_vars = 4;

  SolveFlags solve_flags;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an SMT-LIB file (or a DIMACS .cnf with the SAT core)");
  solve_cmd->add_option("file", file, "Input file")->required();
  solve_flags.attach(solve_cmd, true);
  solve_cmd->add_option("--json", json_path, "Write the result JSON here instead of stderr");
  solve_cmd->add_option("--dimacs", dimacs_path, "Write the skeleton CNF (with SBPs outside plain mode)");

  SolveFlags pre_flags;
  auto* pre_cmd = app.add_subcommand("preprocess", "Emit the SBP-augmented skeleton and theory-SBP SMT-LIB");
  pre_cmd->add_option("file", file, "Input SMT-LIB file")->required();
  pre_flags.attach(pre_cmd, false);
  pre_cmd->add_option("--dimacs", dimacs_path, "DIMACS output path (stdout when no output is given)");
  pre_cmd->add_option("--smt2", smt2_path, "SMT-LIB output with theory SBPs conjoined");

  SolveFlags syms_flags;
  auto* syms_cmd = app.add_subcommand("syms", "Print verified symmetries in cycle notation");
  syms_cmd->add_option("file", file, "Input SMT-LIB file")->required();
  syms_flags.attach(syms_cmd, false);
  syms_cmd->add_option("--json", json_path, "Write the counts JSON here instead of stdout");

  std::int64_t oracle_bound = 32;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force bounded satisfiability check");
  oracle_cmd->add_option("file", file, "Input SMT-LIB file")->required();
  oracle_cmd->add_option("--bound", oracle_bound, "Domain bound B")->check(CLI::Range(1, 1 << 30));
  oracle_cmd->add_option("--max-models", max_models, "Stop counting after this many models");
  oracle_cmd->add_option("--json", json_path, "Write a JSON report here");

  SolveFlags bench_flags;
  auto* bench_cmd = app.add_subcommand("bench", "Run every mode on a directory of SMT-LIB files");
  bench_cmd->add_option("directory", file, "Corpus directory")->required();
  bench_cmd->add_option("--modes", modes, "Comma-separated modes");
  bench_flags.attach(bench_cmd, false);
  bench_cmd->add_option("--json", json_path, "Write the BenchReport JSON here");
  bench_cmd->add_option("--csv", csv_path, "Write per-instance rows as CSV here");

  auto* gen_cmd = app.add_subcommand("gen", "Generate a deterministic instance corpus");
  gen_cmd->add_option("--profile", profile, "symmetric-sat, symmetric-unsat, asymmetric or mixed");
  gen_cmd->add_option("--seed", gen_seed, "Generator seed");
  gen_cmd->add_option("--count", count, "Number of instances");
  gen_cmd->add_option("--out", out_dir, "Output directory");
  gen_cmd->add_option("--max-vars", max_vars, "Maximum theory variables per instance")->check(CLI::Range(2, 8));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*solve_cmd) return run_solve(file, solve_flags, json_path, dimacs_path);
    if (*pre_cmd) return run_preprocess(file, pre_flags, dimacs_path, smt2_path);
    if (*syms_cmd) return run_syms(file, syms_flags, json_path);
    if (*oracle_cmd) return run_oracle(file, oracle_bound, max_models, json_path);
    if (*bench_cmd) return run_bench(file, modes, bench_flags, json_path, csv_path);
    if (*gen_cmd) return run_gen(profile, gen_seed, count, out_dir, max_vars);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
  } catch (const UnsupportedFeature& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
  } catch (const SortMismatch& e) {
    std::cerr << "sort error: " << e.what() << '\n';
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}
