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

#include "symsmt/bench.hpp"

#include <algorithm>
#include <filesystem>
#include <set>
#include <sstream>

#include "symsmt/frontend.hpp"
#include "symsmt/report.hpp"

namespace symsmt {

namespace {

bool solved(const std::string& status) { return status == "sat" || status == "unsat(bounded)"; }

BenchRow run_one(const std::string& file, const Script& script, SolveMode mode, const BenchOptions& options) {
  SolveConfig config = options.base;
  config.mode = mode;
  config.timeout = options.timeout;
  if (config.hybrid_budget && *config.hybrid_budget >= options.timeout) config.hybrid_budget.reset();
  auto start = Clock::now();
  SolveResult result = solve(script, config);
  BenchRow row{file, mode, std::string(to_string(result.status)), 0, result.stats};
  row.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return row;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

}  // namespace

BenchSummary summarize(const std::vector<BenchRow>& rows, const std::vector<SolveMode>& modes) {
  BenchSummary summary;
  std::map<SolveMode, std::set<std::string>> solved_files;
  for (auto m : modes) summary.solved[m] = 0;
  for (const auto& row : rows) {
    if (row.status == "unknown") ++summary.timeouts;
    if (row.status == "error") ++summary.errors;
    if (solved(row.status)) {
      ++summary.solved[row.mode];
      solved_files[row.mode].insert(row.file);
    }
  }
  for (auto a : modes) {
    for (auto b : modes) {
      std::size_t count = 0;
      for (const auto& f : solved_files[a]) count += solved_files[b].count(f) == 0;
      summary.non_overlap[a][b] = count;
    }
  }
  return summary;
}

BenchReport run_bench(const std::vector<BenchInstance>& instances, const BenchOptions& options) {
  BenchReport report;
  report.modes = options.modes;
  for (const auto& inst : instances)
    for (auto mode : options.modes) report.rows.push_back(run_one(inst.file, inst.script, mode, options));
  report.summary = summarize(report.rows, report.modes);
  return report;
}

BenchReport run_bench_directory(const std::string& directory, const BenchOptions& options) {
  namespace fs = std::filesystem;
  std::vector<std::string> files;
  for (const auto& entry : fs::recursive_directory_iterator(directory))
    if (entry.is_regular_file() && entry.path().extension() == ".smt2") files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());

  BenchReport report;
  report.modes = options.modes;
  for (const auto& file : files) {
    std::optional<Script> script;
    std::string error;
    try {
      script = parse_file(file);
    } catch (const std::exception& e) {
      error = e.what();
    }
    for (auto mode : options.modes) {
      if (script) {
        report.rows.push_back(run_one(file, *script, mode, options));
      } else {
        report.rows.push_back(BenchRow{file, mode, "error", 0, {}});
      }
    }
  }
  report.summary = summarize(report.rows, report.modes);
  return report;
}

nlohmann::json BenchReport::to_json(bool with_times) const {
  using nlohmann::json;
  std::map<SolveMode, std::size_t> rank;
  for (std::size_t i = 0; i < modes.size(); ++i) rank[modes[i]] = i;
  std::vector<const BenchRow*> sorted;
  for (const auto& r : rows) sorted.push_back(&r);
  std::stable_sort(sorted.begin(), sorted.end(), [&](const BenchRow* a, const BenchRow* b) {
    return std::tie(a->file, rank[a->mode]) < std::tie(b->file, rank[b->mode]);
  });

  json out_rows = json::array();
  for (const BenchRow* r : sorted) {
    json stats = symsmt::to_json(r->stats);
    if (!with_times) {
      for (const char* key : {"detect_seconds", "sat_seconds", "theory_seconds", "total_seconds"}) stats.erase(key);
      for (auto& phase : stats["phases"]) phase.erase("seconds");
    }
    json row = {{"file", r->file}, {"mode", to_string(r->mode)}, {"status", r->status}, {"stats", stats}};
    if (with_times) row["wall_seconds"] = r->wall_seconds;
    out_rows.push_back(row);
  }

  json solved_counts = json::object();
  json matrix = json::object();
  for (auto a : modes) {
    solved_counts[std::string(to_string(a))] = summary.solved.at(a);
    for (auto b : modes) matrix[std::string(to_string(a))][std::string(to_string(b))] = summary.non_overlap.at(a).at(b);
  }
  json mode_names = json::array();
  for (auto m : modes) mode_names.push_back(to_string(m));
  return {{"schema", kJsonSchema},
          {"modes", mode_names},
          {"rows", out_rows},
          {"summary",
           {{"solved", solved_counts},
            {"non_overlap", matrix},
            {"timeouts", summary.timeouts},
            {"errors", summary.errors}}}};
}

std::string BenchReport::to_csv() const {
  std::ostringstream out;
  out << "file,mode,status,wall_seconds,skeleton_models_tried,conflict_clauses,symmetries_used,sbp_clauses\n";
  for (const auto& r : rows) {
    out << csv_field(r.file) << ',' << to_string(r.mode) << ',' << r.status << ',' << r.wall_seconds << ','
        << r.stats.skeleton_models_tried << ',' << r.stats.conflict_clauses << ',' << r.stats.symmetries_used
        << ',' << r.stats.sbp_clauses << '\n';
  }
  return out.str();
}

}  // namespace symsmt
