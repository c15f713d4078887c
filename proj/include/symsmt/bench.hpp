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

#ifndef SYMSMT_BENCH_HPP
#define SYMSMT_BENCH_HPP

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "symsmt/ast.hpp"
#include "symsmt/solver.hpp"

namespace symsmt {

struct BenchInstance {
  std::string file;
  Script script;
};

struct BenchRow {
  std::string file;
  SolveMode mode;
  /// "sat", "unsat(bounded)", "unknown", or "error" when the file did not load.
  std::string status;
  double wall_seconds = 0;
  SolveStats stats;
};

struct BenchSummary {
  std::map<SolveMode, std::size_t> solved;
  /// non_overlap[a][b]: instances solved by mode a and not by mode b.
  std::map<SolveMode, std::map<SolveMode, std::size_t>> non_overlap;
  /// Rows that ended unknown.
  std::size_t timeouts = 0;
  std::size_t errors = 0;
};

struct BenchReport {
  std::vector<SolveMode> modes;
  std::vector<BenchRow> rows;
  BenchSummary summary;

  /// Rows sorted by (file, mode order); wall times included unless
  /// `with_times` is false, which gives a reproducible document.
  nlohmann::json to_json(bool with_times = true) const;
  std::string to_csv() const;
};

struct BenchOptions {
  std::vector<SolveMode> modes = {SolveMode::Plain, SolveMode::Sym, SolveMode::Hybrid};
  /// Per-instance, per-mode; overrides any timeout in `base`.
  Millis timeout{5000};
  /// Everything except mode and timeout.
  SolveConfig base;
};

BenchReport run_bench(const std::vector<BenchInstance>& instances, const BenchOptions& options);

/// Loads every *.smt2 below `directory` in sorted path order; files that fail
/// to parse become "error" rows.
BenchReport run_bench_directory(const std::string& directory, const BenchOptions& options);

BenchSummary summarize(const std::vector<BenchRow>& rows, const std::vector<SolveMode>& modes);

}  // namespace symsmt

#endif  // SYMSMT_BENCH_HPP
