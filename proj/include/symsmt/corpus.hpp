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

#ifndef SYMSMT_CORPUS_HPP
#define SYMSMT_CORPUS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symsmt/ast.hpp"

namespace symsmt {

enum class CorpusProfile { SymmetricSat, SymmetricUnsat, Asymmetric, Mixed };

std::string_view to_string(CorpusProfile profile);
std::optional<CorpusProfile> parse_profile(std::string_view name);

struct CorpusOptions {
  /// Upper bound on theory variables per instance (at least 2).
  int max_vars = 4;
  /// Upper bound on template clauses instantiated per instance.
  int max_templates = 3;
  /// Instances whose skeleton exceeds this many variables are redrawn (0 = no cap).
  int max_skeleton_vars = 16;
  /// Every variable is boxed to at most [-6, 6], so answers agree for any
  /// bound >= 6; the oracle classifies at this bound.
  std::int64_t classify_bound = 8;
};

struct GeneratedInstance {
  std::string name;
  Script script;
  /// Oracle verdict at classify_bound.
  bool sat = false;
  /// True when the instance was built with a planted symmetry.
  bool symmetric = false;
};

/// Deterministic in (seed, count, profile, options). Symmetric profiles
/// instantiate template clauses over every pair of a variable block (full
/// symmetric group) or over consecutive pairs (cyclic group); the
/// symmetric-unsat profile mixes pigeonhole-style instances with filtered
/// random ones; the asymmetric profile pins each variable with its own
/// constant; mixed alternates SAT and UNSAT targets over all families.
std::vector<GeneratedInstance> generate_corpus(std::uint64_t seed, std::size_t count, CorpusProfile profile,
                                               const CorpusOptions& options = {});

/// Writes one SMT-LIB file per instance into `directory` (created if needed)
/// and returns the paths.
std::vector<std::string> write_corpus(const std::vector<GeneratedInstance>& instances,
                                      const std::string& directory);

}  // namespace symsmt

#endif  // SYMSMT_CORPUS_HPP
