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

#ifndef SYMSMT_REPORT_HPP
#define SYMSMT_REPORT_HPP

#include <nlohmann/json.hpp>

#include "symsmt/solver.hpp"

namespace symsmt {

/// Version of every JSON document written by the library and the CLI.
inline constexpr int kJsonSchema = 1;

nlohmann::json to_json(const SolveStats& stats);
nlohmann::json to_json(const SolveConfig& config);

/// {schema, status, reason, model, stats, config_echo}.
nlohmann::json result_to_json(const SolveResult& result, const SolveConfig& config);

}  // namespace symsmt

#endif  // SYMSMT_REPORT_HPP
