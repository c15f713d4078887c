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

#include "symsmt/report.hpp"

namespace symsmt {

using nlohmann::json;

json to_json(const SolveStats& s) {
  json phases = json::array();
  for (const auto& p : s.phases) {
    phases.push_back({{"mode", to_string(p.mode)},
                      {"status", to_string(p.status)},
                      {"seconds", p.seconds},
                      {"skeleton_models_tried", p.skeleton_models_tried}});
  }
  return {
      {"skeleton_vars", s.skeleton_vars},
      {"skeleton_clauses", s.skeleton_clauses},
      {"tseitin_aux_vars", s.tseitin_aux_vars},
      {"skeleton_models_tried", s.skeleton_models_tried},
      {"conflict_clauses", s.conflict_clauses},
      {"symmetries_found", s.symmetries_found},
      {"symmetries_accepted", s.symmetries_accepted},
      {"symmetries_rejected", s.symmetries_rejected},
      {"symmetries_used", s.symmetries_used},
      {"detection_complete", s.detection_complete},
      {"sbp_clauses", s.sbp_clauses},
      {"sbp_aux_vars", s.sbp_aux_vars},
      {"sat_decisions", s.sat.decisions},
      {"sat_conflicts", s.sat.conflicts},
      {"sat_propagations", s.sat.propagations},
      {"theory_nodes", s.theory_nodes},
      {"detect_seconds", s.detect_seconds},
      {"sat_seconds", s.sat_seconds},
      {"theory_seconds", s.theory_seconds},
      {"total_seconds", s.total_seconds},
      {"phases", phases},
  };
}

json to_json(const SolveConfig& c) {
  json out = {
      {"mode", to_string(c.mode)},
      {"bound", c.bound.value},
      {"k", c.k},
      {"ordering", c.ordering == OrderingMode::Heuristic ? "heuristic" : "index"},
      {"generator_limit", c.generator_limit},
      {"node_budget", c.node_budget},
      {"hybrid_order", to_string(c.hybrid_order)},
      {"carry_conflicts", c.carry_conflicts},
      {"shrink_core", c.shrink_core},
      {"restarts", c.sat.restarts == RestartPolicy::Luby ? "luby" : "none"},
  };
  out["timeout_ms"] = c.timeout ? json(c.timeout->count()) : json(nullptr);
  out["t_budget_ms"] = c.mode == SolveMode::Hybrid ? json(c.resolved_hybrid_budget().count()) : json(nullptr);
  return out;
}

json result_to_json(const SolveResult& result, const SolveConfig& config) {
  json model = json::object();
  for (const auto& [name, value] : result.model.values) model[name] = value;
  json out = {
      {"schema", kJsonSchema},
      {"status", to_string(result.status)},
      {"model", result.status == SolveStatus::Sat ? model : json(nullptr)},
      {"stats", to_json(result.stats)},
      {"config_echo", to_json(config)},
  };
  if (!result.reason.empty()) out["reason"] = result.reason;
  return out;
}

}  // namespace symsmt
