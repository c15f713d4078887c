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

#ifndef SYMSMT_THEORY_HPP
#define SYMSMT_THEORY_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "symsmt/ast.hpp"
#include "symsmt/deadline.hpp"
#include "symsmt/skeleton.hpp"

namespace symsmt {

/// Every theory variable ranges over [-bound, bound].
struct DomainBound {
  std::int64_t value = 32;
};

struct TheoryModel {
  std::map<std::string, std::int64_t> values;
};

enum class Consistency { Consistent, Inconsistent, Cancelled };

struct ConsistencyResult {
  Consistency outcome = Consistency::Cancelled;
  TheoryModel model;
  /// Indices into the queried literal list; jointly infeasible.
  std::vector<int> core;
  std::uint64_t nodes = 0;
};

struct TheoryOptions {
  /// Drop literals from the core while it stays infeasible.
  bool shrink_core = false;
};

/// Decides whether some point of [-B, B]^n satisfies all literals. Interval
/// propagation narrows the box using the linear part of each constraint;
/// depth-first enumeration over the remaining variables finishes the job.
/// The model holds a value for each variable mentioned by the literals.
///
/// Throws EvaluationOverflow if a constant does not fit in 64 bits or an
/// intermediate product leaves the 128-bit range.
ConsistencyResult check_consistency(std::span<const Atom> literals, DomainBound bound,
                                    const Deadline& deadline = Deadline::never(),
                                    TheoryOptions options = {});

/// Clause blocking every skeleton assignment that agrees with `assignment`
/// on `core_vars`.
Clause conflict_clause(const std::vector<bool>& assignment, std::span<const int> core_vars);

}  // namespace symsmt

#endif  // SYMSMT_THEORY_HPP
