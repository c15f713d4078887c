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

#ifndef SYMSMT_FRONTEND_HPP
#define SYMSMT_FRONTEND_HPP

#include <string>
#include <string_view>

#include "symsmt/ast.hpp"

namespace symsmt {

/// Parses the supported SMT-LIB 2 fragment: set-logic, set-info, zero-arity
/// declare-fun, declare-const, assert, check-sat and exit. All assertions are
/// conjoined into Script::assertion.
///
/// Throws ParseError on malformed input, UnsupportedFeature for anything
/// outside the fragment (quantifiers, div/mod, ite, arrays, reals, ...), and
/// SortMismatch when an Int term appears where a formula is expected or the
/// other way around.
Script parse_script(std::string_view text, std::string source = {});

/// Parses a file from disk; the path becomes the script's source.
Script parse_file(const std::string& path);

/// Canonical form. Sub(a, b) becomes Add(a, Neg(b)); constants fold in Add
/// and Mul; Gt/Ge become Lt/Le with swapped sides; commutative arguments
/// (And, Or, Add, Mul, Eq, Neq) are flattened and sorted by key. Idempotent.
Term normalize(const Term& term);
Atom normalize(const Atom& atom);
Formula normalize(const Formula& formula);
Script normalize(const Script& script);

/// SMT-LIB text. Negative constants print as "(- n)"; one command per line.
std::string serialize(const Term& term);
std::string serialize(const Atom& atom);
std::string serialize(const Formula& formula);
std::string serialize(const Script& script);

}  // namespace symsmt

#endif  // SYMSMT_FRONTEND_HPP
