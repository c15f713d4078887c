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

#include <cctype>

#include "symsmt/frontend.hpp"

namespace symsmt {
namespace {

bool is_simple_symbol(const std::string& s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (std::isalnum(static_cast<unsigned char>(c))) continue;
    if (std::string_view("~!@$%^&*_-+=<>.?/").find(c) == std::string_view::npos) return false;
  }
  return true;
}

std::string symbol(const std::string& s) { return is_simple_symbol(s) ? s : "|" + s + "|"; }

void write(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::IntConst:
      if (t.value() < 0)
        out += "(- " + BigInt(-t.value()).str() + ")";
      else
        out += t.value().str();
      return;
    case Term::Kind::Var: out += symbol(t.name()); return;
    default: break;
  }
  out += t.kind() == Term::Kind::Add ? "(+" : t.kind() == Term::Kind::Mul ? "(*" : "(-";
  for (const auto& a : t.args()) {
    out += ' ';
    write(a, out);
  }
  out += ')';
}

void write(const Atom& a, std::string& out) {
  out += '(';
  out += to_string(a.relation);
  out += ' ';
  write(a.lhs, out);
  out += ' ';
  write(a.rhs, out);
  out += ')';
}

void write(const Formula& f, std::string& out) {
  const char* head = nullptr;
  switch (f.kind()) {
    case Formula::Kind::Atom: write(f.atom(), out); return;
    case Formula::Kind::Const: out += f.value() ? "true" : "false"; return;
    case Formula::Kind::And: head = "(and"; break;
    case Formula::Kind::Or: head = "(or"; break;
    case Formula::Kind::Not: head = "(not"; break;
    case Formula::Kind::Implies: head = "(=>"; break;
  }
  out += head;
  for (const auto& a : f.args()) {
    out += ' ';
    write(a, out);
  }
  out += ')';
}

}  // namespace

std::string serialize(const Term& term) {
  std::string out;
  write(term, out);
  return out;
}

std::string serialize(const Atom& atom) {
  std::string out;
  write(atom, out);
  return out;
}

std::string serialize(const Formula& formula) {
  std::string out;
  write(formula, out);
  return out;
}

std::string serialize(const Script& script) {
  std::string out;
  if (!script.metadata.logic.empty()) out += "(set-logic " + script.metadata.logic + ")\n";
  for (const auto& [key, value] : script.metadata.info)
    out += "(set-info " + key + (value.empty() ? "" : " " + value) + ")\n";
  for (const auto& d : script.declarations)
    out += "(declare-fun " + symbol(d.name) + " () " + std::string(to_string(d.sort)) + ")\n";
  out += "(assert " + serialize(script.assertion) + ")\n";
  out += "(check-sat)\n(exit)\n";
  return out;
}

}  // namespace symsmt
