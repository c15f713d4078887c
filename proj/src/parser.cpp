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
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "symsmt/errors.hpp"
#include "symsmt/frontend.hpp"

namespace symsmt {
namespace {

struct SExpr {
  bool is_list = false;
  bool is_string = false;
  std::string atom;
  std::vector<SExpr> items;
  std::size_t line = 1;
  std::size_t column = 1;

  bool is_symbol(std::string_view s) const { return !is_list && !is_string && atom == s; }
};

std::string print(const SExpr& e) {
  if (!e.is_list) return e.is_string ? "\"" + e.atom + "\"" : e.atom;
  std::string out = "(";
  for (std::size_t i = 0; i < e.items.size(); ++i) {
    if (i) out += ' ';
    out += print(e.items[i]);
  }
  return out + ")";
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  SExpr read() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    SExpr e;
    e.line = line_;
    e.column = column_;
    char c = text_[pos_];
    if (c == '(') {
      advance();
      e.is_list = true;
      while (true) {
        skip_space();
        if (pos_ >= text_.size()) throw ParseError(e.line, e.column, "unbalanced '('");
        if (text_[pos_] == ')') {
          advance();
          break;
        }
        e.items.push_back(read());
      }
      return e;
    }
    if (c == ')') fail("unexpected ')'");
    if (c == '|') {
      advance();
      while (pos_ < text_.size() && text_[pos_] != '|') e.atom += advance();
      if (pos_ >= text_.size()) throw ParseError(e.line, e.column, "unterminated quoted symbol");
      advance();
      return e;
    }
    if (c == '"') {
      advance();
      e.is_string = true;
      while (true) {
        if (pos_ >= text_.size()) throw ParseError(e.line, e.column, "unterminated string literal");
        char d = advance();
        if (d == '"') {
          if (pos_ < text_.size() && text_[pos_] == '"') {
            e.atom += advance();
            continue;
          }
          break;
        }
        e.atom += d;
      }
      return e;
    }
    while (pos_ < text_.size()) {
      char d = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(d)) || d == '(' || d == ')' || d == ';' ||
          d == '"' || d == '|')
        break;
      e.atom += advance();
    }
    return e;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line_, column_, message);
  }

 private:
  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

[[noreturn]] void fail_at(const SExpr& e, const std::string& message) {
  throw ParseError(e.line, e.column, message);
}

bool is_numeral(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

const std::set<std::string, std::less<>> kUnsupportedOperators = {
    "div", "mod", "abs", "ite", "let", "forall", "exists", "xor", "!", "select", "store",
    "to_real", "to_int", "is_int", "/", "_", "as", "match"};

const std::set<std::string, std::less<>> kBoolOperators = {
    "and", "or", "not", "=>", "<", "<=", ">", ">=", "=", "distinct", "xor", "ite", "forall", "exists"};

class ScriptBuilder {
 public:
  explicit ScriptBuilder(std::string source) { script_.metadata.source = std::move(source); }

  Script build(std::string_view text) {
    Reader reader(text);
    std::vector<Formula> assertions;
    while (!reader.at_end()) {
      SExpr cmd = reader.read();
      if (!cmd.is_list || cmd.items.empty() || cmd.items[0].is_list)
        fail_at(cmd, "expected a command");
      const std::string& name = cmd.items[0].atom;
      if (name == "set-logic") {
        expect_arity(cmd, 2);
        script_.metadata.logic = cmd.items[1].atom;
        if (name_is_not_one_of(script_.metadata.logic, {"QF_LIA", "QF_NIA", "ALL"}))
          script_.metadata.warnings.push_back("logic " + script_.metadata.logic +
                                              " is outside QF_LIA/QF_NIA; continuing");
      } else if (name == "set-info") {
        if (cmd.items.size() < 2 || cmd.items.size() > 3) fail_at(cmd, "malformed set-info");
        script_.metadata.info[cmd.items[1].atom] = cmd.items.size() == 3 ? print(cmd.items[2]) : "";
      } else if (name == "declare-fun") {
        expect_arity(cmd, 4);
        if (!cmd.items[2].is_list) fail_at(cmd.items[2], "expected parameter sort list");
        if (!cmd.items[2].items.empty()) throw UnsupportedFeature("declare-fun with arguments");
        declare(cmd.items[1], cmd.items[3]);
      } else if (name == "declare-const") {
        expect_arity(cmd, 3);
        declare(cmd.items[1], cmd.items[2]);
      } else if (name == "assert") {
        expect_arity(cmd, 2);
        assertions.push_back(formula(cmd.items[1]));
      } else if (name == "check-sat") {
        expect_arity(cmd, 1);
      } else if (name == "exit") {
        break;
      } else {
        throw UnsupportedFeature(name);
      }
    }
    if (assertions.size() == 1)
      script_.assertion = assertions.front();
    else if (assertions.size() > 1)
      script_.assertion = Formula::conj(std::move(assertions));
    return std::move(script_);
  }

 private:
  static bool name_is_not_one_of(const std::string& s, std::initializer_list<std::string_view> names) {
    for (auto n : names)
      if (s == n) return false;
    return true;
  }

  static void expect_arity(const SExpr& cmd, std::size_t n) {
    if (cmd.items.size() != n) fail_at(cmd, "wrong number of arguments to " + cmd.items[0].atom);
  }

  void declare(const SExpr& name, const SExpr& sort) {
    if (name.is_list || name.is_string) fail_at(name, "expected a symbol");
    if (sort.is_list) throw UnsupportedFeature("parametric sort " + print(sort));
    Sort s;
    if (sort.atom == "Int")
      s = Sort::Int;
    else if (sort.atom == "Bool")
      s = Sort::Bool;
    else
      throw UnsupportedFeature("sort " + sort.atom);
    if (sorts_.count(name.atom)) fail_at(name, "duplicate declaration of " + name.atom);
    sorts_[name.atom] = s;
    script_.declarations.push_back({name.atom, s});
  }

  bool looks_boolean(const SExpr& e) const {
    if (!e.is_list) {
      if (e.atom == "true" || e.atom == "false") return true;
      auto it = sorts_.find(e.atom);
      return it != sorts_.end() && it->second == Sort::Bool;
    }
    return !e.items.empty() && !e.items[0].is_list && kBoolOperators.count(e.items[0].atom);
  }

  Formula formula(const SExpr& e) {
    if (!e.is_list) {
      if (e.is_string) fail_at(e, "string literal in formula");
      if (e.atom == "true") return Formula::constant(true);
      if (e.atom == "false") return Formula::constant(false);
      auto it = sorts_.find(e.atom);
      if (it == sorts_.end()) fail_at(e, "undeclared symbol " + e.atom);
      if (it->second == Sort::Bool) throw UnsupportedFeature("Bool-sorted variable " + e.atom);
      throw SortMismatch("Int term " + e.atom + " used as a formula");
    }
    if (e.items.empty()) fail_at(e, "empty application");
    if (e.items[0].is_list) fail_at(e, "expected an operator");
    const std::string& op = e.items[0].atom;
    const std::size_t n = e.items.size() - 1;
    auto args = [&] {
      std::vector<Formula> out;
      for (std::size_t i = 1; i <= n; ++i) out.push_back(formula(e.items[i]));
      return out;
    };
    if (op == "and" || op == "or") {
      if (n == 0) fail_at(e, op + " needs at least one argument");
      return op == "and" ? Formula::conj(args()) : Formula::disj(args());
    }
    if (op == "not") {
      if (n != 1) fail_at(e, "not takes one argument");
      return Formula::negate(formula(e.items[1]));
    }
    if (op == "=>") {
      if (n < 2) fail_at(e, "=> needs at least two arguments");
      auto a = args();
      Formula f = a.back();
      for (std::size_t i = a.size() - 1; i-- > 0;) f = Formula::implies(a[i], f);
      return f;
    }
    if (kUnsupportedOperators.count(op)) throw UnsupportedFeature(op);
    static const std::unordered_map<std::string, Relation> kRelations = {
        {"<", Relation::Lt}, {"<=", Relation::Le}, {">", Relation::Gt},
        {">=", Relation::Ge}, {"=", Relation::Eq}, {"distinct", Relation::Neq}};
    auto rel = kRelations.find(op);
    if (rel == kRelations.end()) {
      if (sorts_.count(op) || op == "+" || op == "-" || op == "*")
        throw SortMismatch("Int term used as a formula: " + print(e));
      fail_at(e, "unknown operator " + op);
    }
    if (n < 2) fail_at(e, op + " needs at least two arguments");
    for (std::size_t i = 1; i <= n; ++i)
      if (looks_boolean(e.items[i])) throw UnsupportedFeature("Bool-sorted arguments to " + op);
    std::vector<Term> terms;
    for (std::size_t i = 1; i <= n; ++i) terms.push_back(term(e.items[i]));
    std::vector<Formula> parts;
    if (rel->second == Relation::Neq) {
      for (std::size_t i = 0; i < terms.size(); ++i)
        for (std::size_t j = i + 1; j < terms.size(); ++j)
          parts.push_back(Formula::atom({Relation::Neq, terms[i], terms[j]}));
    } else {
      for (std::size_t i = 0; i + 1 < terms.size(); ++i)
        parts.push_back(Formula::atom({rel->second, terms[i], terms[i + 1]}));
    }
    return parts.size() == 1 ? parts.front() : Formula::conj(std::move(parts));
  }

  Term term(const SExpr& e) {
    if (!e.is_list) {
      if (e.is_string) fail_at(e, "string literal in term");
      if (is_numeral(e.atom)) return Term::constant(BigInt(e.atom));
      if (!e.atom.empty() && (std::isdigit(static_cast<unsigned char>(e.atom[0])) || e.atom[0] == '#'))
        throw UnsupportedFeature("literal " + e.atom);
      auto it = sorts_.find(e.atom);
      if (it == sorts_.end()) {
        if (e.atom == "true" || e.atom == "false")
          throw SortMismatch("Bool constant used as an Int term");
        fail_at(e, "undeclared symbol " + e.atom);
      }
      if (it->second == Sort::Bool) throw SortMismatch("Bool variable " + e.atom + " used as an Int term");
      return Term::var(e.atom, Sort::Int);
    }
    if (e.items.empty()) fail_at(e, "empty application");
    if (e.items[0].is_list) fail_at(e, "expected an operator");
    const std::string& op = e.items[0].atom;
    const std::size_t n = e.items.size() - 1;
    if (kUnsupportedOperators.count(op)) throw UnsupportedFeature(op);
    if (kBoolOperators.count(op)) throw SortMismatch("formula used as an Int term: " + print(e));
    std::vector<Term> args;
    for (std::size_t i = 1; i <= n; ++i) args.push_back(term(e.items[i]));
    if (n == 0) fail_at(e, op + " needs arguments");
    if (op == "+") return n == 1 ? args.front() : Term::add(std::move(args));
    if (op == "*") return n == 1 ? args.front() : Term::mul(std::move(args));
    if (op == "-") {
      if (n == 1) {
        if (args[0].kind() == Term::Kind::IntConst) return Term::constant(-args[0].value());
        return Term::neg(args[0]);
      }
      Term t = Term::sub(args[0], args[1]);
      for (std::size_t i = 2; i < n; ++i) t = Term::sub(t, args[i]);
      return t;
    }
    if (sorts_.count(op)) throw UnsupportedFeature("application of " + op);
    fail_at(e, "unknown operator " + op);
  }

  Script script_;
  std::unordered_map<std::string, Sort> sorts_;
};

}  // namespace

Script parse_script(std::string_view text, std::string source) {
  return ScriptBuilder(std::move(source)).build(text);
}

Script parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_script(buf.str(), path);
}

}  // namespace symsmt
