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

#include "symsmt/skeleton.hpp"

#include <algorithm>
#include <sstream>

#include "symsmt/errors.hpp"
#include "symsmt/frontend.hpp"

namespace symsmt {

Prop Prop::make(Kind kind, std::vector<Prop> args) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->args = std::move(args);
  const char* head = kind == Kind::And ? "(and" : kind == Kind::Or ? "(or" : kind == Kind::Not ? "(not" : "(=>";
  node->key = head;
  for (const auto& a : node->args) node->key += " " + a.key();
  node->key += ")";
  return Prop(std::move(node));
}

Prop Prop::var(int id) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Var;
  node->var = id;
  node->key = "v" + std::to_string(id);
  return Prop(std::move(node));
}

Prop Prop::constant(bool value) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Const;
  node->value = value;
  node->key = value ? "true" : "false";
  return Prop(std::move(node));
}

Prop Prop::conj(std::vector<Prop> args) { return make(Kind::And, std::move(args)); }
Prop Prop::disj(std::vector<Prop> args) { return make(Kind::Or, std::move(args)); }
Prop Prop::negate(Prop arg) { return make(Kind::Not, {std::move(arg)}); }
Prop Prop::implies(Prop lhs, Prop rhs) { return make(Kind::Implies, {std::move(lhs), std::move(rhs)}); }

bool Prop::evaluate(const std::vector<bool>& assignment) const {
  switch (kind()) {
    case Kind::Var: return assignment.at(var());
    case Kind::Const: return value();
    case Kind::Not: return !args()[0].evaluate(assignment);
    case Kind::Implies: return !args()[0].evaluate(assignment) || args()[1].evaluate(assignment);
    case Kind::And:
      return std::all_of(args().begin(), args().end(), [&](const Prop& p) { return p.evaluate(assignment); });
    case Kind::Or:
      return std::any_of(args().begin(), args().end(), [&](const Prop& p) { return p.evaluate(assignment); });
  }
  return false;
}

Prop normalize(const Prop& prop) {
  switch (prop.kind()) {
    case Prop::Kind::Var:
    case Prop::Kind::Const: return prop;
    case Prop::Kind::Not: {
      Prop n = normalize(prop.args()[0]);
      if (n.kind() == Prop::Kind::Const) return Prop::constant(!n.value());
      if (n.kind() == Prop::Kind::Not) return n.args()[0];
      return Prop::negate(n);
    }
    case Prop::Kind::Implies: {
      Prop lhs = normalize(prop.args()[0]);
      Prop rhs = normalize(prop.args()[1]);
      if (lhs.kind() == Prop::Kind::Const) return lhs.value() ? rhs : Prop::constant(true);
      if (rhs.kind() == Prop::Kind::Const) return rhs.value() ? rhs : normalize(Prop::negate(lhs));
      return Prop::implies(lhs, rhs);
    }
    case Prop::Kind::And:
    case Prop::Kind::Or: {
      const bool is_and = prop.kind() == Prop::Kind::And;
      std::vector<Prop> rest;
      for (const auto& raw : prop.args()) {
        Prop n = normalize(raw);
        std::vector<Prop> parts = n.kind() == prop.kind() ? n.args() : std::vector<Prop>{n};
        for (auto& p : parts) {
          if (p.kind() == Prop::Kind::Const) {
            if (p.value() != is_and) return Prop::constant(!is_and);
            continue;
          }
          rest.push_back(p);
        }
      }
      std::sort(rest.begin(), rest.end(), [](const Prop& a, const Prop& b) { return a.key() < b.key(); });
      rest.erase(std::unique(rest.begin(), rest.end()), rest.end());
      if (rest.empty()) return Prop::constant(is_and);
      if (rest.size() == 1) return rest.front();
      return is_and ? Prop::conj(std::move(rest)) : Prop::disj(std::move(rest));
    }
  }
  return prop;
}

Prop rename(const Prop& prop, const std::map<int, int>& renaming) {
  switch (prop.kind()) {
    case Prop::Kind::Var: {
      auto it = renaming.find(prop.var());
      return it == renaming.end() ? prop : Prop::var(it->second);
    }
    case Prop::Kind::Const: return prop;
    case Prop::Kind::Not: return Prop::negate(rename(prop.args()[0], renaming));
    case Prop::Kind::Implies:
      return Prop::implies(rename(prop.args()[0], renaming), rename(prop.args()[1], renaming));
    case Prop::Kind::And:
    case Prop::Kind::Or: {
      std::vector<Prop> args;
      for (const auto& a : prop.args()) args.push_back(rename(a, renaming));
      return prop.kind() == Prop::Kind::And ? Prop::conj(std::move(args)) : Prop::disj(std::move(args));
    }
  }
  return prop;
}

int AtomMap::intern(const Atom& atom) {
  std::string key = atom.key();
  auto [it, inserted] = index_.emplace(key, size());
  if (inserted) {
    atoms_.push_back(atom);
    labels_.push_back("b" + std::to_string(it->second));
  }
  return it->second;
}

int AtomMap::find(const Atom& atom) const {
  auto it = index_.find(atom.key());
  return it == index_.end() ? -1 : it->second;
}

void AtomMap::assign_labels() {
  for (int i = 0; i < size(); ++i)
    labels_[i] = size() <= 11 ? std::string(1, static_cast<char>('P' + i)) : "b" + std::to_string(i);
}

namespace {

Prop abstract(const Formula& f, AtomMap& phi) {
  switch (f.kind()) {
    case Formula::Kind::Atom: return Prop::var(phi.intern(f.atom()));
    case Formula::Kind::Const: return Prop::constant(f.value());
    case Formula::Kind::Not: return Prop::negate(abstract(f.args()[0], phi));
    case Formula::Kind::Implies: {
      Prop lhs = abstract(f.args()[0], phi);
      return Prop::implies(lhs, abstract(f.args()[1], phi));
    }
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      std::vector<Prop> args;
      for (const auto& a : f.args()) args.push_back(abstract(a, phi));
      return f.kind() == Formula::Kind::And ? Prop::conj(std::move(args)) : Prop::disj(std::move(args));
    }
  }
  return Prop::constant(true);
}

class Tseitin {
 public:
  explicit Tseitin(Cnf& cnf) : cnf_(cnf) {}

  void assert_top(const Prop& p) {
    switch (p.kind()) {
      case Prop::Kind::Const:
        if (!p.value()) cnf_.clauses.push_back({});
        return;
      case Prop::Kind::And:
        for (const auto& a : p.args()) assert_top(a);
        return;
      case Prop::Kind::Or: {
        Clause c;
        for (const auto& a : p.args()) c.push_back(encode(a));
        cnf_.add_clause(std::move(c));
        return;
      }
      case Prop::Kind::Implies:
        cnf_.add_clause({~encode(p.args()[0]), encode(p.args()[1])});
        return;
      default: cnf_.add_clause({encode(p)}); return;
    }
  }

 private:
  Lit encode(const Prop& p) {
    switch (p.kind()) {
      case Prop::Kind::Var: return Lit::pos(p.var());
      case Prop::Kind::Not: return ~encode(p.args()[0]);
      default: break;
    }
    if (auto it = cache_.find(p.key()); it != cache_.end()) return it->second;
    Lit out = Lit::pos(cnf_.new_var());
    if (p.kind() == Prop::Kind::Const) {
      cnf_.add_clause({p.value() ? out : ~out});
    } else {
      // out <-> AND(children) or out <-> OR(children)
      std::vector<Lit> kids;
      if (p.kind() == Prop::Kind::Implies) {
        kids = {~encode(p.args()[0]), encode(p.args()[1])};
      } else {
        for (const auto& a : p.args()) kids.push_back(encode(a));
      }
      const bool is_and = p.kind() == Prop::Kind::And;
      Clause big{is_and ? out : ~out};
      for (Lit k : kids) {
        big.push_back(is_and ? ~k : k);
        if (is_and)
          cnf_.add_clause({~out, k});
        else
          cnf_.add_clause({out, ~k});
      }
      cnf_.add_clause(std::move(big));
    }
    cache_.emplace(p.key(), out);
    return out;
  }

  Cnf& cnf_;
  std::unordered_map<std::string, Lit> cache_;
};

}  // namespace

Skeleton extract_skeleton(const Script& script) {
  Skeleton s;
  s.psi = abstract(normalize(script.assertion), s.phi);
  s.phi.assign_labels();
  return s;
}

bool canonicalize_clause(Clause& clause) {
  std::sort(clause.begin(), clause.end());
  clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
  for (std::size_t i = 0; i + 1 < clause.size(); ++i)
    if (clause[i].var() == clause[i + 1].var()) return false;
  return true;
}

bool Cnf::add_clause(Clause clause) {
  if (!canonicalize_clause(clause)) return false;
  clauses.push_back(std::move(clause));
  return true;
}

Cnf to_cnf(const Prop& psi, int num_skeleton_vars) {
  Cnf cnf;
  cnf.num_vars = cnf.num_skeleton_vars = num_skeleton_vars;
  Tseitin(cnf).assert_top(psi);
  return cnf;
}

bool evaluate(const Clause& clause, const std::vector<bool>& assignment) {
  return std::any_of(clause.begin(), clause.end(),
                     [&](Lit l) { return assignment.at(l.var()) != l.negative(); });
}

bool evaluate(const Cnf& cnf, const std::vector<bool>& assignment) {
  return std::all_of(cnf.clauses.begin(), cnf.clauses.end(),
                     [&](const Clause& c) { return evaluate(c, assignment); });
}

std::vector<Atom> assignment_to_literal_conjunction(const std::vector<bool>& assignment,
                                                    const AtomMap& phi) {
  std::vector<Atom> out;
  out.reserve(phi.size());
  for (int v = 0; v < phi.size(); ++v) {
    Atom a = phi.atom(v);
    if (!assignment.at(v)) a.relation = complement(a.relation);
    out.push_back(std::move(a));
  }
  return out;
}

std::string write_dimacs(const Cnf& cnf, const AtomMap* phi) {
  std::ostringstream out;
  if (phi) {
    for (int v = 0; v < phi->size(); ++v)
      out << "c " << v + 1 << ' ' << phi->label(v) << ' ' << serialize(phi->atom(v)) << '\n';
  }
  if (cnf.num_aux() > 0)
    out << "c aux " << cnf.num_skeleton_vars + 1 << ".." << cnf.num_vars << '\n';
  out << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
  for (const auto& c : cnf.clauses) {
    for (Lit l : c) out << l.to_dimacs() << ' ';
    out << "0\n";
  }
  return out.str();
}

Cnf read_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  Cnf cnf;
  bool header = false;
  Clause current;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == 'c' || first[0] == '%') continue;
    if (first == "p") {
      std::string fmt;
      int nv = 0;
      long nc = 0;
      if (!(ls >> fmt >> nv >> nc) || fmt != "cnf" || nv < 0)
        throw ParseError(line_no, 1, "malformed DIMACS header");
      cnf.num_vars = cnf.num_skeleton_vars = nv;
      header = true;
      continue;
    }
    if (!header) throw ParseError(line_no, 1, "clause before DIMACS header");
    std::istringstream cs(line);
    long v;
    while (cs >> v) {
      if (v == 0) {
        if (canonicalize_clause(current)) cnf.clauses.push_back(current);
        current.clear();
      } else {
        if (std::abs(v) > cnf.num_vars) throw ParseError(line_no, 1, "literal out of range");
        current.push_back(Lit::from_dimacs(static_cast<int>(v)));
      }
    }
    if (!cs.eof()) throw ParseError(line_no, 1, "malformed clause line");
  }
  if (!current.empty() && canonicalize_clause(current)) cnf.clauses.push_back(current);
  return cnf;
}

}  // namespace symsmt
