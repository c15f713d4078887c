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

#include "symsmt/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "symsmt/errors.hpp"
#include "symsmt/frontend.hpp"
#include "symsmt/oracle.hpp"
#include "symsmt/skeleton.hpp"

namespace symsmt {

std::string_view to_string(CorpusProfile profile) {
  switch (profile) {
    case CorpusProfile::SymmetricSat: return "symmetric-sat";
    case CorpusProfile::SymmetricUnsat: return "symmetric-unsat";
    case CorpusProfile::Asymmetric: return "asymmetric";
    case CorpusProfile::Mixed: return "mixed";
  }
  return "?";
}

std::optional<CorpusProfile> parse_profile(std::string_view name) {
  for (auto p : {CorpusProfile::SymmetricSat, CorpusProfile::SymmetricUnsat, CorpusProfile::Asymmetric,
                 CorpusProfile::Mixed}) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

namespace {

// splitmix64: the standard distributions are implementation-defined, so
// draws are done by hand to keep files identical across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }
  bool coin() { return (next() & 1) != 0; }

 private:
  std::uint64_t state_;
};

Term v(const std::string& name) { return Term::var(name); }
Term c(std::int64_t value) { return Term::constant(value); }
Formula rel(Relation r, Term a, Term b) { return Formula::atom(Atom{r, std::move(a), std::move(b)}); }

// Atom over the roles a (and b), with constants drawn once per template.
struct AtomTemplate {
  int shape = 0;
  std::int64_t k = 0;
  bool binary() const { return shape >= 2 && shape != 11; }

  Formula instantiate(const std::string& a, const std::string& b) const {
    switch (shape) {
      case 0: return rel(Relation::Lt, v(a), c(k));
      case 1: return rel(Relation::Gt, v(a), c(k));
      case 2: return rel(Relation::Lt, Term::add({v(a), v(b)}), c(k));
      case 3: return rel(Relation::Gt, Term::add({v(a), v(b)}), c(k));
      case 4: return rel(Relation::Lt, Term::sub(v(a), v(b)), c(k));
      case 5: return rel(Relation::Eq, Term::mul({v(a), v(b)}), c(k));
      case 6: return rel(Relation::Gt, Term::mul({v(a), v(b)}), c(k));
      case 7: return rel(Relation::Le, v(a), v(b));
      case 8: return rel(Relation::Neq, v(a), v(b));
      case 9: return rel(Relation::Eq, Term::add({v(a), v(b)}), c(k));
      case 10: return rel(Relation::Ge, Term::add({Term::mul({c(2), v(a)}), v(b)}), c(k));
      default: return rel(Relation::Lt, Term::mul({v(a), v(a)}), c(k));
    }
  }
};

constexpr int kShapes = 12;

AtomTemplate draw_atom(Rng& rng) {
  AtomTemplate t;
  t.shape = static_cast<int>(rng.range(0, kShapes - 1));
  switch (t.shape) {
    case 5: case 6: t.k = rng.range(-4, 9); break;
    case 11: t.k = rng.range(1, 10); break;
    default: t.k = rng.range(-5, 6); break;
  }
  return t;
}

using ClauseTemplate = std::vector<AtomTemplate>;

struct Block {
  std::vector<std::string> vars;
  bool cyclic = false;
};

// Role pairs (a, b) that the block's group permutes among themselves.
std::vector<std::pair<int, int>> role_pairs(const Block& block) {
  std::vector<std::pair<int, int>> pairs;
  int m = static_cast<int>(block.vars.size());
  if (block.cyclic && m > 2) {
    for (int i = 0; i < m; ++i) pairs.emplace_back(i, (i + 1) % m);
  } else {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (i != j) pairs.emplace_back(i, j);
  }
  return pairs;
}

Formula instantiate(const ClauseTemplate& clause, const Block& block) {
  bool binary = std::any_of(clause.begin(), clause.end(), [](const AtomTemplate& a) { return a.binary(); });
  std::vector<Formula> conjuncts;
  auto emit = [&](const std::string& a, const std::string& b) {
    std::vector<Formula> lits;
    for (const auto& t : clause) lits.push_back(t.instantiate(a, b));
    conjuncts.push_back(lits.size() == 1 ? lits[0] : Formula::disj(lits));
  };
  if (binary) {
    for (auto [i, j] : role_pairs(block)) emit(block.vars[i], block.vars[j]);
  } else {
    for (const auto& a : block.vars) emit(a, a);
  }
  return Formula::conj(std::move(conjuncts));
}

Formula box(const std::string& name, std::int64_t lo, std::int64_t hi) {
  return Formula::conj({rel(Relation::Ge, v(name), c(lo)), rel(Relation::Le, v(name), c(hi))});
}

Script make_script(const std::vector<std::string>& vars, std::vector<Formula> conjuncts) {
  Script script;
  for (const auto& name : vars) script.declarations.push_back({name, Sort::Int});
  script.assertion = Formula::conj(std::move(conjuncts));
  script.metadata.logic = "QF_NIA";
  return script;
}

std::vector<std::string> names(int count) {
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

// Random template clauses over one interchangeable block, optionally with a
// context variable that every block member relates to in the same way.
Script draw_symmetric(Rng& rng, const CorpusOptions& options) {
  int max_vars = std::max(2, options.max_vars);
  bool context = max_vars >= 3 && rng.range(0, 3) == 0;
  int m = static_cast<int>(rng.range(2, max_vars - (context ? 1 : 0)));
  Block block{names(m), m > 2 && rng.coin()};
  std::vector<std::string> vars = block.vars;

  std::int64_t bound = rng.range(2, 6);
  std::vector<Formula> conjuncts;
  for (const auto& x : block.vars) conjuncts.push_back(box(x, -bound, bound));

  int templates = static_cast<int>(rng.range(1, std::max(1, options.max_templates)));
  for (int t = 0; t < templates; ++t) {
    ClauseTemplate clause;
    int width = static_cast<int>(rng.range(1, 3));
    for (int i = 0; i < width; ++i) clause.push_back(draw_atom(rng));
    conjuncts.push_back(instantiate(clause, block));
  }
  if (context) {
    std::string z = "z";
    vars.push_back(z);
    conjuncts.push_back(box(z, -rng.range(1, 6), rng.range(1, 6)));
    std::int64_t k = rng.range(-4, 6);
    std::vector<Formula> per_member;
    for (const auto& x : block.vars) per_member.push_back(rel(Relation::Lt, Term::add({v(x), v(z)}), c(k)));
    conjuncts.push_back(rng.coin() ? Formula::conj(per_member) : Formula::disj(per_member));
  }
  return make_script(vars, std::move(conjuncts));
}

// m values pairwise ordered inside a range of m - 1 values.
Script draw_pigeonhole(Rng& rng, const CorpusOptions& options) {
  int m = static_cast<int>(rng.range(3, std::max(3, std::min(4, options.max_vars))));
  auto vars = names(m);
  std::int64_t lo = rng.range(-3, 1);
  std::vector<Formula> conjuncts;
  for (const auto& x : vars) conjuncts.push_back(box(x, lo, lo + m - 2));
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (rng.range(0, 2) == 0) {
        conjuncts.push_back(rel(Relation::Neq, v(vars[i]), v(vars[j])));
      } else {
        conjuncts.push_back(Formula::disj({rel(Relation::Lt, v(vars[i]), v(vars[j])),
                                           rel(Relation::Lt, v(vars[j]), v(vars[i]))}));
      }
    }
  }
  return make_script(vars, std::move(conjuncts));
}

// Each variable carries a unary atom with a constant used nowhere else, so
// no nontrivial permutation maps the atom set onto itself.
Script draw_asymmetric(Rng& rng, const CorpusOptions& options) {
  int n = static_cast<int>(rng.range(2, std::max(2, options.max_vars)));
  auto vars = names(n);
  std::vector<std::int64_t> pool;
  for (std::int64_t k = -9; k <= 12; ++k) pool.push_back(k);
  for (std::size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[rng.next() % i]);
  std::size_t next = 0;
  auto fresh = [&]() { return pool[next++ % pool.size()]; };

  std::vector<Formula> conjuncts;
  for (int i = 0; i < n; ++i) {
    conjuncts.push_back(box(vars[i], -6, 6));
    Relation r = rng.coin() ? Relation::Lt : Relation::Gt;
    conjuncts.push_back(Formula::disj({rel(r, v(vars[i]), c(fresh())),
                                       rel(Relation::Eq, v(vars[i]), c(fresh()))}));
  }
  int extra = static_cast<int>(rng.range(1, 3));
  for (int e = 0; e < extra; ++e) {
    int i = static_cast<int>(rng.range(0, n - 1));
    int j = static_cast<int>(rng.range(0, n - 2));
    if (j >= i) ++j;
    Term lhs = rng.coin() ? Term::add({Term::mul({c(i + 2), v(vars[i])}), v(vars[j])})
                          : Term::mul({v(vars[i]), v(vars[j])});
    Relation r = rng.coin() ? Relation::Le : Relation::Neq;
    conjuncts.push_back(rel(r, lhs, c(fresh())));
  }
  return make_script(vars, std::move(conjuncts));
}

bool classify(const Script& script, const CorpusOptions& options) {
  BruteForceOptions bf;
  bf.max_models = 1;
  return brute_force(script, DomainBound{options.classify_bound}, bf).sat;
}

bool within_cap(const Script& script, const CorpusOptions& options) {
  if (options.max_skeleton_vars <= 0) return true;
  return static_cast<int>(extract_skeleton(script).phi.size()) <= options.max_skeleton_vars;
}

enum class Family { Symmetric, Pigeonhole, Asymmetric };

}  // namespace

std::vector<GeneratedInstance> generate_corpus(std::uint64_t seed, std::size_t count, CorpusProfile profile,
                                               const CorpusOptions& options) {
  constexpr int kAttempts = 400;
  Rng rng(seed ^ (static_cast<std::uint64_t>(profile) << 56));
  std::vector<GeneratedInstance> out;
  for (std::size_t index = 0; index < count; ++index) {
    std::optional<bool> want;
    switch (profile) {
      case CorpusProfile::SymmetricSat: want = true; break;
      case CorpusProfile::SymmetricUnsat: want = false; break;
      case CorpusProfile::Asymmetric: break;
      case CorpusProfile::Mixed: want = index % 2 == 0; break;
    }

    GeneratedInstance inst;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
      Family family = Family::Symmetric;
      if (profile == CorpusProfile::Asymmetric) {
        family = Family::Asymmetric;
      } else if (profile == CorpusProfile::SymmetricUnsat) {
        family = rng.coin() ? Family::Pigeonhole : Family::Symmetric;
      } else if (profile == CorpusProfile::Mixed) {
        auto pick = rng.range(0, 9);
        family = pick < 6 ? Family::Symmetric : pick < 8 ? Family::Asymmetric : Family::Pigeonhole;
      }
      Script script = family == Family::Pigeonhole   ? draw_pigeonhole(rng, options)
                      : family == Family::Asymmetric ? draw_asymmetric(rng, options)
                                                     : draw_symmetric(rng, options);
      if (!within_cap(script, options)) continue;
      bool sat = classify(script, options);
      bool last = attempt + 1 == kAttempts;
      if (want && *want != sat && !last) continue;
      inst.script = std::move(script);
      inst.sat = sat;
      inst.symmetric = family != Family::Asymmetric;
      break;
    }
    inst.name = std::string(to_string(profile)) + "-" + std::to_string(seed) + "-" +
                std::to_string(index) + ".smt2";
    inst.script.metadata.info[":source"] = "|symsmt generator seed " + std::to_string(seed) + "|";
    inst.script.metadata.info[":status"] = inst.sat ? "sat" : "unsat";
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<std::string> write_corpus(const std::vector<GeneratedInstance>& instances,
                                      const std::string& directory) {
  namespace fs = std::filesystem;
  fs::create_directories(directory);
  std::vector<std::string> paths;
  for (const auto& inst : instances) {
    fs::path path = fs::path(directory) / inst.name;
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + path.string());
    file << serialize(inst.script);
    paths.push_back(path.string());
  }
  return paths;
}

}  // namespace symsmt
