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

#include "symsmt/sat.hpp"

#include <algorithm>

namespace symsmt {
namespace {

// Finite Luby sequence value for index i (0-based).
double luby(double y, int x) {
  int size = 1;
  int seq = 0;
  while (size < x + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x = x % size;
  }
  double r = 1;
  for (int i = 0; i < seq; ++i) r *= y;
  return r;
}

}  // namespace

SatSolver::SatSolver(const Cnf& cnf, SatOptions options) : options_(options) {
  const int n = cnf.num_vars;
  watches_.resize(2 * static_cast<std::size_t>(n));
  assigns_.assign(n, 0);
  level_.assign(n, 0);
  reason_.assign(n, kNoReason);
  activity_.assign(n, 0.0);
  seen_.assign(n, 0);
  heap_pos_.assign(n, -1);
  for (int v = 0; v < n; ++v) heap_insert(v);
  for (const auto& c : cnf.clauses) add_clause(c);
}

void SatSolver::attach(std::uint32_t cref) {
  const Clause& c = clauses_[cref];
  watches_[(~c[0]).code()].push_back({cref, c[1]});
  watches_[(~c[1]).code()].push_back({cref, c[0]});
}

void SatSolver::enqueue(Lit l, std::uint32_t reason) {
  assigns_[l.var()] = l.negative() ? -1 : 1;
  level_[l.var()] = decision_level();
  reason_[l.var()] = reason;
  trail_.push_back(l);
}

void SatSolver::add_clause(Clause clause) {
  if (!ok_) return;
  backtrack(0);
  if (!canonicalize_clause(clause)) return;
  Clause kept;
  for (Lit l : clause) {
    int v = value(l);
    if (v > 0) return;
    if (v == 0) kept.push_back(l);
  }
  if (kept.empty()) {
    ok_ = false;
    return;
  }
  if (kept.size() == 1) {
    enqueue(kept[0], kNoReason);
    if (propagate() != kNoReason) ok_ = false;
    return;
  }
  clauses_.push_back(std::move(kept));
  attach(static_cast<std::uint32_t>(clauses_.size() - 1));
}

std::uint32_t SatSolver::propagate() {
  while (qhead_ < trail_.size()) {
    Lit p = trail_[qhead_++];
    ++stats_.propagations;
    auto& ws = watches_[p.code()];
    std::size_t i = 0, j = 0;
    const Lit false_lit = ~p;
    while (i < ws.size()) {
      Watcher w = ws[i];
      if (value(w.blocker) > 0) {
        ws[j++] = ws[i++];
        continue;
      }
      Clause& c = clauses_[w.cref];
      if (c[0] == false_lit) std::swap(c[0], c[1]);
      ++i;
      Lit first = c[0];
      if (first != w.blocker && value(first) > 0) {
        ws[j++] = {w.cref, first};
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < c.size(); ++k) {
        if (value(c[k]) >= 0) {
          std::swap(c[1], c[k]);
          watches_[(~c[1]).code()].push_back({w.cref, first});
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[j++] = {w.cref, first};
      if (value(first) < 0) {
        while (i < ws.size()) ws[j++] = ws[i++];
        ws.resize(j);
        qhead_ = trail_.size();
        return w.cref;
      }
      enqueue(first, w.cref);
    }
    ws.resize(j);
  }
  return kNoReason;
}

void SatSolver::bump(int var) {
  activity_[var] += var_inc_;
  if (activity_[var] > 1e100) {
    for (auto& a : activity_) a *= 1e-100;
    var_inc_ *= 1e-100;
  }
  if (heap_pos_[var] >= 0) heap_up(static_cast<std::size_t>(heap_pos_[var]));
}

void SatSolver::analyze(std::uint32_t conflict, Clause& learnt, int& backtrack_level) {
  learnt.assign(1, Lit());
  int pending = 0;
  Lit p;
  bool have_p = false;
  std::size_t index = trail_.size();
  std::uint32_t cref = conflict;
  do {
    const Clause& c = clauses_[cref];
    for (std::size_t k = have_p ? 1 : 0; k < c.size(); ++k) {
      Lit q = c[k];
      int v = q.var();
      if (seen_[v] || level_[v] == 0) continue;
      seen_[v] = 1;
      bump(v);
      if (level_[v] >= decision_level())
        ++pending;
      else
        learnt.push_back(q);
    }
    while (!seen_[trail_[--index].var()]) {
    }
    p = trail_[index];
    have_p = true;
    cref = reason_[p.var()];
    seen_[p.var()] = 0;
    --pending;
    // Reason clauses keep the implied literal at position 0.
    if (pending > 0 && clauses_[cref][0] != p) {
      auto& rc = clauses_[cref];
      auto it = std::find(rc.begin(), rc.end(), p);
      std::swap(*rc.begin(), *it);
    }
  } while (pending > 0);
  learnt[0] = ~p;

  for (std::size_t k = 1; k < learnt.size(); ++k) seen_[learnt[k].var()] = 0;

  backtrack_level = 0;
  if (learnt.size() > 1) {
    std::size_t max_i = 1;
    for (std::size_t k = 2; k < learnt.size(); ++k)
      if (level_[learnt[k].var()] > level_[learnt[max_i].var()]) max_i = k;
    std::swap(learnt[1], learnt[max_i]);
    backtrack_level = level_[learnt[1].var()];
  }
}

void SatSolver::backtrack(int level) {
  if (decision_level() <= level) return;
  for (std::size_t i = trail_.size(); i-- > trail_lim_[level];) {
    int v = trail_[i].var();
    assigns_[v] = 0;
    reason_[v] = kNoReason;
    heap_insert(v);
  }
  trail_.resize(trail_lim_[level]);
  trail_lim_.resize(level);
  qhead_ = trail_.size();
}

int SatSolver::pick_branch_var() {
  while (!heap_.empty()) {
    int v = heap_pop();
    if (assigns_[v] == 0) return v;
  }
  return -1;
}

void SatSolver::heap_insert(int var) {
  if (heap_pos_[var] >= 0) return;
  heap_pos_[var] = static_cast<int>(heap_.size());
  heap_.push_back(var);
  heap_up(heap_.size() - 1);
}

void SatSolver::heap_up(std::size_t i) {
  int v = heap_[i];
  while (i > 0) {
    std::size_t parent = (i - 1) / 2;
    if (!heap_less(v, heap_[parent])) break;
    heap_[i] = heap_[parent];
    heap_pos_[heap_[i]] = static_cast<int>(i);
    i = parent;
  }
  heap_[i] = v;
  heap_pos_[v] = static_cast<int>(i);
}

void SatSolver::heap_down(std::size_t i) {
  int v = heap_[i];
  while (true) {
    std::size_t child = 2 * i + 1;
    if (child >= heap_.size()) break;
    if (child + 1 < heap_.size() && heap_less(heap_[child + 1], heap_[child])) ++child;
    if (!heap_less(heap_[child], v)) break;
    heap_[i] = heap_[child];
    heap_pos_[heap_[i]] = static_cast<int>(i);
    i = child;
  }
  heap_[i] = v;
  heap_pos_[v] = static_cast<int>(i);
}

int SatSolver::heap_pop() {
  int top = heap_[0];
  heap_pos_[top] = -1;
  int last = heap_.back();
  heap_.pop_back();
  if (!heap_.empty()) {
    heap_[0] = last;
    heap_pos_[last] = 0;
    heap_down(0);
  }
  return top;
}

SatResult SatSolver::solve(const Deadline& deadline) {
  SatResult result;
  const SatStats start = stats_;
  auto finish = [&](SatOutcome outcome) {
    result.outcome = outcome;
    result.stats.decisions = stats_.decisions - start.decisions;
    result.stats.conflicts = stats_.conflicts - start.conflicts;
    result.stats.propagations = stats_.propagations - start.propagations;
    return result;
  };
  if (!ok_) return finish(SatOutcome::Unsat);
  backtrack(0);
  if (propagate() != kNoReason) {
    ok_ = false;
    return finish(SatOutcome::Unsat);
  }

  std::uint64_t next_check = stats_.propagations + 1024;
  std::uint64_t conflicts_since_restart = 0;
  int restart_index = 0;
  auto restart_limit = [&] {
    return static_cast<std::uint64_t>(luby(2, restart_index) * options_.luby_unit);
  };
  std::uint64_t limit = restart_limit();
  Clause learnt;

  while (true) {
    std::uint32_t conflict = propagate();
    if (stats_.propagations >= next_check) {
      next_check = stats_.propagations + 1024;
      if (deadline.expired()) {
        backtrack(0);
        return finish(SatOutcome::Cancelled);
      }
    }
    if (conflict != kNoReason) {
      ++stats_.conflicts;
      ++conflicts_since_restart;
      if (decision_level() == 0) {
        ok_ = false;
        return finish(SatOutcome::Unsat);
      }
      int bt = 0;
      analyze(conflict, learnt, bt);
      backtrack(bt);
      if (learnt.size() == 1) {
        enqueue(learnt[0], kNoReason);
      } else {
        clauses_.push_back(learnt);
        auto cref = static_cast<std::uint32_t>(clauses_.size() - 1);
        attach(cref);
        enqueue(learnt[0], cref);
      }
      var_inc_ /= options_.activity_decay;
      continue;
    }
    if (options_.restarts == RestartPolicy::Luby && conflicts_since_restart >= limit) {
      backtrack(0);
      conflicts_since_restart = 0;
      limit = restart_limit();
      ++restart_index;
      continue;
    }
    if ((stats_.decisions & 1023u) == 1023u && deadline.expired()) {
      backtrack(0);
      return finish(SatOutcome::Cancelled);
    }
    int next = pick_branch_var();
    if (next < 0) {
      result.model.resize(assigns_.size());
      for (std::size_t v = 0; v < assigns_.size(); ++v) result.model[v] = assigns_[v] > 0;
      return finish(SatOutcome::Sat);
    }
    ++stats_.decisions;
    trail_lim_.push_back(trail_.size());
    enqueue(Lit::neg(next), kNoReason);
  }
}

}  // namespace symsmt
