#include <algorithm>

#include "sccpref/sat.hpp"

namespace sccpref {

Var DpllSolver::new_var() {
  const Var v = static_cast<Var>(value_.size());
  ensure_var(v);
  return v;
}

void DpllSolver::ensure_var(Var v) {
  if (v < value_.size()) return;
  value_.resize(v + 1, kUnassigned);
  phase_.resize(v + 1, false);
  watches_.resize(2 * (static_cast<std::size_t>(v) + 1));
}

void DpllSolver::add_clause(std::span<const Lit> input) {
  std::vector<Lit> clause(input.begin(), input.end());
  std::sort(clause.begin(), clause.end());
  clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
  for (std::size_t i = 1; i < clause.size(); ++i) {
    if (clause[i] == ~clause[i - 1]) return;  // tautology
  }
  for (Lit l : clause) ensure_var(l.var());

  if (clause.empty()) {
    inconsistent_ = true;
  } else if (clause.size() == 1) {
    units_.push_back(clause[0]);
  } else {
    const auto id = static_cast<std::uint32_t>(clauses_.size());
    watches_[clause[0].code()].push_back(id);
    watches_[clause[1].code()].push_back(id);
    clauses_.push_back(std::move(clause));
  }
}

void DpllSolver::set_decision_order(std::span<const Var> order) {
  preferred_order_.assign(order.begin(), order.end());
}

void DpllSolver::set_phase(Var v, bool value) {
  ensure_var(v);
  phase_[v] = value;
}

void DpllSolver::assign(Lit l) {
  value_[l.var()] = l.negated() ? 0 : 1;
  trail_.push_back(l);
}

void DpllSolver::undo_to(std::size_t trail_pos) {
  for (std::size_t i = trail_pos; i < trail_.size(); ++i) value_[trail_[i].var()] = kUnassigned;
  trail_.resize(trail_pos);
  qhead_ = std::min(qhead_, trail_pos);
}

bool DpllSolver::propagate() {
  while (qhead_ < trail_.size()) {
    const Lit falsified = ~trail_[qhead_++];
    auto& ws = watches_[falsified.code()];
    std::size_t keep = 0;
    for (std::size_t i = 0; i < ws.size(); ++i) {
      const std::uint32_t cid = ws[i];
      auto& c = clauses_[cid];
      if (c[0] == falsified) std::swap(c[0], c[1]);
      if (value(c[0]) == 1) {
        ws[keep++] = cid;
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < c.size(); ++k) {
        if (value(c[k]) != 0) {
          std::swap(c[1], c[k]);
          watches_[c[1].code()].push_back(cid);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[keep++] = cid;
      if (value(c[0]) == 0) {
        for (++i; i < ws.size(); ++i) ws[keep++] = ws[i];
        ws.resize(keep);
        return false;
      }
      assign(c[0]);
    }
    ws.resize(keep);
  }
  return true;
}

SolveResult DpllSolver::solve(std::span<const Lit> assumptions) {
  for (Lit a : assumptions) ensure_var(a.var());
  model_.clear();
  undo_to(0);
  decisions_.clear();
  if (inconsistent_) return SolveResult::Unsat;

  for (Lit u : units_) {
    const auto v = value(u);
    if (v == 0) {
      inconsistent_ = true;
      return SolveResult::Unsat;
    }
    if (v == kUnassigned) assign(u);
  }
  if (!propagate()) {
    inconsistent_ = true;
    return SolveResult::Unsat;
  }

  std::vector<Var> order;
  order.reserve(value_.size());
  std::vector<bool> listed(value_.size(), false);
  for (Var v : preferred_order_) {
    if (v < value_.size() && !listed[v]) {
      listed[v] = true;
      order.push_back(v);
    }
  }
  for (Var v = 0; v < value_.size(); ++v) {
    if (!listed[v]) order.push_back(v);
  }

  std::size_t next_assumption = 0;
  std::size_t cursor = 0;
  std::uint64_t steps = 0;
  for (;;) {
    if (terminate_ && (++steps & 1023U) == 0 && terminate_()) return SolveResult::Interrupted;

    Lit decision;
    bool is_assumption = false;
    // Assumptions are decided first, so a falsified one is implied false by
    // the earlier assumptions alone.
    while (next_assumption < assumptions.size()) {
      const Lit a = assumptions[next_assumption++];
      const auto v = value(a);
      if (v == 1) continue;
      if (v == 0) return SolveResult::Unsat;
      decision = a;
      is_assumption = true;
      break;
    }
    if (!is_assumption) {
      while (cursor < order.size() && value_[order[cursor]] != kUnassigned) ++cursor;
      if (cursor == order.size()) {
        model_.resize(value_.size());
        for (std::size_t v = 0; v < value_.size(); ++v) model_[v] = value_[v] == 1;
        return SolveResult::Sat;
      }
      const Var x = order[cursor];
      decision = phase_[x] ? Lit::pos(x) : Lit::neg(x);
    }

    decisions_.push_back({trail_.size(), decision, cursor, false, is_assumption});
    ++decision_count_;
    assign(decision);

    while (!propagate()) {
      bool resumed = false;
      while (!decisions_.empty()) {
        const Decision d = decisions_.back();
        decisions_.pop_back();
        undo_to(d.trail_pos);
        if (d.assumption) return SolveResult::Unsat;
        if (!d.flipped) {
          decisions_.push_back({trail_.size(), ~d.lit, d.order_pos, true, false});
          cursor = d.order_pos;
          assign(~d.lit);
          resumed = true;
          break;
        }
      }
      if (!resumed) return SolveResult::Unsat;
    }
  }
}

}  // namespace sccpref
