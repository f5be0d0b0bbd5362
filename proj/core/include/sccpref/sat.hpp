#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace sccpref {

using Var = std::uint32_t;

// A propositional literal: variable plus sign, packed as 2*var + negated.
class Lit {
 public:
  constexpr Lit() = default;
  static constexpr Lit pos(Var v) { return Lit(v << 1); }
  static constexpr Lit neg(Var v) { return Lit((v << 1) | 1U); }

  constexpr Var var() const { return code_ >> 1; }
  constexpr bool negated() const { return (code_ & 1U) != 0; }
  constexpr std::uint32_t code() const { return code_; }
  constexpr Lit operator~() const { return Lit(code_ ^ 1U); }

  // DIMACS form: 1-based, negative when negated.
  constexpr long dimacs() const {
    return negated() ? -static_cast<long>(var() + 1) : static_cast<long>(var() + 1);
  }

  friend constexpr bool operator==(Lit, Lit) = default;
  friend constexpr auto operator<=>(Lit, Lit) = default;

 private:
  constexpr explicit Lit(std::uint32_t code) : code_(code) {}
  std::uint32_t code_ = 0;
};

enum class SolveResult { Sat, Unsat, Interrupted };

// Incremental satisfiability engine used by the base function. Clauses are
// permanent; temporary constraints go through assumptions.
class ConstraintOracle {
 public:
  virtual ~ConstraintOracle() = default;

  virtual Var new_var() = 0;
  virtual std::size_t num_vars() const = 0;
  virtual void add_clause(std::span<const Lit> clause) = 0;
  virtual SolveResult solve(std::span<const Lit> assumptions) = 0;
  // Value of `v` in the model found by the last Sat answer.
  virtual bool model_value(Var v) const = 0;

  // Search hints; engines are free to ignore them.
  virtual void set_decision_order(std::span<const Var> order) { (void)order; }
  virtual void set_phase(Var v, bool value) {
    (void)v;
    (void)value;
  }
  // Polled during search; returning true aborts with Interrupted.
  virtual void set_terminate(std::function<bool()> should_stop) { (void)should_stop; }

  void add_clause(std::initializer_list<Lit> clause) {
    add_clause(std::span<const Lit>(clause.begin(), clause.size()));
  }
};

using OracleFactory = std::function<std::unique_ptr<ConstraintOracle>()>;

// Backtracking search with unit propagation over two watched literals and
// chronological backtracking. No clause learning.
class DpllSolver final : public ConstraintOracle {
 public:
  DpllSolver() = default;

  Var new_var() override;
  std::size_t num_vars() const override { return value_.size(); }
  void add_clause(std::span<const Lit> clause) override;
  using ConstraintOracle::add_clause;
  SolveResult solve(std::span<const Lit> assumptions) override;
  bool model_value(Var v) const override { return model_.at(v); }

  void set_decision_order(std::span<const Var> order) override;
  void set_phase(Var v, bool value) override;
  void set_terminate(std::function<bool()> should_stop) override { terminate_ = std::move(should_stop); }

  std::uint64_t decisions() const noexcept { return decision_count_; }

 private:
  static constexpr std::int8_t kUnassigned = -1;

  struct Decision {
    std::size_t trail_pos;
    Lit lit;
    std::size_t order_pos;
    bool flipped;
    bool assumption;
  };

  // 1 true, 0 false, -1 unassigned
  std::int8_t value(Lit l) const {
    const std::int8_t v = value_[l.var()];
    return v == kUnassigned ? kUnassigned : static_cast<std::int8_t>(v ^ static_cast<std::int8_t>(l.negated()));
  }
  void assign(Lit l);
  bool propagate();  // false on conflict
  void undo_to(std::size_t trail_pos);
  void ensure_var(Var v);

  std::vector<std::vector<Lit>> clauses_;
  std::vector<std::vector<std::uint32_t>> watches_;
  std::vector<Lit> units_;
  bool inconsistent_ = false;

  std::vector<std::int8_t> value_;
  std::vector<Lit> trail_;
  std::size_t qhead_ = 0;
  std::vector<Decision> decisions_;

  std::vector<Var> preferred_order_;
  std::vector<bool> phase_;
  std::vector<bool> model_;
  std::function<bool()> terminate_;
  std::uint64_t decision_count_ = 0;
};

}  // namespace sccpref
