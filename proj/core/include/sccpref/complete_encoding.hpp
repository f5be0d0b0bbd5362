#pragma once

#include <iosfwd>
#include <vector>

#include "sccpref/argument_set.hpp"
#include "sccpref/framework.hpp"
#include "sccpref/labelling.hpp"
#include "sccpref/sat.hpp"

namespace sccpref {

struct ArgumentVars {
  Var in;
  Var out;
  Var undec;
};

// CNF whose models are exactly the complete labellings of a framework in a
// context C. Per argument a with attackers B:
//   exactly one of in(a), out(a), undec(a)
//   in(a)  <-> a in C and out(b) for all b in B
//   out(a) <-> in(b) for some b in B
class CompleteInCEncoding {
 public:
  CompleteInCEncoding(const ArgumentationFramework& af, const ArgumentSet& context);

  const ArgumentSet& context() const noexcept { return context_; }
  std::size_t num_vars() const noexcept { return 3 * ids_.size(); }
  const std::vector<std::vector<Lit>>& clauses() const noexcept { return clauses_; }
  // Variables of the argument at framework position `pos`.
  const ArgumentVars& vars_at(std::size_t pos) const { return vars_[pos]; }
  std::size_t argument_count() const noexcept { return ids_.size(); }

  // in/out/undec variables of all arguments, arguments by descending
  // in-degree (ties by position).
  const std::vector<Var>& branching_order() const noexcept { return order_; }

  // Adds every variable and clause, plus decision order and phase hints.
  void load_into(ConstraintOracle& oracle) const;

  // Reads the labelling off the oracle's last model.
  Labelling decode(const ConstraintOracle& oracle) const;

  // "p cnf V C" header followed by one zero-terminated clause per line.
  void write_dimacs(std::ostream& os) const;

 private:
  ArgumentSet context_;
  std::vector<ArgId> ids_;
  std::vector<ArgumentVars> vars_;
  std::vector<std::vector<Lit>> clauses_;
  std::vector<Var> order_;
};

CompleteInCEncoding encode_complete_in(const ArgumentationFramework& af, const ArgumentSet& c);

}  // namespace sccpref
