#include "sccpref/complete_encoding.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <string>

#include "sccpref/errors.hpp"

namespace sccpref {

CompleteInCEncoding::CompleteInCEncoding(const ArgumentationFramework& af, const ArgumentSet& context)
    : context_(context) {
  for (ArgId id : context) {
    if (!af.contains(id)) throw DomainError("context argument " + std::to_string(id) + " not in framework");
  }
  const std::size_t n = af.size();
  ids_.assign(af.arguments().begin(), af.arguments().end());
  vars_.resize(n);
  for (std::size_t p = 0; p < n; ++p) {
    const auto base = static_cast<Var>(3 * p);
    vars_[p] = {base, base + 1, base + 2};
  }

  for (std::size_t p = 0; p < n; ++p) {
    const auto& v = vars_[p];
    const auto attackers = af.attackers_at(p);

    clauses_.push_back({Lit::pos(v.in), Lit::pos(v.out), Lit::pos(v.undec)});
    clauses_.push_back({Lit::neg(v.in), Lit::neg(v.out)});
    clauses_.push_back({Lit::neg(v.in), Lit::neg(v.undec)});
    clauses_.push_back({Lit::neg(v.out), Lit::neg(v.undec)});

    // in(a) -> out(b)
    for (auto b : attackers) clauses_.push_back({Lit::neg(v.in), Lit::pos(vars_[b].out)});
    if (context_.contains(ids_[p])) {
      // all attackers out -> in(a)
      std::vector<Lit> c{Lit::pos(v.in)};
      for (auto b : attackers) c.push_back(Lit::neg(vars_[b].out));
      clauses_.push_back(std::move(c));
    } else {
      clauses_.push_back({Lit::neg(v.in)});
    }
    // out(a) -> some attacker in
    std::vector<Lit> c{Lit::neg(v.out)};
    for (auto b : attackers) c.push_back(Lit::pos(vars_[b].in));
    clauses_.push_back(std::move(c));
    // in(b) -> out(a)
    for (auto b : attackers) clauses_.push_back({Lit::neg(vars_[b].in), Lit::pos(v.out)});
  }

  std::vector<std::size_t> positions(n);
  std::iota(positions.begin(), positions.end(), 0);
  std::stable_sort(positions.begin(), positions.end(), [&](std::size_t a, std::size_t b) {
    return af.attackers_at(a).size() > af.attackers_at(b).size();
  });
  order_.reserve(3 * n);
  for (auto p : positions) {
    order_.push_back(vars_[p].in);
    order_.push_back(vars_[p].out);
    order_.push_back(vars_[p].undec);
  }
}

void CompleteInCEncoding::load_into(ConstraintOracle& oracle) const {
  while (oracle.num_vars() < num_vars()) oracle.new_var();
  for (const auto& c : clauses_) oracle.add_clause(std::span<const Lit>(c));
  oracle.set_decision_order(order_);
  for (const auto& v : vars_) {
    oracle.set_phase(v.in, true);
    oracle.set_phase(v.out, true);
    oracle.set_phase(v.undec, false);
  }
}

Labelling CompleteInCEncoding::decode(const ConstraintOracle& oracle) const {
  std::vector<LabelEntry> entries;
  entries.reserve(ids_.size());
  for (std::size_t p = 0; p < ids_.size(); ++p) {
    Label l = oracle.model_value(vars_[p].in)    ? Label::In
              : oracle.model_value(vars_[p].out) ? Label::Out
                                                 : Label::Undec;
    entries.push_back({ids_[p], l});
  }
  return Labelling(std::move(entries));
}

void CompleteInCEncoding::write_dimacs(std::ostream& os) const {
  os << "p cnf " << num_vars() << ' ' << clauses_.size() << '\n';
  for (const auto& c : clauses_) {
    for (Lit l : c) os << l.dimacs() << ' ';
    os << "0\n";
  }
}

CompleteInCEncoding encode_complete_in(const ArgumentationFramework& af, const ArgumentSet& c) {
  return CompleteInCEncoding(af, c);
}

}  // namespace sccpref
