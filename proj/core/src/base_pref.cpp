#include "sccpref/base_pref.hpp"

#include <memory>
#include <string>

#include "sccpref/complete_encoding.hpp"
#include "sccpref/errors.hpp"

namespace sccpref {

namespace {

std::string describe(const ArgumentationFramework& af, const ArgumentSet& c) {
  std::string s = "b_pref on " + std::to_string(af.size()) + " arguments / " + std::to_string(af.attack_count()) +
                  " attacks, context {";
  bool first = true;
  for (ArgId id : c) {
    if (!first) s += ',';
    s += af.name(id);
    first = false;
  }
  return s + "}";
}

}  // namespace

LabellingSet b_pref(const ArgumentationFramework& af, const ArgumentSet& c, const BasePrefOptions& options) {
  const CompleteInCEncoding encoding(af, c);
  std::unique_ptr<ConstraintOracle> oracle =
      options.oracle_factory ? options.oracle_factory() : std::make_unique<DpllSolver>();
  if (!oracle) throw InternalError("oracle factory returned null");
  encoding.load_into(*oracle);
  if (options.cancel) {
    const CancellationToken* token = options.cancel;
    oracle->set_terminate([token] { return token->expired(); });
  }

  auto interrupted = [&] {
    if (options.cancel && options.cancel->expired()) throw TimeoutError();
    throw InternalError("constraint oracle interrupted: " + describe(af, c));
  };

  const std::size_t n = af.size();
  std::vector<Labelling> found;
  std::vector<bool> current(n);
  std::vector<Lit> clause;
  std::vector<Lit> assumptions;

  for (;;) {
    if (options.cancel) options.cancel->throw_if_expired();
    SolveResult r = oracle->solve({});
    if (r == SolveResult::Unsat) break;
    if (r == SolveResult::Interrupted) interrupted();

    Labelling best = encoding.decode(*oracle);
    for (std::size_t p = 0; p < n; ++p) current[p] = oracle->model_value(encoding.vars_at(p).in);

    // Grow: keep the current in-set, require one more in argument.
    for (;;) {
      const Var act = oracle->new_var();
      clause.assign(1, Lit::neg(act));
      assumptions.assign(1, Lit::pos(act));
      for (std::size_t p = 0; p < n; ++p) {
        const Lit in = Lit::pos(encoding.vars_at(p).in);
        (current[p] ? assumptions : clause).push_back(in);
      }
      oracle->add_clause(std::span<const Lit>(clause));
      r = oracle->solve(assumptions);
      oracle->add_clause({Lit::neg(act)});
      if (r == SolveResult::Unsat) break;
      if (r == SolveResult::Interrupted) interrupted();
      best = encoding.decode(*oracle);
      for (std::size_t p = 0; p < n; ++p) current[p] = oracle->model_value(encoding.vars_at(p).in);
    }
    found.push_back(std::move(best));

    // Block every model whose in-set is a subset of the maximal one.
    clause.clear();
    for (std::size_t p = 0; p < n; ++p) {
      if (!current[p]) clause.push_back(Lit::pos(encoding.vars_at(p).in));
    }
    oracle->add_clause(std::span<const Lit>(clause));
  }

  if (found.empty()) throw InternalError("no complete labelling found: " + describe(af, c));
  return LabellingSet(std::move(found));
}

}  // namespace sccpref
