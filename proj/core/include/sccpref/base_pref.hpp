#pragma once

#include "sccpref/argument_set.hpp"
#include "sccpref/cancellation.hpp"
#include "sccpref/framework.hpp"
#include "sccpref/labelling.hpp"
#include "sccpref/sat.hpp"

namespace sccpref {

struct BasePrefOptions {
  // Defaults to DpllSolver when empty.
  OracleFactory oracle_factory;
  const CancellationToken* cancel = nullptr;
};

// Preferred labellings of `af` in `c`, by maximal-model search over the
// complete-in-C encoding: find a model, grow its in-set until no strictly
// larger one exists, record it, block every model whose in-set is contained
// in it, repeat until unsatisfiable. Never returns an empty set.
LabellingSet b_pref(const ArgumentationFramework& af, const ArgumentSet& c, const BasePrefOptions& options = {});

}  // namespace sccpref
