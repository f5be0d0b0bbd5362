#pragma once

#include <cstddef>
#include <vector>

#include "sccpref/argument_set.hpp"
#include "sccpref/framework.hpp"

namespace sccpref {

// Brute-force reference semantics for small frameworks. Only the af-core
// predicates are used here, never the engine, so these results can serve as
// ground truth for everything else.

enum class Semantics { Complete, Grounded, Preferred };

struct OracleResult {
  Semantics semantics;
  ArgumentSet context;
  std::vector<ArgumentSet> extensions;  // sorted
};

inline constexpr std::size_t kDefaultOracleBound = 16;

// All subsets E of c that are admissible and contain every member of c
// acceptable w.r.t. E. Throws OracleBoundError above `bound` arguments.
OracleResult oracle_complete_in(const ArgumentationFramework& af, const ArgumentSet& c,
                                std::size_t bound = kDefaultOracleBound);
OracleResult oracle_grounded_in(const ArgumentationFramework& af, const ArgumentSet& c,
                                std::size_t bound = kDefaultOracleBound);
OracleResult oracle_preferred_in(const ArgumentationFramework& af, const ArgumentSet& c,
                                 std::size_t bound = kDefaultOracleBound);

}  // namespace sccpref
