#pragma once

#include <cstddef>
#include <cstdint>

#include "sccpref/framework.hpp"

namespace sccpref {

struct GenParams {
  std::size_t scc_count = 1;
  std::size_t min_args = 1;  // per component, inclusive
  std::size_t max_args = 1;
  double p_intra = 0.0;  // each extra ordered pair inside a component
  double p_inter = 0.0;  // each ordered pair from an earlier to a later component
  std::uint64_t seed = 0;
  bool singleton_self_attack = false;

  friend bool operator==(const GenParams&, const GenParams&) = default;
};

// Throws ParameterError unless scc_count >= 1, 1 <= min_args <= max_args and
// both probabilities lie in [0, 1].
void validate(const GenParams& params);

// Random framework with exactly params.scc_count strongly connected
// components. Each component gets a uniform size in [min_args, max_args];
// its arguments form a directed cycle, plus every other ordered pair of
// distinct members becomes an attack with probability p_intra. Components are
// put in a uniformly random order and each argument pair (a, b) with a in an
// earlier component than b becomes an attack with probability p_inter.
// Single-argument components attack themselves only if singleton_self_attack.
// Arguments are named a0, a1, ... in component order. Deterministic in the
// seed; no random draws are spent on probabilities of exactly 0.
ArgumentationFramework generate(const GenParams& params);

}  // namespace sccpref
