#pragma once

#include <cstddef>
#include <vector>

#include "sccpref/argument_set.hpp"
#include "sccpref/framework.hpp"

namespace sccpref {

// Strongly connected components of the attack graph, ordered by their
// smallest argument identifier.
class SccPartition {
 public:
  SccPartition() = default;
  SccPartition(std::vector<ArgumentSet> components, std::vector<std::size_t> component_at_position);

  const std::vector<ArgumentSet>& components() const noexcept { return components_; }
  std::size_t size() const noexcept { return components_.size(); }
  const ArgumentSet& operator[](std::size_t i) const { return components_[i]; }

  // Component index of the argument at framework position `pos`.
  std::size_t component_at(std::size_t pos) const { return component_at_[pos]; }
  std::size_t component_of(const ArgumentationFramework& af, ArgId id) const {
    return component_at_[af.position(id)];
  }

 private:
  std::vector<ArgumentSet> components_;
  std::vector<std::size_t> component_at_;
};

// Levels L1..Ln of component indices. Every attack between distinct
// components goes from a lower level to a strictly higher one.
struct LevelList {
  std::vector<std::vector<std::size_t>> levels;

  std::size_t size() const noexcept { return levels.size(); }
};

// Tarjan's algorithm with an explicit stack.
SccPartition compute_sccs(const ArgumentationFramework& af);

// Longest-path layering of the condensation: a component with no external
// attackers sits on level 1, every other one directly after its deepest
// attacking component.
LevelList build_level_list(const ArgumentationFramework& af, const SccPartition& partition);

}  // namespace sccpref
