#include "sccpref/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "sccpref/errors.hpp"

namespace sccpref {

namespace {

std::vector<ArgumentSet> complete_sets(const ArgumentationFramework& af, const ArgumentSet& c,
                                       std::size_t bound) {
  if (af.size() > bound) {
    throw OracleBoundError("oracle refuses frameworks with " + std::to_string(af.size()) +
                           " arguments (bound " + std::to_string(bound) + ")");
  }
  for (ArgId id : c) {
    if (!af.contains(id)) throw DomainError("context argument " + std::to_string(id) + " not in framework");
  }
  const auto members = c.ids();
  const std::uint64_t total = std::uint64_t{1} << members.size();
  std::vector<ArgumentSet> found;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<ArgId> chosen;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (mask & (std::uint64_t{1} << i)) chosen.push_back(members[i]);
    }
    ArgumentSet e = ArgumentSet::from_sorted(std::move(chosen));
    if (!is_admissible(af, e)) continue;
    bool closed = true;
    for (ArgId a : c) {
      if (!e.contains(a) && is_acceptable(af, a, e)) {
        closed = false;
        break;
      }
    }
    if (closed) found.push_back(std::move(e));
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace

OracleResult oracle_complete_in(const ArgumentationFramework& af, const ArgumentSet& c, std::size_t bound) {
  return {Semantics::Complete, c, complete_sets(af, c, bound)};
}

OracleResult oracle_grounded_in(const ArgumentationFramework& af, const ArgumentSet& c, std::size_t bound) {
  auto all = complete_sets(af, c, bound);
  std::vector<ArgumentSet> least;
  for (const auto& e : all) {
    bool minimal = std::all_of(all.begin(), all.end(), [&](const ArgumentSet& o) { return is_subset(e, o); });
    if (minimal) least.push_back(e);
  }
  if (least.size() != 1) throw InternalError("grounded extension in C is not unique");
  return {Semantics::Grounded, c, std::move(least)};
}

OracleResult oracle_preferred_in(const ArgumentationFramework& af, const ArgumentSet& c, std::size_t bound) {
  auto all = complete_sets(af, c, bound);
  std::vector<ArgumentSet> maximal;
  for (const auto& e : all) {
    bool dominated = std::any_of(all.begin(), all.end(),
                                 [&](const ArgumentSet& o) { return o != e && is_subset(e, o); });
    if (!dominated) maximal.push_back(e);
  }
  return {Semantics::Preferred, c, std::move(maximal)};
}

}  // namespace sccpref
