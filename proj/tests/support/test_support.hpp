#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sccpref/argument_set.hpp"
#include "sccpref/framework.hpp"
#include "sccpref/labelling.hpp"

namespace sccpref::testing {

using NameSet = std::set<std::string>;
using Edge = std::pair<std::string, std::string>;

inline ArgumentationFramework make_af(const std::vector<std::string>& args, const std::vector<Edge>& attacks) {
  return ArgumentationFramework::from_names(args, attacks);
}

inline ArgumentSet ids(const ArgumentationFramework& af, const std::vector<std::string>& names) {
  std::vector<ArgId> out;
  for (const auto& n : names) out.push_back(af.id(n));
  return ArgumentSet(std::move(out));
}

inline NameSet names(const ArgumentationFramework& af, const ArgumentSet& s) {
  NameSet out;
  for (ArgId id : s) out.insert(af.name(id));
  return out;
}

inline std::set<NameSet> name_sets(const ArgumentationFramework& af, const std::vector<ArgumentSet>& sets) {
  std::set<NameSet> out;
  for (const auto& s : sets) out.insert(names(af, s));
  return out;
}

inline std::set<NameSet> in_name_sets(const ArgumentationFramework& af, const LabellingSet& result) {
  return name_sets(af, result.in_sets());
}

inline Labelling labelling(const ArgumentationFramework& af, const std::vector<std::pair<std::string, Label>>& items) {
  std::vector<LabelEntry> entries;
  for (const auto& [n, l] : items) entries.push_back({af.id(n), l});
  return Labelling(std::move(entries));
}

// Small random frameworks for oracle fuzzing: mixed densities, optional
// self-attacks, and arguments split into up to three mostly disconnected
// groups. Independent of the corpus generator.
struct SmallAfGenerator {
  explicit SmallAfGenerator(std::uint64_t seed) : rng(seed) {}

  std::size_t below(std::size_t bound) { return static_cast<std::size_t>(rng() % bound); }
  bool chance(double p) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; }

  ArgumentationFramework next(std::size_t max_args = 12) {
    static constexpr double kDensities[] = {0.05, 0.1, 0.2, 0.3, 0.45, 0.6};
    const std::size_t n = below(max_args + 1);
    const double density = kDensities[below(std::size(kDensities))];
    const double self_attack = chance(0.5) ? 0.0 : 0.15;
    const std::size_t groups = 1 + below(3);
    std::vector<std::size_t> group(n);
    for (auto& g : group) g = below(groups);

    std::vector<std::string> args;
    for (std::size_t i = 0; i < n; ++i) args.push_back("x" + std::to_string(i));
    std::vector<Edge> attacks;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) {
          if (chance(self_attack)) attacks.emplace_back(args[i], args[j]);
        } else if (group[i] == group[j] ? chance(density) : chance(density / 10)) {
          attacks.emplace_back(args[i], args[j]);
        }
      }
    }
    return ArgumentationFramework::from_names(args, attacks);
  }

  // Random subset of the framework's arguments.
  ArgumentSet subset(const ArgumentationFramework& af, double keep = 0.6) {
    std::vector<ArgId> out;
    for (ArgId id : af.arguments()) {
      if (chance(keep)) out.push_back(id);
    }
    return ArgumentSet(std::move(out));
  }

  std::mt19937_64 rng;
};

}  // namespace sccpref::testing
