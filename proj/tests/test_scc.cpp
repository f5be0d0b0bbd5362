#include <gtest/gtest.h>

#include <algorithm>

#include "sccpref/errors.hpp"
#include "sccpref/scc.hpp"
#include "test_support.hpp"

namespace sccpref {
namespace {

using testing::ids;
using testing::make_af;
using testing::name_sets;
using testing::NameSet;
using Sets = std::set<NameSet>;

Sets level_names(const ArgumentationFramework& af, const SccPartition& p, const std::vector<std::size_t>& level) {
  std::vector<ArgumentSet> comps;
  for (auto i : level) comps.push_back(p[i]);
  return name_sets(af, comps);
}

TEST(Scc, MutualPairsChainedOnce) {
  auto af = make_af({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "a"}, {"a", "c"}, {"c", "d"}, {"d", "c"}});
  auto p = compute_sccs(af);
  EXPECT_EQ(name_sets(af, p.components()), (Sets{{"a", "b"}, {"c", "d"}}));
  auto levels = build_level_list(af, p);
  ASSERT_EQ(levels.size(), 2u);
  EXPECT_EQ(level_names(af, p, levels.levels[0]), (Sets{{"a", "b"}}));
  EXPECT_EQ(level_names(af, p, levels.levels[1]), (Sets{{"c", "d"}}));
}

TEST(Scc, ChainGivesOneLevelPerArgument) {
  auto af = make_af({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  auto p = compute_sccs(af);
  EXPECT_EQ(name_sets(af, p.components()), (Sets{{"a"}, {"b"}, {"c"}}));
  auto levels = build_level_list(af, p);
  ASSERT_EQ(levels.size(), 3u);
  EXPECT_EQ(level_names(af, p, levels.levels[2]), (Sets{{"c"}}));
}

TEST(Scc, IsolatedArgumentsShareLevelOne) {
  auto af = make_af({"a", "b"}, {});
  auto p = compute_sccs(af);
  EXPECT_EQ(p.size(), 2u);
  auto levels = build_level_list(af, p);
  ASSERT_EQ(levels.size(), 1u);
  EXPECT_EQ(levels.levels[0].size(), 2u);
}

TEST(Scc, ThreeIsolatedAndThreeCycle) {
  auto isolated = make_af({"a", "b", "c"}, {});
  EXPECT_EQ(name_sets(isolated, compute_sccs(isolated).components()), (Sets{{"a"}, {"b"}, {"c"}}));
  auto cycle = make_af({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  EXPECT_EQ(name_sets(cycle, compute_sccs(cycle).components()), (Sets{{"a", "b", "c"}}));
}

TEST(Scc, DiamondCondensation) {
  // s1 -> s2, s1 -> s3, s2 -> s4, s3 -> s4 with two-argument components.
  auto af = make_af({"a1", "b1", "a2", "b2", "a3", "b3", "a4", "b4"},
                    {{"a1", "b1"}, {"b1", "a1"}, {"a2", "b2"}, {"b2", "a2"}, {"a3", "b3"}, {"b3", "a3"},
                     {"a4", "b4"}, {"b4", "a4"}, {"a1", "a2"}, {"b1", "a3"}, {"a2", "a4"}, {"a3", "b4"}});
  auto p = compute_sccs(af);
  auto levels = build_level_list(af, p);
  ASSERT_EQ(levels.size(), 3u);
  EXPECT_EQ(level_names(af, p, levels.levels[0]), (Sets{{"a1", "b1"}}));
  EXPECT_EQ(level_names(af, p, levels.levels[1]), (Sets{{"a2", "b2"}, {"a3", "b3"}}));
  EXPECT_EQ(level_names(af, p, levels.levels[2]), (Sets{{"a4", "b4"}}));
}

TEST(Scc, SelfAttackIsItsOwnComponent) {
  auto af = make_af({"a", "b"}, {{"a", "a"}, {"a", "b"}});
  auto p = compute_sccs(af);
  EXPECT_EQ(name_sets(af, p.components()), (Sets{{"a"}, {"b"}}));
  EXPECT_EQ(p.component_of(af, af.id("a")), 0u);
}

TEST(Scc, EmptyFramework) {
  ArgumentationFramework af;
  auto p = compute_sccs(af);
  EXPECT_EQ(p.size(), 0u);
  EXPECT_EQ(build_level_list(af, p).size(), 0u);
}

TEST(Scc, LongestPathPlacesDiamondTipLast) {
  // a -> b -> c and a -> c: c must sit after b, not beside it.
  auto af = make_af({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  auto p = compute_sccs(af);
  auto levels = build_level_list(af, p);
  ASSERT_EQ(levels.size(), 3u);
}

TEST(Scc, LongChainDoesNotOverflowTheStack) {
  std::vector<std::string> args;
  std::vector<testing::Edge> attacks;
  const int n = 200000;
  for (int i = 0; i < n; ++i) args.push_back("n" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) attacks.emplace_back(args[i + 1], args[i]);
  attacks.emplace_back(args[0], args[n - 1]);
  auto af = make_af(args, attacks);
  EXPECT_EQ(compute_sccs(af).size(), 1u);
}

TEST(Scc, WrongPartitionIsRejected) {
  auto af = make_af({"a", "b"}, {{"a", "b"}, {"b", "a"}});
  SccPartition bogus({ids(af, {"a"}), ids(af, {"b"})}, {0, 1});
  EXPECT_THROW(build_level_list(af, bogus), InternalError);
}

bool reaches(const ArgumentationFramework& af, std::size_t from, std::size_t to) {
  std::vector<bool> seen(af.size());
  std::vector<std::size_t> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    if (v == to) return true;
    for (auto w : af.targets_at(v)) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return false;
}

TEST(SccProperties, ComponentsAreMutualReachabilityClasses) {
  testing::SmallAfGenerator gen(31);
  for (int round = 0; round < 300; ++round) {
    auto af = gen.next(12);
    auto p = compute_sccs(af);
    for (std::size_t x = 0; x < af.size(); ++x) {
      for (std::size_t y = 0; y < af.size(); ++y) {
        bool mutual = reaches(af, x, y) && reaches(af, y, x);
        EXPECT_EQ(mutual, p.component_at(x) == p.component_at(y));
      }
    }
    std::size_t total = 0;
    for (const auto& c : p.components()) total += c.size();
    EXPECT_EQ(total, af.size());
  }
}

TEST(SccProperties, LevelsRespectAttacksAndAreTight) {
  testing::SmallAfGenerator gen(32);
  for (int round = 0; round < 300; ++round) {
    auto af = gen.next(12);
    auto p = compute_sccs(af);
    auto levels = build_level_list(af, p);
    std::vector<std::size_t> level_of(p.size(), 99);
    std::size_t listed = 0;
    for (std::size_t l = 0; l < levels.size(); ++l) {
      EXPECT_FALSE(levels.levels[l].empty());
      for (auto s : levels.levels[l]) {
        level_of[s] = l;
        ++listed;
      }
    }
    ASSERT_EQ(listed, p.size());
    std::vector<bool> has_lower_attacker(p.size(), false);
    std::vector<std::size_t> deepest(p.size(), 0);
    for (std::size_t x = 0; x < af.size(); ++x) {
      for (auto y : af.targets_at(x)) {
        auto cx = p.component_at(x);
        auto cy = p.component_at(y);
        if (cx == cy) continue;
        EXPECT_LT(level_of[cx], level_of[cy]);
        if (!has_lower_attacker[cy] || level_of[cx] > deepest[cy]) deepest[cy] = level_of[cx];
        has_lower_attacker[cy] = true;
      }
    }
    for (std::size_t s = 0; s < p.size(); ++s) {
      EXPECT_EQ(level_of[s], has_lower_attacker[s] ? deepest[s] + 1 : 0u);
    }
  }
}

}  // namespace
}  // namespace sccpref
