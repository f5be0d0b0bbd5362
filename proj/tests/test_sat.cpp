#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "sccpref/complete_encoding.hpp"
#include "sccpref/oracle.hpp"
#include "sccpref/sat.hpp"
#include "test_support.hpp"

namespace sccpref {
namespace {

using Clause = std::vector<Lit>;

bool satisfies(const std::vector<Clause>& cnf, std::uint32_t assignment) {
  for (const auto& clause : cnf) {
    bool sat = false;
    for (Lit l : clause) sat = sat || (((assignment >> l.var()) & 1U) != 0) != l.negated();
    if (!sat) return false;
  }
  return true;
}

bool brute_force_sat(const std::vector<Clause>& cnf, std::size_t vars, const std::vector<Lit>& assumptions) {
  for (std::uint32_t m = 0; m < (1U << vars); ++m) {
    bool ok = true;
    for (Lit a : assumptions) ok = ok && ((((m >> a.var()) & 1U) != 0) != a.negated());
    if (ok && satisfies(cnf, m)) return true;
  }
  return false;
}

TEST(Lit, Packing) {
  Lit p = Lit::pos(3);
  EXPECT_EQ(p.var(), 3u);
  EXPECT_FALSE(p.negated());
  EXPECT_TRUE((~p).negated());
  EXPECT_EQ(~~p, p);
  EXPECT_EQ(p.dimacs(), 4);
  EXPECT_EQ(Lit::neg(0).dimacs(), -1);
}

TEST(Dpll, TrivialCases) {
  DpllSolver s;
  EXPECT_EQ(s.solve({}), SolveResult::Sat);
  Var x = s.new_var();
  s.add_clause({Lit::pos(x)});
  ASSERT_EQ(s.solve({}), SolveResult::Sat);
  EXPECT_TRUE(s.model_value(x));
  Lit neg_x = Lit::neg(x);
  EXPECT_EQ(s.solve(std::span<const Lit>(&neg_x, 1)), SolveResult::Unsat);
  // Assumptions do not stick.
  EXPECT_EQ(s.solve({}), SolveResult::Sat);
  s.add_clause({Lit::neg(x)});
  EXPECT_EQ(s.solve({}), SolveResult::Unsat);
}

TEST(Dpll, EmptyClauseMakesItUnsat) {
  DpllSolver s;
  s.new_var();
  s.add_clause(std::span<const Lit>{});
  EXPECT_EQ(s.solve({}), SolveResult::Unsat);
}

TEST(Dpll, PigeonholeThreeIntoTwo) {
  DpllSolver s;
  auto v = [](int p, int h) { return Var(p * 2 + h); };
  for (int i = 0; i < 6; ++i) s.new_var();
  for (int p = 0; p < 3; ++p) s.add_clause({Lit::pos(v(p, 0)), Lit::pos(v(p, 1))});
  for (int h = 0; h < 2; ++h) {
    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 3; ++q) s.add_clause({Lit::neg(v(p, h)), Lit::neg(v(q, h))});
    }
  }
  EXPECT_EQ(s.solve({}), SolveResult::Unsat);
}

TEST(Dpll, TerminateCallbackInterrupts) {
  DpllSolver s;
  // Pigeonhole 8 into 7 is far beyond 1024 steps for plain DPLL.
  const int pigeons = 8, holes = 7;
  auto v = [&](int p, int h) { return Var(p * holes + h); };
  for (int i = 0; i < pigeons * holes; ++i) s.new_var();
  for (int p = 0; p < pigeons; ++p) {
    Clause c;
    for (int h = 0; h < holes; ++h) c.push_back(Lit::pos(v(p, h)));
    s.add_clause(c);
  }
  for (int h = 0; h < holes; ++h) {
    for (int p = 0; p < pigeons; ++p) {
      for (int q = p + 1; q < pigeons; ++q) s.add_clause({Lit::neg(v(p, h)), Lit::neg(v(q, h))});
    }
  }
  s.set_terminate([] { return true; });
  EXPECT_EQ(s.solve({}), SolveResult::Interrupted);
}

TEST(DpllProperties, AgreesWithTruthTables) {
  std::mt19937_64 rng(51);
  for (int round = 0; round < 400; ++round) {
    const std::size_t vars = 1 + rng() % 10;
    const std::size_t clauses = rng() % (4 * vars + 1);
    std::vector<Clause> cnf;
    DpllSolver s;
    for (std::size_t i = 0; i < vars; ++i) s.new_var();
    for (std::size_t i = 0; i < clauses; ++i) {
      Clause c;
      const std::size_t width = 1 + rng() % 3;
      for (std::size_t k = 0; k < width; ++k) {
        Var x = static_cast<Var>(rng() % vars);
        c.push_back(rng() % 2 ? Lit::pos(x) : Lit::neg(x));
      }
      cnf.push_back(c);
      s.add_clause(c);
    }
    for (int q = 0; q < 3; ++q) {
      std::vector<Lit> assumptions;
      for (std::size_t k = rng() % 3; k > 0; --k) {
        Var x = static_cast<Var>(rng() % vars);
        assumptions.push_back(rng() % 2 ? Lit::pos(x) : Lit::neg(x));
      }
      auto r = s.solve(assumptions);
      ASSERT_NE(r, SolveResult::Interrupted);
      EXPECT_EQ(r == SolveResult::Sat, brute_force_sat(cnf, vars, assumptions));
      if (r == SolveResult::Sat) {
        std::uint32_t m = 0;
        for (std::size_t x = 0; x < vars; ++x) m |= s.model_value(static_cast<Var>(x)) ? (1U << x) : 0U;
        EXPECT_TRUE(satisfies(cnf, m));
        for (Lit a : assumptions) EXPECT_NE(s.model_value(a.var()), a.negated());
      }
    }
  }
}

// Enumerates every model of the encoding by blocking, and compares the decoded
// in-sets with the brute-force complete extensions.
TEST(CompleteEncoding, ModelsAreCompleteExtensions) {
  testing::SmallAfGenerator gen(52);
  for (int round = 0; round < 120; ++round) {
    auto af = gen.next(8);
    auto c = round % 2 ? af.arguments() : gen.subset(af);
    auto enc = encode_complete_in(af, c);
    DpllSolver s;
    enc.load_into(s);
    std::set<ArgumentSet> found;
    while (s.solve({}) == SolveResult::Sat) {
      auto lab = enc.decode(s);
      EXPECT_EQ(lab, ext2lab(af, lab.in_set()));
      found.insert(lab.in_set());
      Clause block;
      for (std::size_t pos = 0; pos < enc.argument_count(); ++pos) {
        const auto& v = enc.vars_at(pos);
        Var which = s.model_value(v.in) ? v.in : s.model_value(v.out) ? v.out : v.undec;
        block.push_back(Lit::neg(which));
      }
      s.add_clause(block);
      ASSERT_LE(found.size(), 1U << af.size());
    }
    auto expected = oracle_complete_in(af, c).extensions;
    EXPECT_EQ(std::vector<ArgumentSet>(found.begin(), found.end()), expected);
  }
}

std::set<Labelling> all_models(const ArgumentationFramework& af, const ArgumentSet& c) {
  auto enc = encode_complete_in(af, c);
  DpllSolver s;
  enc.load_into(s);
  std::set<Labelling> out;
  while (s.solve({}) == SolveResult::Sat) {
    out.insert(enc.decode(s));
    Clause block;
    for (Var v = 0; v < enc.num_vars(); ++v) block.push_back(s.model_value(v) ? Lit::neg(v) : Lit::pos(v));
    s.add_clause(block);
  }
  return out;
}

TEST(CompleteEncoding, SmallModelSets) {
  auto single = testing::make_af({"a"}, {});
  EXPECT_EQ(all_models(single, single.arguments()), (std::set<Labelling>{Labelling({{0, Label::In}})}));
  EXPECT_EQ(all_models(single, {}), (std::set<Labelling>{Labelling({{0, Label::Undec}})}));

  auto two = testing::make_af({"a", "b"}, {{"a", "b"}, {"b", "a"}});
  EXPECT_EQ(all_models(two, two.arguments()),
            (std::set<Labelling>{testing::labelling(two, {{"a", Label::In}, {"b", Label::Out}}),
                                 testing::labelling(two, {{"a", Label::Out}, {"b", Label::In}}),
                                 Labelling::uniform(two.arguments(), Label::Undec)}));
}

TEST(CompleteEncoding, DimacsDump) {
  auto af = testing::make_af({"a", "b"}, {{"a", "b"}});
  auto enc = encode_complete_in(af, af.arguments());
  std::ostringstream os;
  enc.write_dimacs(os);
  std::istringstream is(os.str());
  std::string p, cnf;
  std::size_t vars = 0, clauses = 0;
  is >> p >> cnf >> vars >> clauses;
  EXPECT_EQ(p, "p");
  EXPECT_EQ(cnf, "cnf");
  EXPECT_EQ(vars, 6u);
  EXPECT_EQ(clauses, enc.clauses().size());
  std::size_t zeros = 0;
  long lit = 0;
  while (is >> lit) {
    if (lit == 0) ++zeros;
    EXPECT_LE(std::labs(lit), 6);
  }
  EXPECT_EQ(zeros, clauses);
}

TEST(CompleteEncoding, BranchingOrderPutsMostAttackedFirst) {
  auto af = testing::make_af({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}, {"a", "b"}});
  auto enc = encode_complete_in(af, af.arguments());
  ASSERT_EQ(enc.branching_order().size(), 9u);
  EXPECT_EQ(enc.branching_order()[0], enc.vars_at(af.position(af.id("c"))).in);
}

}  // namespace
}  // namespace sccpref
