#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "ballsat/csp_bridge.hpp"
#include "ballsat/double_ball.hpp"
#include "ballsat/generate.hpp"
#include "ballsat/oracles.hpp"

using namespace ballsat;

namespace {

using Tuples = std::vector<std::vector<CspValue>>;

// Full 3^k enumeration, lowest valuation first with variable 0 most significant.
std::optional<CspValuation> enumerate_csp(const CspInstance& inst) {
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < inst.var_count; ++i) total *= 3;
  for (std::uint64_t code = 0; code < total; ++code) {
    CspValuation val(inst.var_count);
    std::uint64_t rest = code;
    for (std::uint32_t i = inst.var_count; i-- > 0;) {
      val[i] = static_cast<CspValue>(1 + rest % 3);
      rest /= 3;
    }
    bool ok = true;
    for (const CspConstraint& c : inst.constraints) ok = ok && c.admits(val);
    if (ok) return val;
  }
  return std::nullopt;
}

CspInstance random_csp(std::mt19937_64& rng) {
  CspInstance inst;
  inst.var_count = 1 + rng() % 5;
  const int nc = 1 + static_cast<int>(rng() % 6);
  for (int i = 0; i < nc; ++i) {
    CspConstraint c;
    const std::uint32_t arity = 1 + rng() % std::min<std::uint32_t>(3, inst.var_count);
    while (c.scope.size() < arity) {
      std::uint32_t v = rng() % inst.var_count;
      if (std::find(c.scope.begin(), c.scope.end(), v) == c.scope.end()) c.scope.push_back(v);
    }
    std::uint64_t total = 1;
    for (std::uint32_t k = 0; k < arity; ++k) total *= 3;
    for (std::uint64_t code = 0; code < total; ++code) {
      if (rng() % 3 == 0) continue;
      std::vector<CspValue> t;
      std::uint64_t rest = code;
      for (std::uint32_t k = 0; k < arity; ++k, rest /= 3) t.push_back(static_cast<CspValue>(1 + rest % 3));
      c.allowed.push_back(t);
    }
    inst.constraints.push_back(c);
  }
  return inst;
}

}  // namespace

TEST(Translate, PositiveClauseVariableAndNegativeOutside) {
  // D = (-1 -2 -3), u = 4 outside Neg(F); (y or -u) becomes x_D != 2.
  Formula f = Formula::from_dimacs_clauses(4, {{-1, -2, -3}, {2, -4}});
  CspInstance inst = translate_exact(f);
  EXPECT_EQ(inst.var_count, 1u);
  ASSERT_EQ(inst.constraints.size(), 1u);
  EXPECT_EQ(inst.constraints[0].scope, std::vector<std::uint32_t>{0});
  EXPECT_EQ(inst.constraints[0].allowed, (Tuples{{1}, {3}}));
}

// (-y or x) allows x_D in {2,3}; (-y or z) allows {1,2}; together x_D = 2.
TEST(Translate, NegatedClauseVariable) {
  Formula f = Formula::from_dimacs_clauses(3, {{-1, -2, -3}, {-2, 1}, {-2, 3}});
  CspInstance inst = translate_exact(f);
  ASSERT_EQ(inst.constraints.size(), 2u);
  EXPECT_EQ(inst.constraints[0].allowed, (Tuples{{2}, {3}}));
  EXPECT_EQ(inst.constraints[1].allowed, (Tuples{{1}, {2}}));
  EXPECT_EQ(solve_csp_bruteforce(inst), CspValuation{2});
}

TEST(Translate, PositiveOutsideLiteralDropsClause) {
  Formula f = Formula::from_dimacs_clauses(4, {{-1, -2, -3}, {4, -1}});
  EXPECT_TRUE(translate_exact(f).constraints.empty());
}

TEST(Translate, EmptyClauseIsUnsatisfiable) {
  Formula f = Formula::from_dimacs_clauses(5, {{-1, -2, -3}, {}});
  CspInstance inst = translate_exact(f);
  ASSERT_EQ(inst.constraints.size(), 1u);
  EXPECT_TRUE(inst.constraints[0].scope.empty());
  EXPECT_TRUE(inst.constraints[0].allowed.empty());
  EXPECT_FALSE(solve_csp_bruteforce(inst).has_value());
}

TEST(SolveCsp, LowestValueFirst) {
  CspInstance inst{1, {CspConstraint{{0}, {{1}, {3}}}}};
  EXPECT_EQ(solve_csp_bruteforce(inst), CspValuation{1});
}

TEST(SolveCsp, Contradiction) {
  CspInstance inst{1, {CspConstraint{{0}, {{1}}}, CspConstraint{{0}, {{2}}}}};
  EXPECT_FALSE(solve_csp_bruteforce(inst).has_value());
}

TEST(SolveCsp, AgreesWithEnumeration) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    CspInstance inst = random_csp(rng);
    auto got = solve_csp_bruteforce(inst);
    auto want = enumerate_csp(inst);
    ASSERT_EQ(got.has_value(), want.has_value());
    if (got) EXPECT_EQ(*got, *want);
  }
}

TEST(SolveCsp, TooLarge) {
  CspInstance inst;
  inst.var_count = kMaxCspBruteForceVars + 1;
  EXPECT_THROW(solve_csp_bruteforce(inst), std::invalid_argument);
}

TEST(SolutionToAssignment, MiddleValue) {
  Formula f = Formula::from_dimacs_clauses(3, {{-1, -2, -3}});
  const CspValue v[] = {2};
  EXPECT_EQ(csp_solution_to_assignment(f, v).to_string(), "101");
}

TEST(ExactCase, TranslationAgreesWithBallOracleAndDoubleBall) {
  std::mt19937_64 rng(13);
  int sat = 0, unsat = 0;
  for (int i = 0; i < 300; ++i) {
    InstanceSpec spec{Family::disjoint};
    spec.size = 1 + rng() % 4;
    spec.n = 3 * spec.size + rng() % (13 - 3 * spec.size);
    spec.clauses = 1 + rng() % (2 * spec.n);
    spec.seed = rng();
    Formula f = generate(spec);
    const int m = static_cast<int>(spec.size);
    auto csp = solve_csp_bruteforce(translate_exact(f));
    auto want = brute_force_ball(f, Assignment(f.n, true), m);
    SearchStats stats;
    auto db = solve_disjoint(f, m, stats);
    ASSERT_EQ(csp.has_value(), want.has_value()) << to_string(spec);
    ASSERT_EQ(db.has_value(), want.has_value()) << to_string(spec);
    if (csp) {
      Assignment a = csp_solution_to_assignment(f, *csp);
      EXPECT_TRUE(evaluate(f, a));
      EXPECT_EQ(a.zeros(), static_cast<std::size_t>(m));
      ++sat;
    } else {
      ++unsat;
    }
  }
  EXPECT_GT(sat, 0);
  EXPECT_GT(unsat, 0);
}

TEST(WriteCsp, Format) {
  CspInstance inst{2, {CspConstraint{{0, 1}, {{1, 2}, {3, 3}}}}};
  std::ostringstream out;
  write_csp(out, inst);
  EXPECT_NE(out.str().find("12"), std::string::npos);
  EXPECT_NE(out.str().find("33"), std::string::npos);
}
