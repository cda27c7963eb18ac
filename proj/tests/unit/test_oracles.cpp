#include <gtest/gtest.h>

#include <cmath>

#include "ballsat/double_ball.hpp"
#include "ballsat/oracles.hpp"
#include "test_support.hpp"

using namespace ballsat;

TEST(Constants, AllChecksPass) {
  ConstantsReport rep = verify_constants();
  EXPECT_TRUE(rep.all_ok());
  for (const ConstantCheck& c : rep.checks) EXPECT_TRUE(c.ok) << c.name << " = " << c.value;
}

TEST(Constants, Values) {
  const BranchConstants& bc = branch_constants();
  const double a = (1.0 + std::sqrt(17.0)) / 2.0;
  EXPECT_NEAR(bc.ball_base, a, 1e-12);
  EXPECT_NEAR(a * a - a - 4.0, 0.0, 1e-12);
  EXPECT_NEAR(2 * a / (a + 1), (7.0 - std::sqrt(17.0)) / 2.0, 1e-12);
  EXPECT_LE(2 * a / (a + 1), 1.439);
  EXPECT_NEAR(bc.a_db, (5.0 + std::sqrt(57.0)) / 2.0, 1e-12);
  const double A = bc.a_db, B = bc.b_db;
  EXPECT_NEAR(B, 3 * A * A / (A * A + A + 1), 1e-12);
  EXPECT_NEAR(A * A * B, A * B + 2 * A * A + 2 * B, 1e-9);
  EXPECT_LE(B, 2.533);
  EXPECT_GE(A * B * B, 3 * B * B + 2 * A);
  EXPECT_NEAR(bc.x, 1.0 / A, 1e-15);
}

TEST(BruteForce, SatFindsLexicographicallyFirst) {
  Formula f = Formula::from_dimacs_clauses(3, {{1}, {2, 3}});
  EXPECT_EQ(brute_force_sat(f), Assignment::from_string("101"));
  EXPECT_FALSE(brute_force_sat(Formula::from_dimacs_clauses(1, {{1}, {-1}})).has_value());
}

TEST(BruteForce, BallRespectsRadius) {
  Formula f = Formula::from_dimacs_clauses(3, {{-1}, {-2}});
  EXPECT_FALSE(brute_force_ball(f, Assignment(3, true), 1).has_value());
  EXPECT_EQ(brute_force_ball(f, Assignment(3, true), 2), Assignment::from_string("001"));
}

TEST(BruteForce, TooLarge) {
  EXPECT_THROW(brute_force_sat(Formula::make(kMaxBruteForceVars + 1, {})), std::invalid_argument);
}

TEST(PathTables, SimpleChain) {
  using C = Color;
  PathTables t = enumerate_path_tables({{C::c011, C::c101}}, {{C::c101, C::c001}});
  EXPECT_EQ(t.d[color_index(C::c011)][color_index(C::c001)], Distance(1));
  EXPECT_EQ(t.cost[color_index(C::c011)][color_index(C::c001)], Distance(1));
  EXPECT_TRUE(t.d[color_index(C::c001)][color_index(C::c011)].is_infinite());
}
