#include <gtest/gtest.h>

#include <sstream>

#include "ballsat/cnf.hpp"
#include "test_support.hpp"

using namespace ballsat;
using ballsat::testing::assignment_from_code;
using ballsat::testing::random_mixed_formula;
using ballsat::testing::to_dimacs;
using ballsat::testing::truth_table_value;

TEST(Dimacs, SingleNegativeClause) {
  Formula f = parse_dimacs("p cnf 3 1\n-1 -2 -3 0\n");
  EXPECT_EQ(f.n, 3u);
  ASSERT_EQ(f.clauses.size(), 1u);
  EXPECT_TRUE(f.clauses[0].is_negative());
  EXPECT_EQ(f, Formula::from_dimacs_clauses(3, {{-1, -2, -3}}));
}

TEST(Dimacs, TautologyDropped) {
  Formula f = parse_dimacs("p cnf 2 1\n1 -1 0\n");
  EXPECT_EQ(f.n, 2u);
  EXPECT_TRUE(f.clauses.empty());
}

TEST(Dimacs, DuplicateLiteralCollapsesToEquivalentClause) {
  Formula f = parse_dimacs("p cnf 2 1\n1 2 2 0\n");
  ASSERT_EQ(f.clauses.size(), 1u);
  EXPECT_EQ(f.clauses[0].size(), 2u);
  const std::vector<std::vector<int>> raw = {{1, 2, 2}};
  for (std::uint64_t code = 0; code < 4; ++code) {
    Assignment a = assignment_from_code(2, code);
    EXPECT_EQ(evaluate(f, a), truth_table_value(raw, a));
  }
}

TEST(Dimacs, CommentsPercentAndMultilineClauses) {
  Formula f = parse_dimacs("c hello\np cnf 4 2\n1 -2\n 3 0 -4 0\n%\n0\n");
  EXPECT_EQ(f, Formula::from_dimacs_clauses(4, {{1, -2, 3}, {-4}}));
}

TEST(Dimacs, EmptyClauseIsKept) {
  Formula f = parse_dimacs("p cnf 2 2\n0\n1 0\n");
  EXPECT_TRUE(f.has_empty_clause());
  EXPECT_FALSE(evaluate(f, Assignment(2, true)));
}

TEST(Dimacs, ErrorsCarryLineNumbers) {
  auto line_of = [](const char* text) -> std::size_t {
    try {
      parse_dimacs(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("p cnf 2 1\n1 3 0\n"), 2u);           // variable out of range
  EXPECT_EQ(line_of("p cnf 4 1\nc x\n1 2 3 4 0\n"), 3u);  // wider than three
  EXPECT_EQ(line_of("1 2 0\n"), 1u);                      // clause before header
  EXPECT_EQ(line_of("p cnf x 1\n"), 1u);
  EXPECT_EQ(line_of("p cnf 2 1\n1 a 0\n"), 2u);
  EXPECT_THROW(parse_dimacs(""), ParseError);
}

TEST(Dimacs, WriteThenParseRoundTrip) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    Formula f = random_mixed_formula(7, 12, rng);
    std::ostringstream out;
    write_dimacs(out, f);
    EXPECT_EQ(parse_dimacs(out.str()), f);
  }
}

TEST(Evaluate, NegativeClauseAgainstAllOnes) {
  Formula f = Formula::from_dimacs_clauses(3, {{-1, -2, -3}});
  EXPECT_FALSE(evaluate(f, Assignment(3, true)));
  EXPECT_EQ(find_unsat_clause(f, Assignment(3, true)), std::optional<std::size_t>(0));
}

TEST(Evaluate, EmptyFormulaIsTrue) {
  Formula f = Formula::make(4, {});
  for (std::uint64_t code = 0; code < 16; ++code) EXPECT_TRUE(evaluate(f, assignment_from_code(4, code)));
}

TEST(Evaluate, MatchesTruthTableAndFirstUnsatClause) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    Formula f = random_mixed_formula(6, 10, rng);
    auto raw = to_dimacs(f);
    Assignment a = assignment_from_code(6, rng() % 64);
    EXPECT_EQ(evaluate(f, a), truth_table_value(raw, a));
    auto idx = find_unsat_clause(f, a);
    if (idx) {
      EXPECT_FALSE(truth_table_value({raw[*idx]}, a));
      for (std::size_t j = 0; j < *idx; ++j) EXPECT_TRUE(truth_table_value({raw[j]}, a));
    }
  }
}

TEST(Evaluate, LengthMismatchThrows) {
  Formula f = Formula::from_dimacs_clauses(3, {{1}});
  EXPECT_THROW(find_unsat_clause(f, Assignment(2)), std::invalid_argument);
}

TEST(Recenter, PositiveBinaryAroundZeros) {
  Formula f = Formula::from_dimacs_clauses(2, {{1, 2}});
  Formula g = recenter(f, Assignment::from_string("00"));
  EXPECT_EQ(g, Formula::from_dimacs_clauses(2, {{-1, -2}}));
}

TEST(Recenter, AllOnesCenterIsIdentity) {
  std::mt19937_64 rng(5);
  Formula f = random_mixed_formula(8, 20, rng);
  EXPECT_EQ(recenter(f, Assignment(8, true)), f);
}

// F'(beta) = F(beta xor not center) for every beta, so all-ones maps to the center.
TEST(Recenter, ContractHoldsExhaustively) {
  std::mt19937_64 rng(17);
  for (std::uint32_t n = 1; n <= 10; ++n) {
    Formula f = random_mixed_formula(n, 2 * n, rng);
    Assignment center = assignment_from_code(n, rng() % (1ULL << n));
    Formula g = recenter(f, center);
    for (std::uint64_t code = 0; code < (1ULL << n); ++code) {
      Assignment beta = assignment_from_code(n, code);
      Assignment moved(n);
      for (Var v = 1; v <= n; ++v) moved.set(v, beta[v] == center[v]);
      ASSERT_EQ(evaluate(g, beta), evaluate(f, moved));
      EXPECT_EQ(recenter_assignment(beta, center), moved);
      EXPECT_EQ(recenter_assignment(moved, center), beta);
      EXPECT_EQ(hamming_distance(moved, center), beta.zeros());
    }
  }
}

TEST(Condition, SatisfiedClauseDisappears) {
  Formula f = Formula::from_dimacs_clauses(3, {{-1, -2, -3}});
  EXPECT_TRUE(condition(f, 1, false).clauses.empty());
}

TEST(Condition, FalsifiedLiteralIsDeleted) {
  Formula f = Formula::from_dimacs_clauses(3, {{1, -2, -3}});
  EXPECT_EQ(condition(f, 1, false).clauses, Formula::from_dimacs_clauses(3, {{-2, -3}}).clauses);
}

TEST(Condition, SemanticsExhaustive) {
  std::mt19937_64 rng(23);
  for (std::uint32_t n = 1; n <= 10; ++n) {
    Formula f = random_mixed_formula(n, 2 * n, rng);
    Var x = static_cast<Var>(1 + rng() % n);
    bool value = (rng() & 1U) != 0;
    Formula g = condition(f, x, value);
    for (const Clause& c : g.clauses) EXPECT_FALSE(c.mentions(x));
    for (std::uint64_t code = 0; code < (1ULL << n); ++code) {
      Assignment a = assignment_from_code(n, code);
      if (a[x] != value) continue;
      ASSERT_EQ(evaluate(g, a), evaluate(f, a));
    }
  }
}

TEST(ClassifyNeg, ShareOne) {
  // x=1 y=2 z=3 u=4 v=5
  Formula f = Formula::from_dimacs_clauses(5, {{-1, -2, -3}, {-1, -4, -5}});
  auto s = classify_neg(f);
  ASSERT_TRUE(std::holds_alternative<SharePair>(s));
  EXPECT_EQ(std::get<SharePair>(s).shared, 1);
}

TEST(ClassifyNeg, ShareTwo) {
  Formula f = Formula::from_dimacs_clauses(4, {{-1, -2, -3}, {-1, -2, -4}});
  auto s = classify_neg(f);
  ASSERT_TRUE(std::holds_alternative<SharePair>(s));
  EXPECT_EQ(std::get<SharePair>(s).shared, 2);
}

TEST(ClassifyNeg, DisjointUnitBinaryEmpty) {
  auto d = classify_neg(Formula::from_dimacs_clauses(6, {{-1, -2, -3}, {-4, -5, -6}, {1, 4}}));
  ASSERT_TRUE(std::holds_alternative<Disjoint>(d));
  EXPECT_EQ(std::get<Disjoint>(d).clauses, (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(std::holds_alternative<UnitNegative>(classify_neg(Formula::from_dimacs_clauses(3, {{-1, -2, -3}, {-2}}))));
  EXPECT_TRUE(std::holds_alternative<BinaryNegative>(classify_neg(Formula::from_dimacs_clauses(3, {{-1, -3}}))));
  EXPECT_TRUE(std::holds_alternative<EmptyNegClause>(classify_neg(Formula::from_dimacs_clauses(3, {{}}))));
  auto none = classify_neg(Formula::from_dimacs_clauses(3, {{1, -2}}));
  ASSERT_TRUE(std::holds_alternative<Disjoint>(none));
  EXPECT_TRUE(std::get<Disjoint>(none).clauses.empty());
}

// Every satisfying assignment zeroes at least one variable per packed clause.
TEST(Packing, LowerBoundsZerosOfEverySolution) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 200; ++i) {
    const std::uint32_t n = 8;
    Formula f = random_mixed_formula(n, 10, rng);
    const std::size_t pack = disjoint_negative_packing(f);
    for (std::uint64_t code = 0; code < (1ULL << n); ++code) {
      Assignment a = assignment_from_code(n, code);
      if (evaluate(f, a)) ASSERT_GE(a.zeros(), pack);
    }
  }
}
