#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "ballsat/color_space.hpp"
#include "ballsat/oracles.hpp"

using namespace ballsat;

namespace {

const ColorGraph& G() { return ColorGraph::instance(); }

std::vector<ColorEdge> sorted(std::vector<ColorEdge> e) {
  std::sort(e.begin(), e.end());
  return e;
}

ColorState single(Color c) { return ColorState{{c}, {}}; }

}  // namespace

TEST(ColorGraph, EdgeSets) {
  using C = Color;
  EXPECT_EQ(sorted(G().solid_edges()), sorted({{C::c011, C::c101}, {C::c101, C::c110}, {C::c110, C::c011}}));
  EXPECT_EQ(sorted(G().dotted_edges()), sorted({{C::c011, C::c010},
                                                {C::c101, C::c001},
                                                {C::c110, C::c100},
                                                {C::c010, C::c000},
                                                {C::c001, C::c000},
                                                {C::c100, C::c000}}));
}

TEST(ColorGraph, EdgeSetIsUniqueUnderTextualConstraints) {
  auto sets = consistent_dotted_edge_sets();
  ASSERT_EQ(sets.size(), 1u);
  EXPECT_EQ(sorted(sets.front()), sorted(G().dotted_edges()));
}

TEST(ColorGraph, TablesMatchPathEnumeration) {
  PathTables t = enumerate_path_tables(G().solid_edges(), G().dotted_edges());
  for (Color a : kAllColors)
    for (Color b : kAllColors) {
      EXPECT_EQ(G().d(a, b), t.d[color_index(a)][color_index(b)]) << to_string(a) << "->" << to_string(b);
      EXPECT_EQ(G().cost(a, b), t.cost[color_index(a)][color_index(b)]) << to_string(a) << "->" << to_string(b);
    }
}

TEST(Distance, Examples) {
  EXPECT_EQ(d(single(Color::c011), single(Color::c100)), Distance(2));
  EXPECT_EQ(cost(single(Color::c011), single(Color::c100)), Distance(1));
  EXPECT_EQ(d(single(Color::c010), single(Color::c011)), Distance::infinity());
  EXPECT_EQ(cost(single(Color::c010), single(Color::c011)), Distance::infinity());
  EXPECT_EQ(cost(single(Color::c011), single(Color::c000)), Distance(2));
  EXPECT_EQ(d(single(Color::c011), single(Color::c000)), Distance(0));
  for (Color c : kAllColors) {
    EXPECT_EQ(d(single(c), single(c)), Distance(0));
    EXPECT_EQ(cost(single(c), single(c)), Distance(0));
  }
}

TEST(Distance, OutsideVariables) {
  EXPECT_EQ(ColorGraph::outside_cost(true, false), Distance(1));
  EXPECT_EQ(ColorGraph::outside_cost(false, true), Distance::infinity());
  EXPECT_EQ(ColorGraph::outside_cost(true, true), Distance(0));
  ColorState a{{Color::c011}, {1, 1}};
  ColorState b{{Color::c011}, {0, 1}};
  EXPECT_EQ(cost(a, b), Distance(1));
  EXPECT_EQ(d(a, b), Distance(0));
  EXPECT_EQ(cost(b, a), Distance::infinity());
}

TEST(Distance, SaturatingArithmetic) {
  EXPECT_TRUE((Distance(3) + Distance::infinity()).is_infinite());
  EXPECT_TRUE(Distance(3).within(3));
  EXPECT_FALSE(Distance(3).within(2));
  EXPECT_FALSE(Distance(0).within(-1));
  EXPECT_FALSE(Distance::infinity().within(1000));
}

TEST(Distance, TriangleInequalityOverAllTriples) {
  for (Color a : kAllColors)
    for (Color b : kAllColors)
      for (Color c : kAllColors) {
        EXPECT_LE(G().d(a, c), G().d(a, b) + G().d(b, c));
        EXPECT_LE(G().cost(a, c), G().cost(a, b) + G().cost(b, c));
      }
}

TEST(Distance, ExactStatesAreWithinTwoPerClause) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    std::size_t m = 1 + rng() % 6;
    ColorState a, b;
    for (std::size_t j = 0; j < m; ++j) {
      a.clause_colors.push_back(kExactColors[rng() % 3]);
      b.clause_colors.push_back(kAllColors[rng() % 7]);
    }
    EXPECT_TRUE(d(a, b).within(static_cast<int>(2 * m)));
    ColorState e;
    for (std::size_t j = 0; j < m; ++j) e.clause_colors.push_back(kExactColors[rng() % 3]);
    EXPECT_TRUE(d(a, e).within(static_cast<int>(2 * m)));
    EXPECT_EQ(cost(a, e), Distance(0));
  }
}

TEST(Layout, StateToAssignment) {
  // Neg = {(-1 -2 -3)}, V' = {4}.
  Formula f = Formula::from_dimacs_clauses(4, {{-1, -2, -3}, {1, 4}});
  ColorLayout layout(f);
  ASSERT_EQ(layout.clause_count(), 1u);
  ASSERT_EQ(layout.outside_vars(), std::vector<Var>{4});
  Assignment a = state_to_assignment(layout, ColorState{{Color::c011}, {1}});
  EXPECT_EQ(a.to_string(), "0111");
  EXPECT_THROW(assignment_to_state(layout, Assignment::from_string("1110")), std::invalid_argument);
}

TEST(Layout, UnmentionedVariablesStayOne) {
  Formula f = Formula::from_dimacs_clauses(5, {{-1, -2, -3}});
  ColorLayout layout(f);
  EXPECT_EQ(layout.outside_count(), 0u);
  EXPECT_EQ(state_to_assignment(layout, ColorState{{Color::c000}, {}}).to_string(), "00011");
}

TEST(Layout, RejectsIntersectingOrShortNegativeClauses) {
  EXPECT_THROW(ColorLayout(Formula::from_dimacs_clauses(5, {{-1, -2, -3}, {-3, -4, -5}})), std::invalid_argument);
  EXPECT_THROW(ColorLayout(Formula::from_dimacs_clauses(3, {{-1, -2}})), std::invalid_argument);
}

TEST(Layout, RoundTripOnRandomStates) {
  Formula f = Formula::from_dimacs_clauses(10, {{-1, -2, -3}, {-4, -5, -6}, {-7, -8, -9}, {1, 10}});
  ColorLayout layout(f);
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    ColorState s;
    for (std::size_t j = 0; j < layout.clause_count(); ++j) s.clause_colors.push_back(kAllColors[rng() % 7]);
    for (std::size_t j = 0; j < layout.outside_count(); ++j) s.outside_bits.push_back(rng() & 1U);
    EXPECT_EQ(assignment_to_state(layout, state_to_assignment(layout, s)), s);
  }
}

TEST(Projection, Examples) {
  auto [beta, used] = project_to_exact(single(Color::c000));
  EXPECT_EQ(beta, single(Color::c011));
  EXPECT_EQ(used, 2);
  for (Color c : kExactColors) {
    auto [b, u] = project_to_exact(single(c));
    EXPECT_EQ(b, single(c));
    EXPECT_EQ(u, 0);
  }
}

TEST(Projection, AllColorsAndOutsideBits) {
  for (Color c : kAllColors) {
    ColorState s{{c}, {0, 1}};
    auto [beta, used] = project_to_exact(s);
    EXPECT_TRUE(beta.is_exact());
    EXPECT_EQ(beta.outside_bits, (std::vector<std::uint8_t>{1, 1}));
    EXPECT_EQ(d(beta, s), Distance(0));
    EXPECT_EQ(cost(beta, s), Distance(static_cast<std::uint32_t>(used)));
    EXPECT_EQ(G().cost(beta.clause_colors[0], c).value() + 1, static_cast<std::uint32_t>(used));
  }
}
