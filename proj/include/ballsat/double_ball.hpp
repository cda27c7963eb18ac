#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "ballsat/cnf.hpp"
#include "ballsat/color_space.hpp"
#include "ballsat/covering_code.hpp"
#include "ballsat/search_stats.hpp"

namespace ballsat {

/// Branching constants. a_db and b_db are the horizontal/vertical bases of the
/// double-ball recursion, x = 1/a_db parameterizes the exact code, and
/// ball_base is the base of the intersecting-clause branching.
struct BranchConstants {
  double a_db;
  double b_db;
  double x;
  double ball_base;
};
const BranchConstants& branch_constants();

/// Called once per double-ball node after its subtree is finished.
using NodeObserver = std::function<void(int s, int t, std::uint64_t subtree_leaves)>;

/// Searches for an assignment satisfying f within horizontal budget s and
/// vertical budget t of state. Neg(f) must be pairwise-disjoint 3-clauses.
std::optional<Assignment> double_ball_search(const Formula& f, const ColorState& state, int s, int t,
                                             SearchStats& stats, const NodeObserver& observer = {});
std::optional<Assignment> double_ball_search(const Formula& f, const ColorLayout& layout, const ColorState& state,
                                             int s, int t, SearchStats& stats, const NodeObserver& observer = {},
                                             int depth = 0);

/// Ball query around all-ones for a formula whose negative clauses are
/// pairwise disjoint 3-clauses: one double-ball search per exact codeword.
std::optional<Assignment> solve_disjoint(const Formula& f, int r, SearchStats& stats,
                                         int block_size = kDefaultExactBlockSize, int depth = 0);

/// Memoized build_exact_code(m, branch_constants().x, block_size).
const ExactCodeChoice& cached_exact_code(std::uint32_t m, int block_size);

}  // namespace ballsat
