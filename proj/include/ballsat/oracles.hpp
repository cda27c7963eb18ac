#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ballsat/cnf.hpp"
#include "ballsat/color_space.hpp"

namespace ballsat {

inline constexpr std::uint32_t kMaxBruteForceVars = 22;

/// Exhaustive search in lexicographic order (variable 1 most significant).
std::optional<Assignment> brute_force_sat(const Formula& f);
/// Exhaustive search restricted to the Hamming ball of radius r around center.
std::optional<Assignment> brute_force_ball(const Formula& f, const Assignment& center, int r);
/// Exhaustive search over all color states with d <= s and cost <= t from state.
std::optional<Assignment> brute_force_double_ball(const Formula& f, const ColorState& state, int s, int t);

/// Shortest-path tables recomputed by exhaustive simple-path enumeration,
/// independent of the graph's own table construction.
struct PathTables {
  std::array<std::array<Distance, 7>, 7> d;
  std::array<std::array<Distance, 7>, 7> cost;
};
PathTables enumerate_path_tables(const std::vector<ColorEdge>& solid, const std::vector<ColorEdge>& dotted);

/// All dotted edge sets (with the fixed solid 3-cycle) consistent with the
/// textual constraints on the seven-color graph.
std::vector<std::vector<ColorEdge>> consistent_dotted_edge_sets();

struct ConstantCheck {
  std::string name;
  double value;
  bool ok;
};
struct ConstantsReport {
  std::vector<ConstantCheck> checks;
  bool all_ok() const;
};
ConstantsReport verify_constants();

}  // namespace ballsat
