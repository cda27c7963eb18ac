#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

namespace ballsat {

/// Recursion-tree counters. Every solve_ball and double_ball_search call is a
/// node; a leaf is a node that issued no recursive call.
struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  int max_depth = 0;
  std::uint64_t disjoint_calls = 0;
  std::vector<std::uint64_t> code_sizes;
  std::chrono::nanoseconds elapsed{0};

  void merge(const SearchStats& other) {
    nodes += other.nodes;
    leaves += other.leaves;
    max_depth = max_depth > other.max_depth ? max_depth : other.max_depth;
    disjoint_calls += other.disjoint_calls;
    code_sizes.insert(code_sizes.end(), other.code_sizes.begin(), other.code_sizes.end());
    elapsed += other.elapsed;
  }
};

}  // namespace ballsat
