#pragma once

#include <optional>

#include "ballsat/cnf.hpp"
#include "ballsat/covering_code.hpp"
#include "ballsat/search_stats.hpp"

namespace ballsat {

struct SolverOptions {
  int hamming_block_size = kDefaultHammingBlockSize;
  int exact_block_size = kDefaultExactBlockSize;
  /// Overrides choose_top_radius in solve_3sat.
  std::optional<int> radius;
  /// Run codewords on worker threads with first-success cancellation.
  bool parallel = false;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Finds an assignment satisfying f with at most r zeros, if one exists.
std::optional<Assignment> solve_ball(const Formula& f, int r, SearchStats& stats, const SolverOptions& options = {});

/// Ball query around an arbitrary center.
std::optional<Assignment> solve_ball_at(const Formula& f, const Assignment& center, int r, SearchStats& stats,
                                        const SolverOptions& options = {});

/// Covering-code driver: one ball query per codeword of a Hamming covering code.
std::optional<Assignment> solve_3sat(const Formula& f, SearchStats& stats, const SolverOptions& options = {});

}  // namespace ballsat
