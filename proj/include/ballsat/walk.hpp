#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "ballsat/cnf.hpp"

namespace ballsat {

/// One try: uniform random start, then up to 3n steps of flipping a uniformly
/// chosen variable of the first falsified clause.
std::optional<Assignment> schoening_try(const Formula& f, std::mt19937_64& rng);

/// First satisfying assignment over the given number of tries (try i is seeded
/// with derive_seed(seed, i)). One-sided: a result always satisfies f.
std::optional<Assignment> schoening_walk(const Formula& f, std::uint64_t seed, std::uint64_t tries);

struct WalkSample {
  std::uint64_t tries = 0;
  std::uint64_t successes = 0;
  std::uint64_t invalid_witnesses = 0;

  double success_rate() const { return tries == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(tries); }
};

/// Runs every try (no early exit) to estimate the per-try success rate.
WalkSample schoening_sample(const Formula& f, std::uint64_t seed, std::uint64_t tries);

}  // namespace ballsat
