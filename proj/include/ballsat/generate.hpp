#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "ballsat/cnf.hpp"

namespace ballsat {

enum class Family : std::uint8_t {
  uniform,   // uniform random 3-clauses
  planted,   // uniform random 3-clauses satisfied by a hidden assignment
  disjoint,  // m pairwise-disjoint negative 3-clauses plus clauses with a positive literal
  share1,    // k pairs of negative 3-clauses sharing one variable
  share2,    // k pairs of negative 3-clauses sharing two variables
};

/// Text form: "<family>:key=value,..." with keys n, clauses, m (disjoint),
/// k (share1/share2), block (0/1), seed. Example: "disjoint:m=3,n=12,seed=7".
struct InstanceSpec {
  Family family = Family::uniform;
  std::uint32_t n = 0;        // 0: smallest n the family allows
  std::uint32_t clauses = 0;  // extra (non-negative) clauses, or all clauses for uniform/planted
  std::uint32_t size = 1;     // m for disjoint, k for share chains
  /// Share chains: add a positive unit clause on every shared variable so
  /// the cheap branches fail immediately.
  bool block_shared = false;
  std::uint64_t seed = 1;
};

InstanceSpec parse_instance_spec(std::string_view text);
std::string to_string(const InstanceSpec& spec);
std::string family_name(Family f);
Family parse_family(std::string_view name);

struct GeneratedInstance {
  Formula formula;
  std::optional<Assignment> planted;
};

/// Deterministic in (spec, seed); the family's structural promise is checked.
GeneratedInstance generate_instance(const InstanceSpec& spec);
inline Formula generate(const InstanceSpec& spec) { return generate_instance(spec).formula; }

/// Uniform random 3-CNF over n variables.
Formula random_3cnf(std::uint32_t n, std::uint32_t clauses, std::mt19937_64& rng);

/// SplitMix64 step; derives independent per-task seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace ballsat
