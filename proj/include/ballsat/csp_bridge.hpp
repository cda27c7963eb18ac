#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "ballsat/cnf.hpp"

namespace ballsat {

/// Values 1..3; value j means "the negative clause is satisfied through its j-th literal".
using CspValue = std::uint8_t;
using CspValuation = std::vector<CspValue>;

/// Extensional constraint. An empty scope with no allowed tuples is unsatisfiable.
struct CspConstraint {
  std::vector<std::uint32_t> scope;  // 0-based CSP variable indices, distinct
  std::vector<std::vector<CspValue>> allowed;

  bool admits(const CspValuation& valuation) const;
};

struct CspInstance {
  std::uint32_t var_count = 0;
  std::vector<CspConstraint> constraints;
};

/// Rewrites the exact-assignment case (every negative clause gets exactly one
/// zero, everything else stays 1) as a domain-3 CSP with one variable per
/// negative clause, in negative-clause order.
CspInstance translate_exact(const Formula& f);

inline constexpr std::uint32_t kMaxCspBruteForceVars = 20;

/// Backtracking, lowest index first, lowest value first.
std::optional<CspValuation> solve_csp_bruteforce(const CspInstance& inst);

Assignment csp_solution_to_assignment(const Formula& f, std::span<const CspValue> valuation);

/// One constraint per line: "scope v1 v2 ... | t1 t2 ..." with tuples written as digit strings.
void write_csp(std::ostream& out, const CspInstance& inst);

}  // namespace ballsat
