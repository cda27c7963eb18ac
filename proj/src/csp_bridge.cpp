#include "ballsat/csp_bridge.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "ballsat/color_space.hpp"

namespace ballsat {

bool CspConstraint::admits(const CspValuation& valuation) const {
  std::vector<CspValue> tuple;
  tuple.reserve(scope.size());
  for (auto v : scope) tuple.push_back(valuation[v]);
  return std::find(allowed.begin(), allowed.end(), tuple) != allowed.end();
}

namespace {

// Atomic condition "x_var == value" or "x_var != value".
struct Atom {
  std::uint32_t var;
  CspValue value;
  bool equal;

  bool holds(CspValue v) const { return (v == value) == equal; }
};

CspConstraint materialize(const std::vector<Atom>& atoms) {
  CspConstraint c;
  for (const Atom& a : atoms)
    if (std::find(c.scope.begin(), c.scope.end(), a.var) == c.scope.end()) c.scope.push_back(a.var);
  std::size_t combos = 1;
  for (std::size_t i = 0; i < c.scope.size(); ++i) combos *= 3;
  for (std::size_t idx = 0; idx < combos; ++idx) {
    std::vector<CspValue> tuple(c.scope.size());
    std::size_t rest = idx;
    for (std::size_t i = c.scope.size(); i-- > 0;) {
      tuple[i] = static_cast<CspValue>(1 + rest % 3);
      rest /= 3;
    }
    bool ok = std::any_of(atoms.begin(), atoms.end(), [&](const Atom& a) {
      auto at = std::find(c.scope.begin(), c.scope.end(), a.var) - c.scope.begin();
      return a.holds(tuple[static_cast<std::size_t>(at)]);
    });
    if (ok) c.allowed.push_back(std::move(tuple));
  }
  return c;
}

}  // namespace

CspInstance translate_exact(const Formula& f) {
  const ColorLayout layout(f);
  CspInstance inst;
  inst.var_count = static_cast<std::uint32_t>(layout.clause_count());
  const auto neg = layout.clause_indices();

  for (std::size_t ci = 0; ci < f.clauses.size(); ++ci) {
    if (std::find(neg.begin(), neg.end(), ci) != neg.end()) continue;
    std::vector<Atom> atoms;
    bool always_true = false;
    for (const Literal& l : f.clauses[ci].literals) {
      const auto& slot = layout.slot(l.var);
      if (slot.kind == ColorLayout::Slot::Kind::clause) {
        // The variable at position j is 0 iff x_D = j.
        atoms.push_back({slot.index, static_cast<CspValue>(slot.position + 1), !l.positive});
      } else if (l.positive) {
        always_true = true;  // outside variables are 1 in every exact assignment
        break;
      }
    }
    if (always_true) continue;
    CspConstraint c = materialize(atoms);
    std::size_t full = 1;
    for (std::size_t i = 0; i < c.scope.size(); ++i) full *= 3;
    if (!c.scope.empty() && c.allowed.size() == full) continue;
    inst.constraints.push_back(std::move(c));
  }
  return inst;
}

namespace {

bool consistent(const CspInstance& inst, const CspValuation& val, std::uint32_t assigned) {
  for (const CspConstraint& c : inst.constraints) {
    bool ready = std::all_of(c.scope.begin(), c.scope.end(), [&](std::uint32_t v) { return v < assigned; });
    if (ready && !c.admits(val)) return false;
  }
  return true;
}

bool backtrack(const CspInstance& inst, CspValuation& val, std::uint32_t next) {
  if (!consistent(inst, val, next)) return false;
  if (next == inst.var_count) return true;
  for (CspValue v = 1; v <= 3; ++v) {
    val[next] = v;
    if (backtrack(inst, val, next + 1)) return true;
  }
  val[next] = 0;
  return false;
}

}  // namespace

std::optional<CspValuation> solve_csp_bruteforce(const CspInstance& inst) {
  if (inst.var_count > kMaxCspBruteForceVars) throw std::invalid_argument("CSP too large for brute force");
  CspValuation val(inst.var_count, 0);
  if (!backtrack(inst, val, 0)) return std::nullopt;
  return val;
}

Assignment csp_solution_to_assignment(const Formula& f, std::span<const CspValue> valuation) {
  const ColorLayout layout(f);
  if (valuation.size() != layout.clause_count()) throw std::invalid_argument("valuation does not cover Neg(F)");
  Assignment a(f.n, true);
  for (std::size_t i = 0; i < layout.clause_count(); ++i) {
    if (valuation[i] < 1 || valuation[i] > 3) throw std::invalid_argument("CSP value out of range");
    a.set(layout.clause_vars(i)[valuation[i] - 1], false);
  }
  return a;
}

void write_csp(std::ostream& out, const CspInstance& inst) {
  out << "csp " << inst.var_count << ' ' << inst.constraints.size() << '\n';
  for (const CspConstraint& c : inst.constraints) {
    out << "scope";
    for (auto v : c.scope) out << ' ' << v + 1;
    out << " |";
    for (const auto& t : c.allowed) {
      out << ' ';
      for (auto v : t) out << static_cast<char>('0' + v);
    }
    out << '\n';
  }
}

}  // namespace ballsat
