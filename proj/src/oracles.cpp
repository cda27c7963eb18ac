#include "ballsat/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <bit>
#include <functional>
#include <stdexcept>

#include "ballsat/double_ball.hpp"

namespace ballsat {

namespace {

Assignment from_index(std::uint64_t idx, std::uint32_t n) {
  Assignment a(n, false);
  for (std::uint32_t i = 0; i < n; ++i)
    if ((idx >> (n - 1 - i)) & 1U) a.set(i + 1, true);
  return a;
}

}  // namespace

std::optional<Assignment> brute_force_sat(const Formula& f) {
  if (f.n > kMaxBruteForceVars) throw std::invalid_argument("brute_force_sat: too many variables");
  for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << f.n); ++idx) {
    Assignment a = from_index(idx, f.n);
    if (evaluate(f, a)) return a;
  }
  return std::nullopt;
}

std::optional<Assignment> brute_force_ball(const Formula& f, const Assignment& center, int r) {
  if (f.n > kMaxBruteForceVars) throw std::invalid_argument("brute_force_ball: too many variables");
  if (center.size() != f.n) throw std::invalid_argument("brute_force_ball: center length mismatch");
  if (r < 0) return std::nullopt;
  for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << f.n); ++idx) {
    Assignment a = from_index(idx, f.n);
    if (hamming_distance(a, center) <= static_cast<std::size_t>(r) && evaluate(f, a)) return a;
  }
  return std::nullopt;
}

std::optional<Assignment> brute_force_double_ball(const Formula& f, const ColorState& state, int s, int t) {
  const ColorLayout layout(f);
  const std::size_t m = layout.clause_count();
  const std::size_t k = layout.outside_count();
  if (m > 5 || k > 6) throw std::invalid_argument("brute_force_double_ball: instance too large");
  if (s < 0 || t < 0) return std::nullopt;
  std::size_t total = std::size_t{1} << k;
  for (std::size_t i = 0; i < m; ++i) total *= 7;
  ColorState cand;
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    cand.clause_colors.assign(m, Color::c000);
    cand.outside_bits.assign(k, 0);
    for (std::size_t i = 0; i < k; ++i, rest >>= 1) cand.outside_bits[i] = rest & 1U;
    for (std::size_t i = 0; i < m; ++i, rest /= 7) cand.clause_colors[i] = kAllColors[rest % 7];
    if (!d(state, cand).within(s) || !cost(state, cand).within(t)) continue;
    Assignment a = state_to_assignment(layout, cand);
    if (evaluate(f, a)) return a;
  }
  return std::nullopt;
}

PathTables enumerate_path_tables(const std::vector<ColorEdge>& solid, const std::vector<ColorEdge>& dotted) {
  PathTables out;
  for (auto& row : out.d) row.fill(Distance::infinity());
  for (auto& row : out.cost) row.fill(Distance::infinity());

  struct Out {
    Color to;
    bool is_solid;
  };
  std::array<std::vector<Out>, 7> adj;
  for (const auto& [a, b] : solid) adj[color_index(a)].push_back({b, true});
  for (const auto& [a, b] : dotted) adj[color_index(a)].push_back({b, false});

  for (Color src : kAllColors) {
    std::array<bool, 7> on_path{};
    std::function<void(Color, std::uint32_t, std::uint32_t)> walk = [&](Color at, std::uint32_t solids,
                                                                        std::uint32_t dots) {
      auto& dcell = out.d[color_index(src)][color_index(at)];
      auto& ccell = out.cost[color_index(src)][color_index(at)];
      dcell = std::min(dcell, Distance(solids));
      ccell = std::min(ccell, Distance(dots));
      on_path[color_index(at)] = true;
      for (const Out& e : adj[color_index(at)])
        if (!on_path[color_index(e.to)]) walk(e.to, solids + (e.is_solid ? 1 : 0), dots + (e.is_solid ? 0 : 1));
      on_path[color_index(at)] = false;
    };
    walk(src, 0, 0);
  }
  return out;
}

std::vector<std::vector<ColorEdge>> consistent_dotted_edge_sets() {
  const std::vector<ColorEdge> solid = {
      {Color::c011, Color::c101}, {Color::c101, Color::c110}, {Color::c110, Color::c011}};
  // Dotted edges set exactly one more variable to 0.
  std::vector<ColorEdge> candidates;
  for (Color a : kAllColors)
    for (Color b : kAllColors) {
      auto ua = static_cast<unsigned>(a);
      auto ub = static_cast<unsigned>(b);
      if ((ub & ~ua) == 0 && std::popcount(ua ^ ub) == 1) candidates.emplace_back(a, b);
    }

  auto idx = [](Color c) { return color_index(c); };
  std::vector<std::vector<ColorEdge>> result;
  for (std::uint32_t mask = 0; mask < (1U << candidates.size()); ++mask) {
    std::vector<ColorEdge> dotted;
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (mask & (1U << i)) dotted.push_back(candidates[i]);

    std::array<int, 7> out_degree{};
    for (const auto& e : dotted) ++out_degree[idx(e.first)];
    bool ok = true;
    for (Color c : kAllColors) {
      if (out_degree[idx(c)] > 1) ok = false;                                     // at most one dotted edge
      if (!is_exact(c) && c != Color::c000 && out_degree[idx(c)] != 1) ok = false;  // dirty: exactly one
    }
    if (!ok) continue;
    if (std::find(dotted.begin(), dotted.end(), ColorEdge{Color::c011, Color::c010}) == dotted.end()) continue;

    const PathTables t = enumerate_path_tables(solid, dotted);
    auto D = [&](Color a, Color b) { return t.d[idx(a)][idx(b)]; };
    auto C = [&](Color a, Color b) { return t.cost[idx(a)][idx(b)]; };
    auto drops = [](Distance before, Distance after, std::uint32_t by) {
      return !before.is_infinite() && !after.is_infinite() && before.value() == after.value() + by;
    };

    ok = D(Color::c011, Color::c100) == Distance(2) && C(Color::c011, Color::c100) == Distance(1) &&
         D(Color::c010, Color::c011).is_infinite() && C(Color::c010, Color::c011).is_infinite() &&
         C(Color::c011, Color::c000) == Distance(2) && D(Color::c011, Color::c000) == Distance(0);
    // Moving 011 -> 101 gets one step closer to every target with y = 0 except 000.
    for (Color c : {Color::c101, Color::c001, Color::c100}) ok = ok && drops(D(Color::c011, c), D(Color::c101, c), 1);
    // Moving 011 -> 110 gets two steps closer to 110 and 100.
    for (Color c : {Color::c110, Color::c100}) ok = ok && drops(D(Color::c011, c), D(Color::c110, c), 2);
    // Moving 011 -> 010 lowers the cost of reaching 010 and 000 by one.
    for (Color c : {Color::c010, Color::c000}) ok = ok && drops(C(Color::c011, c), C(Color::c010, c), 1);
    if (ok) result.push_back(std::move(dotted));
  }
  return result;
}

bool ConstantsReport::all_ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const ConstantCheck& c) { return c.ok; });
}

ConstantsReport verify_constants() {
  constexpr double tol = 1e-9;
  ConstantsReport report;
  auto check = [&](std::string name, double value, bool ok) { report.checks.push_back({std::move(name), value, ok}); };
  auto near = [&](double a, double b) { return std::abs(a - b) <= tol; };

  const double s17 = std::sqrt(17.0);
  const double s57 = std::sqrt(57.0);
  const double a = (1.0 + s17) / 2.0;
  check("ball base a = (1+sqrt17)/2 solves x^2-x-4=0", a, near(a * a - a - 4.0, 0.0));
  check("a is the largest root of x^2-x-4", a, a > (1.0 - s17) / 2.0 && near(a, 2.5615528128088303));
  check("a matches branch_constants", a, near(a, branch_constants().ball_base));
  check("share-1 recurrence 1/a + 4/a^2 = 1", 1.0 / a + 4.0 / (a * a), near(1.0 / a + 4.0 / (a * a), 1.0));

  const double sat_base = 2.0 * a / (a + 1.0);
  check("2a/(a+1) = (7-sqrt17)/2", sat_base, near(sat_base, (7.0 - s17) / 2.0));
  check("2a/(a+1) <= 1.439", sat_base, sat_base <= 1.439);

  const BranchConstants& bc = branch_constants();
  const double A = bc.a_db;
  const double B = bc.b_db;
  check("A = (5+sqrt57)/2", A, near(A, (5.0 + s57) / 2.0));
  check("A solves x^2-5x-8=0", A, near(A * A - 5.0 * A - 8.0, 0.0));
  check("B = 3A^2/(A^2+A+1) = (41+5sqrt57)/(2(8+sqrt57))", B, near(B, (41.0 + 5.0 * s57) / (2.0 * (8.0 + s57))));
  check("B = (5+sqrt57)^2/(4(8+sqrt57))", B, near(B, (5.0 + s57) * (5.0 + s57) / (4.0 * (8.0 + s57))));
  check("B <= 2.533", B, B <= 2.533 && near(B, 2.5321546831949457));
  check("A^2 B = A B + 2A^2 + 2B", A * A * B - (A * B + 2.0 * A * A + 2.0 * B),
        near(A * A * B, A * B + 2.0 * A * A + 2.0 * B));
  check("A B^2 >= 3B^2 + 2A", A * B * B - (3.0 * B * B + 2.0 * A), A * B * B >= 3.0 * B * B + 2.0 * A);
  check("x = 1/A and 3/(1+x+x^2) = B", 3.0 / (1.0 + bc.x + bc.x * bc.x),
        near(bc.x * A, 1.0) && near(3.0 / (1.0 + bc.x + bc.x * bc.x), B));

  const double share2 = 1.0 + std::sqrt(2.0);
  check("1+sqrt2 solves x^2-2x-1=0", share2, near(share2 * share2 - 2.0 * share2 - 1.0, 0.0) && near(share2, 2.414213562373095));
  check("share-2 recurrence 2/c + 1/c^2 = 1", 2.0 / share2 + 1.0 / (share2 * share2),
        near(2.0 / share2 + 1.0 / (share2 * share2), 1.0));

  const double exact_rate = 3.0 * 9.0 / (9.0 + 3.0 + 1.0);
  check("3a^2/(a^2+a+1) at a=3 equals 27/13", exact_rate, near(exact_rate, 27.0 / 13.0));
  check("27/13 <= 2.077", exact_rate, exact_rate <= 2.077 && near(exact_rate, 2.0769230769230769));
  return report;
}

}  // namespace ballsat
