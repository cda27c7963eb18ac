#include "ballsat/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <random>
#include <stdexcept>

#include "ballsat/ball_solver.hpp"
#include "ballsat/color_space.hpp"
#include "ballsat/csp_bridge.hpp"
#include "ballsat/double_ball.hpp"
#include "ballsat/generate.hpp"
#include "ballsat/oracles.hpp"

namespace ballsat {

namespace {

Assignment random_assignment(std::uint32_t n, std::mt19937_64& rng) {
  Assignment a(n);
  std::bernoulli_distribution coin(0.5);
  for (Var v = 1; v <= n; ++v) a.set(v, coin(rng));
  return a;
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

std::vector<SuiteResult> run_selftest(const SelftestOptions& options) {
  if (options.max_n < 4 || options.max_n > kMaxBruteForceVars) throw std::invalid_argument("max-n must be in 4..22");
  std::vector<SuiteResult> results;

  {
    SuiteResult r{"constants"};
    for (const auto& c : verify_constants().checks) {
      ++r.checked;
      r.mismatches += c.ok ? 0 : 1;
    }
    results.push_back(r);
  }
  {
    SuiteResult r{"color-graph"};
    const ColorGraph& g = ColorGraph::instance();
    auto sets = consistent_dotted_edge_sets();
    ++r.checked;
    auto sorted = [](std::vector<ColorEdge> e) {
      std::sort(e.begin(), e.end());
      return e;
    };
    if (sets.size() != 1 || sorted(sets.front()) != sorted(g.dotted_edges())) ++r.mismatches;
    const PathTables t = enumerate_path_tables(g.solid_edges(), g.dotted_edges());
    for (Color a : kAllColors)
      for (Color b : kAllColors) {
        ++r.checked;
        if (t.d[color_index(a)][color_index(b)] != g.d(a, b) || t.cost[color_index(a)][color_index(b)] != g.cost(a, b))
          ++r.mismatches;
      }
    results.push_back(r);
  }

  std::mt19937_64 rng(options.seed);
  {
    SuiteResult r{"solve_3sat vs brute force"};
    for (std::uint32_t i = 0; i < options.cases; ++i) {
      auto n = static_cast<std::uint32_t>(uniform_int(rng, 4, static_cast<int>(options.max_n)));
      Formula f = random_3cnf(n, static_cast<std::uint32_t>(uniform_int(rng, static_cast<int>(n), 5 * static_cast<int>(n))), rng);
      SearchStats stats;
      auto got = solve_3sat(f, stats);
      auto want = brute_force_sat(f);
      ++r.checked;
      if (got.has_value() != want.has_value() || (got && !evaluate(f, *got))) ++r.mismatches;
    }
    results.push_back(r);
  }
  {
    SuiteResult r{"solve_ball vs brute force"};
    for (std::uint32_t i = 0; i < options.cases; ++i) {
      auto n = static_cast<std::uint32_t>(uniform_int(rng, 3, static_cast<int>(options.max_n)));
      Formula f = random_3cnf(n, static_cast<std::uint32_t>(uniform_int(rng, 1, 5 * static_cast<int>(n))), rng);
      Assignment center = random_assignment(n, rng);
      int radius = uniform_int(rng, 0, static_cast<int>(n));
      SearchStats stats;
      auto got = solve_ball_at(f, center, radius, stats);
      auto want = brute_force_ball(f, center, radius);
      ++r.checked;
      if (got.has_value() != want.has_value() ||
          (got && (!evaluate(f, *got) || hamming_distance(*got, center) > static_cast<std::size_t>(radius))))
        ++r.mismatches;
    }
    results.push_back(r);
  }
  {
    SuiteResult r{"double_ball_search vs brute force"};
    for (std::uint32_t i = 0; i < options.cases; ++i) {
      InstanceSpec spec{Family::disjoint};
      spec.size = static_cast<std::uint32_t>(uniform_int(rng, 1, 3));
      spec.n = 3 * spec.size + static_cast<std::uint32_t>(uniform_int(rng, 0, 3));
      spec.clauses = static_cast<std::uint32_t>(uniform_int(rng, 1, 3 * static_cast<int>(spec.n)));
      spec.seed = rng();
      Formula f = generate(spec);
      ColorLayout layout(f);
      ColorState state;
      for (std::size_t c = 0; c < layout.clause_count(); ++c) state.clause_colors.push_back(kAllColors[uniform_int(rng, 0, 6)]);
      for (std::size_t v = 0; v < layout.outside_count(); ++v) state.outside_bits.push_back(uniform_int(rng, 0, 1));
      int s = uniform_int(rng, 0, 4);
      int t = uniform_int(rng, 0, 4);
      SearchStats stats;
      auto got = double_ball_search(f, layout, state, s, t, stats);
      auto want = brute_force_double_ball(f, state, s, t);
      ++r.checked;
      bool bad = got.has_value() != want.has_value();
      if (got) {
        ColorState reached = assignment_to_state(layout, *got);
        bad = bad || !evaluate(f, *got) || !d(state, reached).within(s) || !cost(state, reached).within(t);
      }
      r.mismatches += bad ? 1 : 0;
    }
    results.push_back(r);
  }
  {
    SuiteResult r{"exact case: csp vs double-ball vs brute force"};
    for (std::uint32_t i = 0; i < options.cases; ++i) {
      InstanceSpec spec{Family::disjoint};
      spec.size = static_cast<std::uint32_t>(uniform_int(rng, 1, 4));
      spec.n = static_cast<std::uint32_t>(uniform_int(rng, 3 * static_cast<int>(spec.size), 12));
      spec.clauses = static_cast<std::uint32_t>(uniform_int(rng, 1, 2 * static_cast<int>(spec.n)));
      spec.seed = rng();
      Formula f = generate(spec);
      const int m = static_cast<int>(spec.size);
      auto csp = solve_csp_bruteforce(translate_exact(f));
      SearchStats stats;
      auto db = solve_disjoint(f, m, stats);
      auto want = brute_force_ball(f, Assignment(f.n, true), m);
      ++r.checked;
      bool bad = csp.has_value() != want.has_value() || db.has_value() != want.has_value();
      if (csp) bad = bad || !evaluate(f, csp_solution_to_assignment(f, *csp));
      r.mismatches += bad ? 1 : 0;
    }
    results.push_back(r);
  }
  return results;
}

std::vector<BenchRow> run_bench(const std::string& family_text, int min_size, int max_size, std::uint64_t seed) {
  const Family family = parse_family(family_text);
  if (family != Family::share1 && family != Family::share2 && family != Family::disjoint)
    throw std::invalid_argument("bench families: share1-chain, share2-chain, disjoint");
  if (min_size < 1 || max_size < min_size) throw std::invalid_argument("bench sizes must satisfy 1 <= lo <= hi");
  const BranchConstants& bc = branch_constants();
  std::vector<BenchRow> rows;
  for (int size = min_size; size <= max_size; ++size) {
    BenchRow row;
    row.family = family_text;
    row.size = size;
    SearchStats stats;
    InstanceSpec spec{family};
    spec.size = static_cast<std::uint32_t>(size);
    spec.seed = derive_seed(seed, static_cast<std::uint64_t>(size));
    const auto start = std::chrono::steady_clock::now();
    if (family == Family::disjoint) {
      spec.n = 3 * spec.size + 3;
      spec.clauses = 4 * spec.size;
      Formula f = generate(spec);
      const int t = 2;
      const ExactCodeChoice& choice = cached_exact_code(spec.size, kDefaultExactBlockSize);
      solve_disjoint(f, size + t, stats);
      row.r_or_s = choice.s;
      row.t = t;
      row.code_size = choice.code.size();
      row.bound = static_cast<double>(choice.code.size()) * bc.a_db * bc.a_db * bc.b_db * bc.b_db *
                  std::pow(bc.a_db, choice.s) * std::pow(bc.b_db, t);
    } else {
      // Blocked shared variables make every pair cost two zeros, so r = 2k - 1
      // leaves the ball empty and the whole tree is explored.
      spec.block_shared = true;
      Formula f = generate(spec);
      const int r = 2 * size - 1;
      solve_ball(f, r, stats);
      row.r_or_s = r;
      row.bound = bc.ball_base * bc.ball_base * std::pow(bc.ball_base, r);
    }
    row.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    row.nodes = stats.nodes;
    row.leaves = stats.leaves;
    rows.push_back(row);
  }
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << kBenchCsvHeader << '\n';
  for (const BenchRow& r : rows)
    out << r.family << ',' << r.size << ',' << r.r_or_s << ',' << r.t << ',' << r.code_size << ',' << r.nodes << ','
        << r.leaves << ',' << r.bound << ',' << r.elapsed_ms << '\n';
}

}  // namespace ballsat
