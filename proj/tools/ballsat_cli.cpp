// Command-line driver: solve, ball, selftest, bench.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "ballsat/ball_solver.hpp"
#include "ballsat/cnf.hpp"
#include "ballsat/harness.hpp"

namespace {

using namespace ballsat;
using json = nlohmann::json;

constexpr int kExitSat = 10;
constexpr int kExitUnsat = 20;
constexpr int kExitError = 1;

Formula load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_dimacs(in);
}

std::string witness_line(const Assignment& a) {
  std::ostringstream out;
  out << 'v';
  for (Var v = 1; v <= a.size(); ++v) out << ' ' << (a[v] ? static_cast<long>(v) : -static_cast<long>(v));
  out << " 0";
  return out.str();
}

struct Report {
  std::string instance;
  std::string mode;
  int radius = 0;
  bool include_witness = false;
};

void write_report(const std::string& path, const Report& rep, const Formula& f, const SearchStats& stats,
                  const std::optional<Assignment>& witness) {
  json j;
  j["schema"] = "1";
  j["instance"] = rep.instance;
  j["n"] = f.n;
  j["clause_count"] = f.clauses.size();
  j["mode"] = rep.mode;
  j["radius"] = rep.radius;
  j["code_sizes"] = stats.code_sizes;
  j["nodes"] = stats.nodes;
  j["leaves"] = stats.leaves;
  j["max_depth"] = stats.max_depth;
  j["elapsed_ms"] = std::chrono::duration<double, std::milli>(stats.elapsed).count();
  j["verdict"] = witness ? "SAT" : "UNSAT";
  if (witness && rep.include_witness) {
    std::vector<long> lits;
    for (Var v = 1; v <= witness->size(); ++v) lits.push_back((*witness)[v] ? static_cast<long>(v) : -static_cast<long>(v));
    j["witness"] = lits;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

// Prints the verdict; a witness is re-checked against the formula first.
int emit(const Formula& f, const std::optional<Assignment>& witness) {
  if (!witness) {
    std::cout << "s UNSATISFIABLE" << std::endl;
    return kExitUnsat;
  }
  if (!evaluate(f, *witness)) {
    std::cerr << "internal error: witness does not satisfy the formula" << std::endl;
    return kExitError;
  }
  std::cout << "s SATISFIABLE\n" << witness_line(*witness) << std::endl;
  return kExitSat;
}

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  auto num = [&](std::string_view s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) throw std::invalid_argument("bad size range '" + text + "'");
    return v;
  };
  if (dots == std::string::npos) {
    int v = num(text);
    return {v, v};
  }
  return {num(std::string_view(text).substr(0, dots)), num(std::string_view(text).substr(dots + 2))};
}

Assignment parse_center(const std::string& text, std::uint32_t n) {
  std::string bits = text;
  if (bits.find_first_not_of("01") != std::string::npos) {
    std::ifstream in(text);
    if (!in) throw std::invalid_argument("--center must be a bit string or a readable file");
    in >> bits;
  }
  if (bits.size() != n) throw std::invalid_argument("--center must have exactly n bits");
  return Assignment::from_string(bits);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic local-search 3-SAT solver"};
  app.require_subcommand(1);

  SolverOptions options;
  std::string path;
  std::string stats_path;
  bool stats_witness = false;
  bool deterministic = false;
  int radius = -1;

  auto add_solver_flags = [&](CLI::App* cmd) {
    cmd->add_option("--block-size", options.hamming_block_size, "Hamming covering-code block size (1..16)");
    cmd->add_option("--exact-block-size", options.exact_block_size, "Exact-state covering-code block size (1..10)");
    cmd->add_option("--stats", stats_path, "Write a JSON run report");
    cmd->add_flag("--stats-witness", stats_witness, "Include the witness in the JSON report");
  };

  auto* solve = app.add_subcommand("solve", "Solve a DIMACS 3-CNF instance");
  solve->add_option("file", path, "DIMACS CNF file")->required();
  solve->add_option("--radius", radius, "Ball radius (default: n/(a+1) rounded)");
  auto* par = solve->add_flag("--parallel", options.parallel, "Search codewords on worker threads");
  solve->add_flag("--deterministic", deterministic, "Search codewords sequentially (default)")->excludes(par);
  solve->add_option("--threads", options.threads, "Worker threads for --parallel (0: all cores)");
  std::uint64_t unused_seed = 0;
  solve->add_option("--seed", unused_seed, "Accepted for interface symmetry; the solver is deterministic");
  add_solver_flags(solve);

  std::string center_text;
  auto* ball = app.add_subcommand("ball", "Search a Hamming ball for a satisfying assignment");
  ball->add_option("file", path, "DIMACS CNF file")->required();
  ball->add_option("--center", center_text, "Center as an n-bit string or a file holding one")->required();
  ball->add_option("--radius", radius, "Ball radius")->required()->check(CLI::NonNegativeNumber);
  add_solver_flags(ball);

  SelftestOptions st;
  auto* selftest = app.add_subcommand("selftest", "Run oracle-equivalence suites and constant checks");
  selftest->add_option("--max-n", st.max_n, "Largest variable count")->check(CLI::Range(4, 22));
  selftest->add_option("--cases", st.cases, "Instances per suite");
  selftest->add_option("--seed", st.seed, "Random seed");

  std::string family = "share1-chain";
  std::string sizes = "2..8";
  std::string format = "csv";
  std::uint64_t bench_seed = 1;
  auto* bench = app.add_subcommand("bench", "Leaf counts against analytic bounds");
  bench->add_option("--family", family, "share1-chain | share2-chain | disjoint");
  bench->add_option("--sizes", sizes, "Size range lo..hi");
  bench->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  bench->add_option("--seed", bench_seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*solve || *ball) {
      const Formula f = load(path);
      SearchStats stats;
      std::optional<Assignment> witness;
      Report rep{path, "", 0, stats_witness};
      if (*solve) {
        if (radius >= 0) options.radius = radius;
        rep.mode = options.parallel ? "parallel" : "deterministic";
        rep.radius = options.radius.value_or(choose_top_radius(f.n));
        witness = solve_3sat(f, stats, options);
      } else {
        const Assignment center = parse_center(center_text, f.n);
        if (static_cast<std::uint32_t>(radius) > f.n) radius = static_cast<int>(f.n);
        rep.mode = "ball";
        rep.radius = radius;
        witness = solve_ball_at(f, center, radius, stats, options);
      }
      std::cout << "c nodes " << stats.nodes << " leaves " << stats.leaves << '\n';
      if (!stats_path.empty()) write_report(stats_path, rep, f, stats, witness);
      return emit(f, witness);
    }
    if (*selftest) {
      bool ok = true;
      for (const SuiteResult& r : run_selftest(st)) {
        std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name << " (" << r.checked << " checks, " << r.mismatches
                  << " mismatches)\n";
        ok = ok && r.ok();
      }
      return ok ? 0 : kExitError;
    }
    if (*bench) {
      auto [lo, hi] = parse_range(sizes);
      auto rows = run_bench(family, lo, hi, bench_seed);
      if (format == "csv") {
        write_bench_csv(std::cout, rows);
      } else {
        json out = json::array();
        for (const BenchRow& r : rows)
          out.push_back({{"family", r.family}, {"size", r.size}, {"r_or_s", r.r_or_s}, {"t", r.t},
                         {"code_size", r.code_size}, {"nodes", r.nodes}, {"leaves", r.leaves}, {"bound", r.bound},
                         {"elapsed_ms", r.elapsed_ms}});
        std::cout << out.dump(2) << '\n';
      }
      for (const BenchRow& r : rows)
        if (static_cast<double>(r.leaves) > r.bound) return kExitError;
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << std::endl;
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitError;
  }
  return kExitError;
}
