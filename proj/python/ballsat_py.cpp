#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ballsat/ball_solver.hpp"
#include "ballsat/cnf.hpp"
#include "ballsat/covering_code.hpp"
#include "ballsat/csp_bridge.hpp"
#include "ballsat/double_ball.hpp"
#include "ballsat/generate.hpp"
#include "ballsat/harness.hpp"
#include "ballsat/oracles.hpp"
#include "ballsat/walk.hpp"

namespace py = pybind11;
using namespace ballsat;

namespace {

using Bits = std::vector<bool>;

Bits to_bits(const Assignment& a) {
  Bits out(a.size());
  for (Var v = 1; v <= a.size(); ++v) out[v - 1] = a[v];
  return out;
}

std::optional<Bits> to_bits(const std::optional<Assignment>& a) {
  if (!a) return std::nullopt;
  return to_bits(*a);
}

Assignment from_bits(const Bits& bits) {
  Assignment a(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) a.set(static_cast<Var>(i + 1), bits[i]);
  return a;
}

std::vector<std::vector<int>> clause_lists(const Formula& f) {
  std::vector<std::vector<int>> out;
  for (const Clause& c : f.clauses) {
    std::vector<int> lits;
    for (const Literal& l : c.literals) lits.push_back(l.to_dimacs());
    out.push_back(std::move(lits));
  }
  return out;
}

SolverOptions make_options(std::optional<int> radius, bool parallel, unsigned threads, int block_size,
                           int exact_block_size) {
  SolverOptions opt;
  opt.radius = radius;
  opt.parallel = parallel;
  opt.threads = threads;
  opt.hamming_block_size = block_size;
  opt.exact_block_size = exact_block_size;
  return opt;
}

}  // namespace

PYBIND11_MODULE(_ballsat, m) {
  m.doc() = "Deterministic 3-SAT solver built on covering codes and ball search";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Formula>(m, "Formula")
      .def(py::init([](std::uint32_t n, const std::vector<std::vector<int>>& clauses) {
             return Formula::from_dimacs_clauses(n, clauses);
           }),
           py::arg("n"), py::arg("clauses"))
      .def_readonly("n", &Formula::n)
      .def_property_readonly("clauses", &clause_lists)
      .def("to_dimacs",
           [](const Formula& f) {
             std::ostringstream out;
             write_dimacs(out, f);
             return out.str();
           })
      .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; })
      .def("__repr__", [](const Formula& f) {
        return "Formula(n=" + std::to_string(f.n) + ", clauses=" + std::to_string(f.clauses.size()) + ")";
      });

  py::class_<SearchStats>(m, "SearchStats")
      .def_readonly("nodes", &SearchStats::nodes)
      .def_readonly("leaves", &SearchStats::leaves)
      .def_readonly("max_depth", &SearchStats::max_depth)
      .def_readonly("code_sizes", &SearchStats::code_sizes)
      .def_property_readonly("elapsed_ms", [](const SearchStats& s) {
        return std::chrono::duration<double, std::milli>(s.elapsed).count();
      });

  m.def("parse_dimacs", [](const std::string& text) { return parse_dimacs(text); }, py::arg("text"));
  m.def("evaluate", [](const Formula& f, const Bits& a) { return evaluate(f, from_bits(a)); }, py::arg("formula"),
        py::arg("assignment"));
  m.def("brute_force_sat", [](const Formula& f) { return to_bits(brute_force_sat(f)); }, py::arg("formula"));

  m.def(
      "solve",
      [](const Formula& f, std::optional<int> radius, bool parallel, unsigned threads, int block_size,
         int exact_block_size) {
        SearchStats stats;
        std::optional<Assignment> found;
        {
          py::gil_scoped_release release;
          found = solve_3sat(f, stats, make_options(radius, parallel, threads, block_size, exact_block_size));
        }
        return py::make_tuple(to_bits(found), stats);
      },
      py::arg("formula"), py::arg("radius") = py::none(), py::arg("parallel") = false, py::arg("threads") = 0,
      py::arg("block_size") = kDefaultHammingBlockSize, py::arg("exact_block_size") = kDefaultExactBlockSize,
      "Returns (assignment or None, SearchStats).");

  m.def(
      "solve_ball",
      [](const Formula& f, const Bits& center, int radius) {
        if (center.size() != f.n) throw std::invalid_argument("center must have n entries");
        SearchStats stats;
        std::optional<Assignment> found;
        {
          py::gil_scoped_release release;
          found = solve_ball_at(f, from_bits(center), radius, stats);
        }
        return py::make_tuple(to_bits(found), stats);
      },
      py::arg("formula"), py::arg("center"), py::arg("radius"));

  m.def(
      "solve_exact_csp",
      [](const Formula& f) -> std::optional<Bits> {
        auto val = solve_csp_bruteforce(translate_exact(f));
        if (!val) return std::nullopt;
        return to_bits(csp_solution_to_assignment(f, *val));
      },
      py::arg("formula"), "Exact-assignment case through the domain-3 CSP; needs disjoint negative 3-clauses.");

  m.def(
      "hamming_code",
      [](std::uint32_t n, int r, int block_size) {
        const CoveringCode c = build_hamming_code(n, r, block_size);
        return c.words();
      },
      py::arg("n"), py::arg("radius"), py::arg("block_size") = kDefaultHammingBlockSize);

  m.def(
      "exact_code",
      [](std::uint32_t m_, int block_size) {
        const ExactCodeChoice& c = cached_exact_code(m_, block_size);
        return py::make_tuple(c.s, c.code.words());
      },
      py::arg("m"), py::arg("block_size") = kDefaultExactBlockSize,
      "Returns (s, words) with words as zero positions 0..2 per negative clause.");

  m.def("generate", [](const std::string& spec) { return generate(parse_instance_spec(spec)); }, py::arg("spec"),
        "Instance from text such as 'disjoint:m=3,n=12,seed=7'.");

  m.def(
      "schoening_walk",
      [](const Formula& f, std::uint64_t seed, std::uint64_t tries) {
        py::gil_scoped_release release;
        return to_bits(schoening_walk(f, seed, tries));
      },
      py::arg("formula"), py::arg("seed") = 1, py::arg("tries") = 1000);

  m.def("verify_constants", [] {
    std::vector<std::tuple<std::string, double, bool>> out;
    for (const ConstantCheck& c : verify_constants().checks) out.emplace_back(c.name, c.value, c.ok);
    return out;
  });

  m.def(
      "selftest",
      [](std::uint32_t max_n, std::uint32_t cases, std::uint64_t seed) {
        std::vector<std::tuple<std::string, std::uint64_t, std::uint64_t>> out;
        for (const SuiteResult& r : run_selftest({max_n, cases, seed})) out.emplace_back(r.name, r.checked, r.mismatches);
        return out;
      },
      py::arg("max_n") = 10, py::arg("cases") = 200, py::arg("seed") = 1,
      "Returns (suite, checked, mismatches) tuples.");
}
