#include "ballsat/generate.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <variant>

namespace ballsat {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::string family_name(Family f) {
  switch (f) {
    case Family::uniform: return "uniform";
    case Family::planted: return "planted";
    case Family::disjoint: return "disjoint";
    case Family::share1: return "share1";
    case Family::share2: return "share2";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "uniform" || name == "uniform-random") return Family::uniform;
  if (name == "planted" || name == "planted-satisfiable") return Family::planted;
  if (name == "disjoint" || name == "disjoint-negative") return Family::disjoint;
  if (name == "share1" || name == "share1-chain") return Family::share1;
  if (name == "share2" || name == "share2-chain") return Family::share2;
  throw std::invalid_argument("unknown instance family '" + std::string(name) + "'");
}

InstanceSpec parse_instance_spec(std::string_view text) {
  InstanceSpec spec;
  auto colon = text.find(':');
  spec.family = parse_family(text.substr(0, colon));
  if (colon == std::string_view::npos) return spec;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("expected key=value in instance spec");
    std::string_view key = item.substr(0, eq);
    std::string_view value = item.substr(eq + 1);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size())
      throw std::invalid_argument("invalid number '" + std::string(value) + "' in instance spec");
    if (key == "n")
      spec.n = static_cast<std::uint32_t>(v);
    else if (key == "clauses")
      spec.clauses = static_cast<std::uint32_t>(v);
    else if (key == "m" || key == "k")
      spec.size = static_cast<std::uint32_t>(v);
    else if (key == "block")
      spec.block_shared = v != 0;
    else if (key == "seed")
      spec.seed = v;
    else
      throw std::invalid_argument("unknown key '" + std::string(key) + "' in instance spec");
  }
  return spec;
}

std::string to_string(const InstanceSpec& spec) {
  std::string out = family_name(spec.family) + ":";
  if (spec.family == Family::disjoint) out += "m=" + std::to_string(spec.size) + ",";
  if (spec.family == Family::share1 || spec.family == Family::share2) out += "k=" + std::to_string(spec.size) + ",";
  out += "n=" + std::to_string(spec.n) + ",clauses=" + std::to_string(spec.clauses);
  if (spec.block_shared) out += ",block=1";
  out += ",seed=" + std::to_string(spec.seed);
  return out;
}

namespace {

std::vector<Var> pick_vars(std::uint32_t n, std::size_t width, std::mt19937_64& rng) {
  std::vector<Var> vars;
  std::uniform_int_distribution<Var> pick(1, n);
  while (vars.size() < width) {
    Var v = pick(rng);
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  }
  return vars;
}

Clause random_clause(std::uint32_t n, std::size_t width, std::mt19937_64& rng) {
  Clause c;
  std::bernoulli_distribution coin(0.5);
  for (Var v : pick_vars(n, width, rng)) c.literals.push_back({v, coin(rng)});
  return c;
}

// A random clause of width 2 or 3 with at least one positive literal.
Clause mixed_clause(std::uint32_t n, std::mt19937_64& rng) {
  std::size_t width = std::min<std::size_t>(n, std::bernoulli_distribution(2.0 / 3.0)(rng) ? 3 : 2);
  Clause c = random_clause(n, width, rng);
  if (c.is_negative()) c.literals[std::uniform_int_distribution<std::size_t>(0, c.size() - 1)(rng)].positive = true;
  return c;
}

Clause negative(std::initializer_list<Var> vars) {
  Clause c;
  for (Var v : vars) c.literals.push_back({v, false});
  return c;
}

}  // namespace

Formula random_3cnf(std::uint32_t n, std::uint32_t clauses, std::mt19937_64& rng) {
  if (n < 3) throw std::invalid_argument("random_3cnf needs n >= 3");
  std::vector<Clause> cs;
  for (std::uint32_t i = 0; i < clauses; ++i) cs.push_back(random_clause(n, 3, rng));
  return Formula::make(n, std::move(cs));
}

GeneratedInstance generate_instance(const InstanceSpec& spec) {
  std::mt19937_64 rng(derive_seed(spec.seed, static_cast<std::uint64_t>(spec.family)));
  GeneratedInstance out;
  std::vector<Clause> cs;
  std::uint32_t n = spec.n;

  switch (spec.family) {
    case Family::uniform: {
      n = std::max<std::uint32_t>(n, 3);
      out.formula = random_3cnf(n, spec.clauses, rng);
      return out;
    }
    case Family::planted: {
      n = std::max<std::uint32_t>(n, 3);
      Assignment hidden(n);
      std::bernoulli_distribution coin(0.5);
      for (Var v = 1; v <= n; ++v) hidden.set(v, coin(rng));
      while (cs.size() < spec.clauses) {
        Clause c = random_clause(n, 3, rng);
        if (satisfies(c, hidden)) cs.push_back(std::move(c));
      }
      out.formula = Formula::make(n, std::move(cs));
      if (!evaluate(out.formula, hidden)) throw std::logic_error("planted assignment does not satisfy instance");
      out.planted = hidden;
      return out;
    }
    case Family::disjoint: {
      const std::uint32_t m = spec.size;
      if (n == 0) n = std::max<std::uint32_t>(3 * m, 1);
      if (3 * m > n) throw std::invalid_argument("disjoint family needs n >= 3m");
      for (std::uint32_t i = 0; i < m; ++i) cs.push_back(negative({3 * i + 1, 3 * i + 2, 3 * i + 3}));
      if (n >= 2)
        for (std::uint32_t i = 0; i < spec.clauses; ++i) cs.push_back(mixed_clause(n, rng));
      out.formula = Formula::make(n, std::move(cs));
      auto st = classify_neg(out.formula);
      const auto* dj = std::get_if<Disjoint>(&st);
      if (!dj || dj->clauses.size() != m) throw std::logic_error("disjoint family promise violated");
      return out;
    }
    case Family::share1:
    case Family::share2: {
      const std::uint32_t k = spec.size;
      const std::uint32_t width = spec.family == Family::share1 ? 5 : 4;
      if (k == 0) throw std::invalid_argument("share chains need k >= 1");
      if (n == 0) n = width * k;
      if (width * k > n) throw std::invalid_argument("share chain does not fit in n variables");
      for (std::uint32_t i = 0; i < k; ++i) {
        const Var b = width * i;
        if (spec.family == Family::share1) {
          cs.push_back(negative({b + 1, b + 2, b + 3}));
          cs.push_back(negative({b + 1, b + 4, b + 5}));
          if (spec.block_shared) cs.push_back(Clause{{{b + 1, true}}});
        } else {
          cs.push_back(negative({b + 1, b + 2, b + 3}));
          cs.push_back(negative({b + 1, b + 2, b + 4}));
          if (spec.block_shared) {
            cs.push_back(Clause{{{b + 1, true}}});
            cs.push_back(Clause{{{b + 2, true}}});
          }
        }
      }
      for (std::uint32_t i = 0; i < spec.clauses; ++i) cs.push_back(mixed_clause(n, rng));
      out.formula = Formula::make(n, std::move(cs));
      auto st = classify_neg(out.formula);
      const auto* sp = std::get_if<SharePair>(&st);
      if (!sp || sp->shared != (spec.family == Family::share1 ? 1 : 2))
        throw std::logic_error("share chain promise violated");
      return out;
    }
  }
  throw std::logic_error("unhandled family");
}

}  // namespace ballsat
