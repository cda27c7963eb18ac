#include "ballsat/walk.hpp"

#include "ballsat/generate.hpp"

namespace ballsat {

std::optional<Assignment> schoening_try(const Formula& f, std::mt19937_64& rng) {
  Assignment a(f.n);
  std::bernoulli_distribution coin(0.5);
  for (Var v = 1; v <= f.n; ++v) a.set(v, coin(rng));
  const std::uint64_t steps = 3ULL * f.n;
  for (std::uint64_t step = 0;; ++step) {
    auto unsat = find_unsat_clause(f, a);
    if (!unsat) return a;
    const Clause& c = f.clauses[*unsat];
    if (step == steps || c.empty()) return std::nullopt;
    std::uniform_int_distribution<std::size_t> pick(0, c.size() - 1);
    a.flip(c.literals[pick(rng)].var);
  }
}

std::optional<Assignment> schoening_walk(const Formula& f, std::uint64_t seed, std::uint64_t tries) {
  for (std::uint64_t i = 0; i < tries; ++i) {
    std::mt19937_64 rng(derive_seed(seed, i));
    if (auto found = schoening_try(f, rng)) return found;
  }
  return std::nullopt;
}

WalkSample schoening_sample(const Formula& f, std::uint64_t seed, std::uint64_t tries) {
  WalkSample sample;
  for (std::uint64_t i = 0; i < tries; ++i) {
    std::mt19937_64 rng(derive_seed(seed, i));
    ++sample.tries;
    if (auto found = schoening_try(f, rng)) {
      ++sample.successes;
      if (!evaluate(f, *found)) ++sample.invalid_witnesses;
    }
  }
  return sample;
}

}  // namespace ballsat
