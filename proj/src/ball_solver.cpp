#include "ballsat/ball_solver.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <type_traits>
#include <variant>

#include "ballsat/double_ball.hpp"

namespace ballsat {

namespace {

template <class>
inline constexpr bool kAlwaysFalse = false;

class BallSearch {
 public:
  BallSearch(SearchStats& stats, const SolverOptions& options) : stats_(stats), options_(options) {}

  std::optional<Assignment> visit(const Formula& f, int r, int depth) {
    ++stats_.nodes;
    stats_.max_depth = std::max(stats_.max_depth, depth);
    if (r < 0 || f.has_empty_clause()) return leaf();
    if (f.negative_clauses().empty()) {
      ++stats_.leaves;
      return Assignment(f.n, true);
    }
    // Pairwise-disjoint negative clauses each need their own zero.
    if (disjoint_negative_packing(f) > static_cast<std::size_t>(r)) return leaf();

    return std::visit(
        [&](const auto& st) -> std::optional<Assignment> {
          using T = std::decay_t<decltype(st)>;
          if constexpr (std::is_same_v<T, EmptyNegClause>) {
            return leaf();
          } else if constexpr (std::is_same_v<T, UnitNegative>) {
            return branch(f, r, depth, {{var_at(f, st.clause, 0)}});
          } else if constexpr (std::is_same_v<T, BinaryNegative>) {
            return branch(f, r, depth, {{var_at(f, st.clause, 0)}, {var_at(f, st.clause, 1)}});
          } else if constexpr (std::is_same_v<T, SharePair>) {
            return branch(f, r, depth, share_branches(f, st));
          } else if constexpr (std::is_same_v<T, Disjoint>) {
            return solve_disjoint(f, r, stats_, options_.exact_block_size, depth + 1);
          } else {
            static_assert(kAlwaysFalse<T>);
          }
        },
        classify_neg(f));
  }

 private:
  std::optional<Assignment> leaf() {
    ++stats_.leaves;
    return std::nullopt;
  }

  static Var var_at(const Formula& f, std::size_t clause, std::size_t pos) {
    return f.clauses[clause].literals[pos].var;
  }

  // Each branch sets the listed variables to 0 and pays one unit of radius per variable.
  std::optional<Assignment> branch(const Formula& f, int r, int depth, const std::vector<std::vector<Var>>& branches) {
    for (const auto& zeros : branches) {
      Formula g = f;
      for (Var v : zeros) g = condition(g, v, false);
      auto found = visit(g, r - static_cast<int>(zeros.size()), depth + 1);
      if (found) {
        for (Var v : zeros) found->set(v, false);
        return found;
      }
    }
    return std::nullopt;
  }

  static std::vector<std::vector<Var>> share_branches(const Formula& f, const SharePair& sp) {
    const Clause& a = f.clauses[sp.first];
    const Clause& b = f.clauses[sp.second];
    std::vector<Var> shared;
    std::vector<Var> only_a;
    std::vector<Var> only_b;
    for (const Literal& l : a.literals) (b.mentions(l.var) ? shared : only_a).push_back(l.var);
    for (const Literal& l : b.literals)
      if (!a.mentions(l.var)) only_b.push_back(l.var);

    std::vector<std::vector<Var>> out;
    for (Var v : shared) out.push_back({v});
    if (sp.shared == 2) {
      // (x y z), (x y u): x, y, or both z and u.
      out.push_back({only_a[0], only_b[0]});
    } else {
      // (x y z), (x u v): x, or one of y,z together with one of u,v.
      for (Var p : only_a)
        for (Var q : only_b) out.push_back({p, q});
    }
    return out;
  }

  SearchStats& stats_;
  const SolverOptions& options_;
};

class Timer {
 public:
  explicit Timer(SearchStats& stats) : stats_(stats), start_(std::chrono::steady_clock::now()) {}
  ~Timer() { stats_.elapsed += std::chrono::steady_clock::now() - start_; }
  Timer(const Timer&) = delete;
  Timer& operator=(const Timer&) = delete;

 private:
  SearchStats& stats_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

std::optional<Assignment> solve_ball(const Formula& f, int r, SearchStats& stats, const SolverOptions& options) {
  Timer timer(stats);
  BallSearch search(stats, options);
  return search.visit(f, r, 0);
}

std::optional<Assignment> solve_ball_at(const Formula& f, const Assignment& center, int r, SearchStats& stats,
                                        const SolverOptions& options) {
  auto found = solve_ball(recenter(f, center), r, stats, options);
  if (!found) return std::nullopt;
  return recenter_assignment(*found, center);
}

std::optional<Assignment> solve_3sat(const Formula& f, SearchStats& stats, const SolverOptions& options) {
  Timer timer(stats);
  const int r = options.radius.value_or(choose_top_radius(f.n));
  if (r < 0 || static_cast<std::uint32_t>(r) > f.n) throw std::invalid_argument("radius must be in 0..n");
  // No negative clause: all-ones already satisfies f.
  if (!f.has_empty_clause() && f.negative_clauses().empty()) return Assignment(f.n, true);
  const CoveringCode code = build_hamming_code(f.n, r, options.hamming_block_size);
  stats.code_sizes.push_back(code.size());

  auto ball_query = [&](std::uint64_t index, SearchStats& local) -> std::optional<Assignment> {
    const Assignment center = code.assignment(index);
    BallSearch search(local, options);
    auto found = search.visit(recenter(f, center), r, 0);
    if (!found) return std::nullopt;
    return recenter_assignment(*found, center);
  };

  if (!options.parallel) {
    for (std::uint64_t i = 0; i < code.size(); ++i)
      if (auto found = ball_query(i, stats)) return found;
    return std::nullopt;
  }

  unsigned workers = options.threads != 0 ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex mutex;
  std::optional<Assignment> result;
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        SearchStats local;
        while (!stop.load(std::memory_order_relaxed)) {
          std::uint64_t i = next.fetch_add(1);
          if (i >= code.size()) break;
          if (auto found = ball_query(i, local)) {
            std::lock_guard lock(mutex);
            if (!result) result = std::move(found);
            stop = true;
          }
        }
        local.elapsed = {};
        std::lock_guard lock(mutex);
        stats.merge(local);
      });
    }
  }
  return result;
}

}  // namespace ballsat
