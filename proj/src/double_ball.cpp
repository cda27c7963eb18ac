#include "ballsat/double_ball.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace ballsat {

const BranchConstants& branch_constants() {
  static const BranchConstants constants = [] {
    const double a = (5.0 + std::sqrt(57.0)) / 2.0;
    const double b = 3.0 * a * a / (a * a + a + 1.0);
    return BranchConstants{a, b, 1.0 / a, (1.0 + std::sqrt(17.0)) / 2.0};
  }();
  return constants;
}

namespace {

struct Move {
  bool outside = false;
  std::uint32_t index = 0;
  Color color = Color::c000;  // target color for clause moves; outside moves always go to 0
  int ds = 0;
  int dt = 0;

  friend bool operator==(const Move&, const Move&) = default;
};

class DoubleBallSearch {
 public:
  DoubleBallSearch(const Formula& f, const ColorLayout& layout, SearchStats& stats, const NodeObserver& observer)
      : f_(f), layout_(layout), graph_(ColorGraph::instance()), stats_(stats), observer_(observer) {}

  std::optional<Assignment> run(const ColorState& start, int s, int t, int depth) {
    for (Color c : start.clause_colors)
      if (static_cast<unsigned>(c) > 6) throw std::invalid_argument("malformed color state");
    state_ = start;
    assignment_ = state_to_assignment(layout_, state_);
    found_.reset();
    visit(s, t, depth);
    return found_;
  }

 private:
  std::uint64_t visit(int s, int t, int depth) {
    ++stats_.nodes;
    stats_.max_depth = std::max(stats_.max_depth, depth);
    auto leaf = [&] {
      ++stats_.leaves;
      if (observer_) observer_(s, t, 1);
      return std::uint64_t{1};
    };
    if (s < 0 || t < 0) return leaf();
    auto unsat = find_unsat_clause(f_, assignment_);
    if (!unsat) {
      found_ = assignment_;
      return leaf();
    }
    std::vector<Move> moves;
    for (const Literal& l : f_.clauses[*unsat].literals)
      for (const Move& mv : moves_for(l))
        if (std::find(moves.begin(), moves.end(), mv) == moves.end()) moves.push_back(mv);
    if (moves.empty()) return leaf();

    std::uint64_t leaves = 0;
    for (const Move& mv : moves) {
      if (mv.outside) {
        set_outside(mv.index, false);
        leaves += visit(s + mv.ds, t + mv.dt, depth + 1);
        set_outside(mv.index, true);
      } else {
        Color before = state_.clause_colors[mv.index];
        set_color(mv.index, mv.color);
        leaves += visit(s + mv.ds, t + mv.dt, depth + 1);
        set_color(mv.index, before);
      }
      if (found_) break;
    }
    if (observer_) observer_(s, t, leaves);
    return leaves;
  }

  // Recursive calls that change the current state so that l becomes true.
  std::vector<Move> moves_for(const Literal& l) const {
    const ColorLayout::Slot& slot = layout_.slot(l.var);
    if (slot.kind == ColorLayout::Slot::Kind::outside) {
      // Positive: the bit is 0 and no edge leads back to 1.
      if (l.positive) return {};
      return {Move{true, slot.index, Color::c000, 0, -1}};
    }
    assert(slot.kind == ColorLayout::Slot::Kind::clause);
    const Color c = state_.clause_colors[slot.index];
    const std::size_t q = slot.position;
    auto clause_move = [&](Color to, int ds, int dt) {
      assert(color_bit(to, q) == l.positive);
      return Move{false, slot.index, to, ds, dt};
    };

    if (!is_exact(c)) {
      auto next = graph_.dotted_successor(c);
      if (!next || color_bit(*next, q) != l.positive) return {};
      return {clause_move(*next, 0, -1)};
    }
    const std::size_t p = zero_position(c);
    const Color one_step = *graph_.solid_successor(c);
    if (q == p) return {clause_move(one_step, -1, 0)};
    if (q == (p + 1) % 3) return {clause_move(one_step, -1, 0), clause_move(Color::c000, 0, -2)};
    return {clause_move(*graph_.solid_successor(one_step), -2, 0), clause_move(*graph_.dotted_successor(c), 0, -1)};
  }

  void set_color(std::uint32_t clause, Color c) {
    state_.clause_colors[clause] = c;
    const auto& vars = layout_.clause_vars(clause);
    for (std::size_t p = 0; p < 3; ++p) assignment_.set(vars[p], color_bit(c, p));
  }

  void set_outside(std::uint32_t index, bool value) {
    state_.outside_bits[index] = value ? 1 : 0;
    assignment_.set(layout_.outside_vars()[index], value);
  }

  const Formula& f_;
  const ColorLayout& layout_;
  const ColorGraph& graph_;
  SearchStats& stats_;
  const NodeObserver& observer_;
  ColorState state_;
  Assignment assignment_;
  std::optional<Assignment> found_;
};

}  // namespace

std::optional<Assignment> double_ball_search(const Formula& f, const ColorLayout& layout, const ColorState& state,
                                             int s, int t, SearchStats& stats, const NodeObserver& observer,
                                             int depth) {
  DoubleBallSearch search(f, layout, stats, observer);
  return search.run(state, s, t, depth);
}

std::optional<Assignment> double_ball_search(const Formula& f, const ColorState& state, int s, int t,
                                             SearchStats& stats, const NodeObserver& observer) {
  ColorLayout layout(f);
  return double_ball_search(f, layout, state, s, t, stats, observer);
}

const ExactCodeChoice& cached_exact_code(std::uint32_t m, int block_size) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, int>, std::unique_ptr<ExactCodeChoice>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{m, block_size}];
  if (!slot) slot = std::make_unique<ExactCodeChoice>(build_exact_code(m, branch_constants().x, block_size));
  return *slot;
}

std::optional<Assignment> solve_disjoint(const Formula& f, int r, SearchStats& stats, int block_size, int depth) {
  ColorLayout layout(f);
  const auto m = static_cast<int>(layout.clause_count());
  ++stats.disjoint_calls;
  if (m > r) return std::nullopt;
  const int t = r - m;
  if (m == 0) return double_ball_search(f, layout, exact_state({}, layout.outside_count()), 0, t, stats, {}, depth);

  const ExactCodeChoice& choice = cached_exact_code(static_cast<std::uint32_t>(m), block_size);
  for (std::uint64_t i = 0; i < choice.code.size(); ++i) {
    ColorState start = exact_state(choice.code.word(i), layout.outside_count());
    if (auto found = double_ball_search(f, layout, start, choice.s, t, stats, {}, depth)) return found;
  }
  return std::nullopt;
}

}  // namespace ballsat
