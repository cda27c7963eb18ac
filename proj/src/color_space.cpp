#include "ballsat/color_space.hpp"

#include <algorithm>
#include <stdexcept>

namespace ballsat {

std::optional<Color> color_from_bits(bool first, bool second, bool third) {
  unsigned v = (first ? 4U : 0U) | (second ? 2U : 0U) | (third ? 1U : 0U);
  if (v == 7) return std::nullopt;
  return static_cast<Color>(v);
}

std::string to_string(Color c) {
  std::string s = "000";
  for (std::size_t p = 0; p < 3; ++p)
    if (color_bit(c, p)) s[p] = '1';
  return s;
}

std::size_t color_index(Color c) {
  switch (c) {
    case Color::c011: return 0;
    case Color::c101: return 1;
    case Color::c110: return 2;
    case Color::c001: return 3;
    case Color::c010: return 4;
    case Color::c100: return 5;
    case Color::c000: return 6;
  }
  throw std::logic_error("invalid color");
}

const ColorGraph& ColorGraph::instance() {
  static const ColorGraph graph(
      {{Color::c011, Color::c101}, {Color::c101, Color::c110}, {Color::c110, Color::c011}},
      {{Color::c011, Color::c010},
       {Color::c101, Color::c001},
       {Color::c110, Color::c100},
       {Color::c010, Color::c000},
       {Color::c001, Color::c000},
       {Color::c100, Color::c000}});
  return graph;
}

ColorGraph::ColorGraph(std::vector<ColorEdge> solid, std::vector<ColorEdge> dotted)
    : solid_(std::move(solid)), dotted_(std::move(dotted)) {
  d_ = shortest_paths(solid_, dotted_);
  cost_ = shortest_paths(dotted_, solid_);
}

// Floyd-Warshall where edges in weight_one cost 1 and edges in weight_zero cost 0.
ColorGraph::Table ColorGraph::shortest_paths(const std::vector<ColorEdge>& weight_one,
                                             const std::vector<ColorEdge>& weight_zero) {
  Table t;
  for (auto& row : t) row.fill(Distance::infinity());
  for (std::size_t i = 0; i < 7; ++i) t[i][i] = 0;
  for (const auto& [a, b] : weight_one) {
    auto& cell = t[color_index(a)][color_index(b)];
    cell = std::min(cell, Distance(1));
  }
  for (const auto& [a, b] : weight_zero) t[color_index(a)][color_index(b)] = 0;
  for (std::size_t k = 0; k < 7; ++k)
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < 7; ++j) t[i][j] = std::min(t[i][j], t[i][k] + t[k][j]);
  return t;
}

std::optional<Color> ColorGraph::solid_successor(Color c) const {
  for (const auto& [a, b] : solid_)
    if (a == c) return b;
  return std::nullopt;
}

std::optional<Color> ColorGraph::dotted_successor(Color c) const {
  for (const auto& [a, b] : dotted_)
    if (a == c) return b;
  return std::nullopt;
}

ColorLayout::ColorLayout(const Formula& f) : n_(f.n), slots_(f.n + 1) {
  for (std::size_t ci : f.negative_clauses()) {
    const Clause& c = f.clauses[ci];
    if (c.size() != 3) throw std::invalid_argument("ColorLayout: negative clause of width != 3");
    std::array<Var, 3> vars{};
    for (std::uint8_t p = 0; p < 3; ++p) {
      Var v = c.literals[p].var;
      if (slots_[v].kind != Slot::Kind::none)
        throw std::invalid_argument("ColorLayout: negative clauses are not pairwise disjoint");
      slots_[v] = {Slot::Kind::clause, static_cast<std::uint32_t>(clause_vars_.size()), p};
      vars[p] = v;
    }
    clause_indices_.push_back(ci);
    clause_vars_.push_back(vars);
  }
  std::vector<bool> seen(f.n + 1, false);
  for (const Clause& c : f.clauses)
    for (const Literal& l : c.literals) seen[l.var] = true;
  for (Var v = 1; v <= f.n; ++v) {
    if (!seen[v] || slots_[v].kind != Slot::Kind::none) continue;
    slots_[v] = {Slot::Kind::outside, static_cast<std::uint32_t>(outside_.size()), 0};
    outside_.push_back(v);
  }
}

bool ColorState::is_exact() const {
  return std::all_of(clause_colors.begin(), clause_colors.end(), [](Color c) { return ballsat::is_exact(c); }) &&
         std::all_of(outside_bits.begin(), outside_bits.end(), [](std::uint8_t b) { return b != 0; });
}

namespace {

void check_same_shape(const ColorState& a, const ColorState& b) {
  if (a.clause_colors.size() != b.clause_colors.size() || a.outside_bits.size() != b.outside_bits.size())
    throw std::invalid_argument("color states have different structure");
}

}  // namespace

Distance d(const ColorState& from, const ColorState& to) {
  check_same_shape(from, to);
  const ColorGraph& g = ColorGraph::instance();
  Distance total = 0;
  for (std::size_t i = 0; i < from.clause_colors.size(); ++i)
    total += g.d(from.clause_colors[i], to.clause_colors[i]);
  return total;
}

Distance cost(const ColorState& from, const ColorState& to) {
  check_same_shape(from, to);
  const ColorGraph& g = ColorGraph::instance();
  Distance total = 0;
  for (std::size_t i = 0; i < from.clause_colors.size(); ++i)
    total += g.cost(from.clause_colors[i], to.clause_colors[i]);
  for (std::size_t i = 0; i < from.outside_bits.size(); ++i)
    total += ColorGraph::outside_cost(from.outside_bits[i] != 0, to.outside_bits[i] != 0);
  return total;
}

Assignment state_to_assignment(const ColorLayout& layout, const ColorState& state) {
  if (state.clause_colors.size() != layout.clause_count() || state.outside_bits.size() != layout.outside_count())
    throw std::invalid_argument("state does not match layout");
  Assignment a(layout.n(), true);
  for (std::size_t i = 0; i < layout.clause_count(); ++i)
    for (std::size_t p = 0; p < 3; ++p) a.set(layout.clause_vars(i)[p], color_bit(state.clause_colors[i], p));
  for (std::size_t i = 0; i < layout.outside_count(); ++i) a.set(layout.outside_vars()[i], state.outside_bits[i] != 0);
  return a;
}

ColorState assignment_to_state(const ColorLayout& layout, const Assignment& a) {
  if (a.size() != layout.n()) throw std::invalid_argument("assignment length does not match layout");
  ColorState s;
  s.clause_colors.reserve(layout.clause_count());
  for (std::size_t i = 0; i < layout.clause_count(); ++i) {
    const auto& vars = layout.clause_vars(i);
    auto c = color_from_bits(a[vars[0]], a[vars[1]], a[vars[2]]);
    if (!c) throw std::invalid_argument("assignment falsifies a negative clause");
    s.clause_colors.push_back(*c);
  }
  for (Var v : layout.outside_vars()) s.outside_bits.push_back(a[v] ? 1 : 0);
  return s;
}

ColorState exact_state(const std::vector<std::uint8_t>& zero_positions, std::size_t outside_count) {
  ColorState s;
  s.clause_colors.reserve(zero_positions.size());
  for (std::uint8_t p : zero_positions) s.clause_colors.push_back(exact_color_with_zero_at(p));
  s.outside_bits.assign(outside_count, 1);
  return s;
}

std::pair<ColorState, int> project_to_exact(const ColorState& s) {
  ColorState beta = s;
  int used = 0;
  for (Color& c : beta.clause_colors) {
    switch (c) {
      case Color::c001: c = Color::c101; used += 1; break;
      case Color::c010: c = Color::c011; used += 1; break;
      case Color::c100: c = Color::c110; used += 1; break;
      case Color::c000: c = Color::c011; used += 2; break;
      default: break;
    }
  }
  for (auto& b : beta.outside_bits) {
    if (!b) ++used;
    b = 1;
  }
  return {beta, used};
}

}  // namespace ballsat
