#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ballsat/cnf.hpp"

namespace ballsat {

/// Nonnegative integer or infinity. Addition saturates at infinity.
class Distance {
 public:
  constexpr Distance() = default;
  constexpr Distance(std::uint32_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  static constexpr Distance infinity() { return Distance(kInf); }

  constexpr bool is_infinite() const { return v_ == kInf; }
  constexpr std::uint32_t value() const { return v_; }

  friend constexpr Distance operator+(Distance a, Distance b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return Distance(a.v_ + b.v_);
  }
  Distance& operator+=(Distance o) { return *this = *this + o; }
  friend constexpr bool operator==(Distance, Distance) = default;
  friend constexpr auto operator<=>(Distance, Distance) = default;
  /// True iff finite and at most budget (negative budgets admit nothing).
  constexpr bool within(int budget) const {
    return !is_infinite() && budget >= 0 && v_ <= static_cast<std::uint32_t>(budget);
  }

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(v_); }

 private:
  static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t v_ = 0;
};

/// A satisfying pattern of a negative 3-clause, as the values of its three
/// variables in clause-literal order. Bit 2 holds the first variable.
enum class Color : std::uint8_t {
  c000 = 0b000,
  c001 = 0b001,
  c010 = 0b010,
  c011 = 0b011,
  c100 = 0b100,
  c101 = 0b101,
  c110 = 0b110,
};

inline constexpr std::array<Color, 7> kAllColors = {Color::c011, Color::c101, Color::c110, Color::c001,
                                                    Color::c010, Color::c100, Color::c000};
inline constexpr std::array<Color, 3> kExactColors = {Color::c011, Color::c101, Color::c110};

constexpr bool color_bit(Color c, std::size_t pos) {
  return ((static_cast<unsigned>(c) >> (2 - pos)) & 1U) != 0;
}
constexpr bool is_exact(Color c) { return c == Color::c011 || c == Color::c101 || c == Color::c110; }
/// Position (0..2) of the single zero of an exact color.
constexpr std::size_t zero_position(Color c) {
  return c == Color::c011 ? 0 : (c == Color::c101 ? 1 : 2);
}
constexpr Color exact_color_with_zero_at(std::size_t pos) { return kExactColors[pos % 3]; }
std::optional<Color> color_from_bits(bool first, bool second, bool third);
std::string to_string(Color c);
/// Dense index 0..6 (order of kAllColors).
std::size_t color_index(Color c);

using ColorEdge = std::pair<Color, Color>;

/// Seven-color graph with solid (horizontal) and dotted (vertical) edges.
/// d counts solid edges and cost counts dotted edges on optimal directed paths.
class ColorGraph {
 public:
  static const ColorGraph& instance();

  ColorGraph(std::vector<ColorEdge> solid, std::vector<ColorEdge> dotted);

  const std::vector<ColorEdge>& solid_edges() const { return solid_; }
  const std::vector<ColorEdge>& dotted_edges() const { return dotted_; }
  std::optional<Color> solid_successor(Color c) const;
  std::optional<Color> dotted_successor(Color c) const;

  Distance d(Color from, Color to) const { return d_[color_index(from)][color_index(to)]; }
  Distance cost(Color from, Color to) const { return cost_[color_index(from)][color_index(to)]; }

  // Two-valued graph for variables outside Neg(F): a single dotted edge 1 -> 0.
  static Distance outside_d(bool, bool) { return 0; }
  static Distance outside_cost(bool from, bool to) {
    if (from == to) return 0;
    return from ? Distance(1) : Distance::infinity();
  }

 private:
  using Table = std::array<std::array<Distance, 7>, 7>;
  static Table shortest_paths(const std::vector<ColorEdge>& weight_one, const std::vector<ColorEdge>& weight_zero);

  std::vector<ColorEdge> solid_;
  std::vector<ColorEdge> dotted_;
  Table d_{};
  Table cost_{};
};

/// Layout of a formula whose negative clauses are pairwise-disjoint 3-clauses:
/// the negative clauses in clause order and the remaining variables V'.
class ColorLayout {
 public:
  explicit ColorLayout(const Formula& f);

  struct Slot {
    enum class Kind : std::uint8_t { none, clause, outside } kind = Kind::none;
    std::uint32_t index = 0;  // negative-clause ordinal or V' ordinal
    std::uint8_t position = 0;
  };

  std::uint32_t n() const { return n_; }
  std::size_t clause_count() const { return clause_vars_.size(); }
  std::size_t outside_count() const { return outside_.size(); }
  const std::array<Var, 3>& clause_vars(std::size_t i) const { return clause_vars_[i]; }
  const std::vector<std::size_t>& clause_indices() const { return clause_indices_; }
  const std::vector<Var>& outside_vars() const { return outside_; }
  const Slot& slot(Var v) const { return slots_[v]; }

 private:
  std::uint32_t n_ = 0;
  std::vector<std::size_t> clause_indices_;
  std::vector<std::array<Var, 3>> clause_vars_;
  std::vector<Var> outside_;
  std::vector<Slot> slots_;
};

struct ColorState {
  std::vector<Color> clause_colors;
  std::vector<std::uint8_t> outside_bits;

  bool is_exact() const;
  friend bool operator==(const ColorState&, const ColorState&) = default;
};

/// Horizontal distance: sum of per-clause d (outside variables contribute 0).
Distance d(const ColorState& from, const ColorState& to);
/// Vertical distance: per-clause cost plus outside-variable cost.
Distance cost(const ColorState& from, const ColorState& to);

/// Variables not mentioned by F take the value 1.
Assignment state_to_assignment(const ColorLayout& layout, const ColorState& state);
ColorState assignment_to_state(const ColorLayout& layout, const Assignment& a);
/// Exact state with every outside bit 1 and clause colors from zero positions 0..2.
ColorState exact_state(const std::vector<std::uint8_t>& zero_positions, std::size_t outside_count);

/// Canonical exact state beta with d(beta, s) = 0; second is cost(beta, s).
std::pair<ColorState, int> project_to_exact(const ColorState& s);

}  // namespace ballsat
