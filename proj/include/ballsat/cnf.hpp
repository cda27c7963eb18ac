#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ballsat {

/// 1-based variable index.
using Var = std::uint32_t;

struct Literal {
  Var var = 0;
  bool positive = true;

  static Literal from_dimacs(int code) {
    return code > 0 ? Literal{static_cast<Var>(code), true}
                    : Literal{static_cast<Var>(-code), false};
  }
  int to_dimacs() const { return positive ? static_cast<int>(var) : -static_cast<int>(var); }
  Literal negated() const { return {var, !positive}; }

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

/// At most three literals over pairwise distinct variables. Empty means false.
struct Clause {
  std::vector<Literal> literals;

  std::size_t size() const { return literals.size(); }
  bool empty() const { return literals.empty(); }
  bool is_negative() const;
  bool mentions(Var v) const;
  /// Position of v within the clause, if present.
  std::optional<std::size_t> position_of(Var v) const;

  friend bool operator==(const Clause&, const Clause&) = default;
};

/// Truth assignment, addressed by 1-based variable index.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::size_t n, bool value = true) : bits_(n, value ? 1 : 0) {}

  static Assignment from_string(std::string_view bits);

  std::size_t size() const { return bits_.size(); }
  bool operator[](Var v) const { return bits_[v - 1] != 0; }
  void set(Var v, bool value) { bits_[v - 1] = value ? 1 : 0; }
  void flip(Var v) { bits_[v - 1] ^= 1; }
  std::size_t zeros() const;
  std::string to_string() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

std::size_t hamming_distance(const Assignment& a, const Assignment& b);

struct Formula {
  std::uint32_t n = 0;
  std::vector<Clause> clauses;

  /// Normalizes clauses (duplicate literals collapsed, tautologies dropped,
  /// repeated clauses removed) and validates widths and variable ranges.
  static Formula make(std::uint32_t n, std::vector<Clause> clauses);
  static Formula from_dimacs_clauses(std::uint32_t n, const std::vector<std::vector<int>>& clauses);

  bool has_empty_clause() const;
  /// Indices of clauses whose literals are all negative (empty clauses excluded).
  std::vector<std::size_t> negative_clauses() const;

  friend bool operator==(const Formula&, const Formula&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

Formula parse_dimacs(std::istream& in);
Formula parse_dimacs(std::string_view text);
void write_dimacs(std::ostream& out, const Formula& f);

bool evaluate(const Formula& f, const Assignment& a);
bool satisfies(const Clause& c, const Assignment& a);
/// Index of the first clause (in clause order) falsified by a.
std::optional<std::size_t> find_unsat_clause(const Formula& f, const Assignment& a);

/// Flips the sign of every literal whose variable is 0 in center, so that
/// center becomes the all-ones point of the returned formula.
Formula recenter(const Formula& f, const Assignment& center);
/// Maps an assignment between the original and recentered coordinates (self-inverse).
Assignment recenter_assignment(const Assignment& a, const Assignment& center);

Formula condition(const Formula& f, Var x, bool value);

// Structure of Neg(F). EmptyNegClause means F contains the empty clause.
struct EmptyNegClause {};
struct UnitNegative {
  std::size_t clause;
};
struct BinaryNegative {
  std::size_t clause;
};
struct SharePair {
  std::size_t first;
  std::size_t second;
  int shared;  // 1 or 2
};
struct Disjoint {
  std::vector<std::size_t> clauses;
};
using NegStructure = std::variant<EmptyNegClause, UnitNegative, BinaryNegative, SharePair, Disjoint>;

NegStructure classify_neg(const Formula& f);

/// Size of a greedily built set of pairwise variable-disjoint negative clauses.
/// Every assignment satisfying F sets at least this many variables to 0.
std::size_t disjoint_negative_packing(const Formula& f);

}  // namespace ballsat
