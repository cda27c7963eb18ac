#include "ballsat/cnf.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace ballsat {

bool Clause::is_negative() const {
  return std::none_of(literals.begin(), literals.end(), [](const Literal& l) { return l.positive; });
}

bool Clause::mentions(Var v) const { return position_of(v).has_value(); }

std::optional<std::size_t> Clause::position_of(Var v) const {
  for (std::size_t i = 0; i < literals.size(); ++i)
    if (literals[i].var == v) return i;
  return std::nullopt;
}

Assignment Assignment::from_string(std::string_view bits) {
  Assignment a(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1')
      throw std::invalid_argument("assignment string must consist of 0 and 1");
    a.bits_[i] = bits[i] == '1' ? 1 : 0;
  }
  return a;
}

std::size_t Assignment::zeros() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 0));
}

std::string Assignment::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) s[i] = '1';
  return s;
}

std::size_t hamming_distance(const Assignment& a, const Assignment& b) {
  if (a.size() != b.size()) throw std::invalid_argument("hamming_distance: length mismatch");
  std::size_t d = 0;
  for (Var v = 1; v <= a.size(); ++v) d += a[v] != b[v];
  return d;
}

namespace {

// Collapses repeated literals; nullopt for a tautology.
std::optional<Clause> normalize(const Clause& c) {
  Clause out;
  for (const Literal& l : c.literals) {
    auto same_var = std::find_if(out.literals.begin(), out.literals.end(),
                                 [&](const Literal& o) { return o.var == l.var; });
    if (same_var == out.literals.end())
      out.literals.push_back(l);
    else if (same_var->positive != l.positive)
      return std::nullopt;
  }
  return out;
}

std::vector<Literal> sorted_key(const Clause& c) {
  std::vector<Literal> key = c.literals;
  std::sort(key.begin(), key.end());
  return key;
}

// Keeps the first occurrence of each clause (as a literal set).
std::vector<Clause> dedupe(std::vector<Clause> clauses) {
  std::set<std::vector<Literal>> seen;
  std::vector<Clause> out;
  out.reserve(clauses.size());
  for (Clause& c : clauses)
    if (seen.insert(sorted_key(c)).second) out.push_back(std::move(c));
  return out;
}

}  // namespace

Formula Formula::make(std::uint32_t n, std::vector<Clause> clauses) {
  std::vector<Clause> kept;
  kept.reserve(clauses.size());
  for (const Clause& c : clauses) {
    for (const Literal& l : c.literals)
      if (l.var == 0 || l.var > n) throw std::invalid_argument("variable index out of range");
    auto norm = normalize(c);
    if (!norm) continue;
    if (norm->size() > 3) throw std::invalid_argument("clause wider than 3");
    kept.push_back(std::move(*norm));
  }
  return Formula{n, dedupe(std::move(kept))};
}

Formula Formula::from_dimacs_clauses(std::uint32_t n, const std::vector<std::vector<int>>& clauses) {
  std::vector<Clause> cs;
  cs.reserve(clauses.size());
  for (const auto& lits : clauses) {
    Clause c;
    for (int code : lits) {
      if (code == 0) throw std::invalid_argument("literal 0 is not allowed");
      c.literals.push_back(Literal::from_dimacs(code));
    }
    cs.push_back(std::move(c));
  }
  return make(n, std::move(cs));
}

bool Formula::has_empty_clause() const {
  return std::any_of(clauses.begin(), clauses.end(), [](const Clause& c) { return c.empty(); });
}

std::vector<std::size_t> Formula::negative_clauses() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < clauses.size(); ++i)
    if (!clauses[i].empty() && clauses[i].is_negative()) out.push_back(i);
  return out;
}

Formula parse_dimacs(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  long long n = 0;
  std::vector<Clause> clauses;
  Clause current;
  std::size_t current_line = 0;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first[0] == 'c') continue;
    if (first[0] == '%') break;  // SATLIB trailer
    if (first == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      std::string fmt;
      long long m = 0;
      if (!(ls >> fmt >> n >> m) || fmt != "cnf" || n < 0 || m < 0)
        throw ParseError(line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
      std::string rest;
      if (ls >> rest) throw ParseError(line_no, "trailing tokens after header");
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(line_no, "clause before 'p cnf' header");

    std::istringstream toks(line);
    std::string tok;
    while (toks >> tok) {
      long long code = 0;
      std::size_t used = 0;
      try {
        code = std::stoll(tok, &used);
      } catch (const std::exception&) {
        throw ParseError(line_no, "invalid literal '" + tok + "'");
      }
      if (used != tok.size()) throw ParseError(line_no, "invalid literal '" + tok + "'");
      if (current.literals.empty()) current_line = line_no;
      if (code == 0) {
        auto norm = normalize(current);
        if (norm) {
          if (norm->size() > 3)
            throw ParseError(current_line, "clause has more than 3 distinct variables");
          clauses.push_back(std::move(*norm));
        }
        current.literals.clear();
        continue;
      }
      if (code > n || -code > n)
        throw ParseError(line_no, "variable index " + std::to_string(code < 0 ? -code : code) +
                                      " exceeds declared " + std::to_string(n));
      current.literals.push_back(Literal::from_dimacs(static_cast<int>(code)));
    }
  }
  if (!have_header) throw ParseError(line_no, "missing 'p cnf' header");
  if (!current.literals.empty()) throw ParseError(current_line, "clause not terminated by 0");
  return Formula{static_cast<std::uint32_t>(n), dedupe(std::move(clauses))};
}

Formula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

void write_dimacs(std::ostream& out, const Formula& f) {
  out << "p cnf " << f.n << ' ' << f.clauses.size() << '\n';
  for (const Clause& c : f.clauses) {
    for (const Literal& l : c.literals) out << l.to_dimacs() << ' ';
    out << "0\n";
  }
}

bool satisfies(const Clause& c, const Assignment& a) {
  return std::any_of(c.literals.begin(), c.literals.end(),
                     [&](const Literal& l) { return a[l.var] == l.positive; });
}

std::optional<std::size_t> find_unsat_clause(const Formula& f, const Assignment& a) {
  if (a.size() != f.n) throw std::invalid_argument("assignment length does not match formula");
  for (std::size_t i = 0; i < f.clauses.size(); ++i)
    if (!satisfies(f.clauses[i], a)) return i;
  return std::nullopt;
}

bool evaluate(const Formula& f, const Assignment& a) { return !find_unsat_clause(f, a).has_value(); }

Formula recenter(const Formula& f, const Assignment& center) {
  if (center.size() != f.n) throw std::invalid_argument("center length does not match formula");
  Formula out = f;
  for (Clause& c : out.clauses)
    for (Literal& l : c.literals)
      if (!center[l.var]) l.positive = !l.positive;
  return out;
}

Assignment recenter_assignment(const Assignment& a, const Assignment& center) {
  if (center.size() != a.size()) throw std::invalid_argument("center length does not match assignment");
  Assignment out = a;
  for (Var v = 1; v <= a.size(); ++v)
    if (!center[v]) out.flip(v);
  return out;
}

Formula condition(const Formula& f, Var x, bool value) {
  std::vector<Clause> out;
  out.reserve(f.clauses.size());
  for (const Clause& c : f.clauses) {
    auto pos = c.position_of(x);
    if (!pos) {
      out.push_back(c);
      continue;
    }
    if (c.literals[*pos].positive == value) continue;
    Clause shrunk = c;
    shrunk.literals.erase(shrunk.literals.begin() + static_cast<std::ptrdiff_t>(*pos));
    out.push_back(std::move(shrunk));
  }
  return Formula{f.n, dedupe(std::move(out))};
}

namespace {

int shared_vars(const Clause& a, const Clause& b) {
  int k = 0;
  for (const Literal& l : a.literals) k += b.mentions(l.var);
  return k;
}

}  // namespace

NegStructure classify_neg(const Formula& f) {
  if (f.has_empty_clause()) return EmptyNegClause{};
  const auto neg = f.negative_clauses();
  for (std::size_t i : neg)
    if (f.clauses[i].size() == 1) return UnitNegative{i};
  for (std::size_t i : neg)
    if (f.clauses[i].size() == 2) return BinaryNegative{i};

  std::optional<SharePair> share1;
  for (std::size_t a = 0; a < neg.size(); ++a) {
    for (std::size_t b = a + 1; b < neg.size(); ++b) {
      int k = shared_vars(f.clauses[neg[a]], f.clauses[neg[b]]);
      if (k >= 2) return SharePair{neg[a], neg[b], 2};
      if (k == 1 && !share1) share1 = SharePair{neg[a], neg[b], 1};
    }
  }
  if (share1) return *share1;
  return Disjoint{neg};
}

std::size_t disjoint_negative_packing(const Formula& f) {
  std::vector<Var> used;
  std::size_t count = 0;
  for (std::size_t i : f.negative_clauses()) {
    const Clause& c = f.clauses[i];
    bool clash = std::any_of(c.literals.begin(), c.literals.end(), [&](const Literal& l) {
      return std::find(used.begin(), used.end(), l.var) != used.end();
    });
    if (clash) continue;
    ++count;
    for (const Literal& l : c.literals) used.push_back(l.var);
  }
  return count;
}

}  // namespace ballsat
