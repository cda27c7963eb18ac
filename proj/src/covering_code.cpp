#include "ballsat/covering_code.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ballsat {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint32_t alphabet(Metric m) { return m == Metric::hamming ? 2 : 3; }

int symbol_distance(Metric m, std::uint8_t from, std::uint8_t to) {
  if (m == Metric::hamming) return from != to ? 1 : 0;
  return (static_cast<int>(to) - static_cast<int>(from) + 3) % 3;
}

// Number of words within the given radius of a fixed center.
std::uint64_t ball_volume(Metric m, std::size_t length, int radius) {
  // ways[k] = number of offset vectors with total weight k
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(std::max(radius, 0)) + 1, 0);
  if (radius < 0) return 0;
  ways[0] = 1;
  const int max_step = m == Metric::hamming ? 1 : 2;
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<std::uint64_t> next(ways.size(), 0);
    for (std::size_t k = 0; k < ways.size(); ++k)
      for (int step = 0; step <= max_step && k + static_cast<std::size_t>(step) < ways.size(); ++step) {
        auto& cell = next[k + static_cast<std::size_t>(step)];
        cell = cell > kSaturated - ways[k] ? kSaturated : cell + ways[k];
      }
    ways = std::move(next);
  }
  std::uint64_t total = 0;
  for (auto w : ways) total = total > kSaturated - w ? kSaturated : total + w;
  return total;
}

Word decode(std::uint32_t index, std::uint32_t q, std::size_t length) {
  Word w(length);
  for (std::size_t i = length; i-- > 0;) {
    w[i] = static_cast<std::uint8_t>(index % q);
    index /= q;
  }
  return w;
}

std::uint32_t encode(const Word& w, std::uint32_t q) {
  std::uint32_t index = 0;
  for (auto s : w) index = index * q + s;
  return index;
}

// Offsets (per-coordinate step counts) of total weight <= radius.
std::vector<Word> ball_offsets(Metric m, std::size_t length, int radius) {
  const std::uint32_t q = alphabet(m);
  std::uint32_t total = 1;
  for (std::size_t i = 0; i < length; ++i) total *= q;
  std::vector<Word> out;
  for (std::uint32_t idx = 0; idx < total; ++idx) {
    Word w = decode(idx, q, length);
    int weight = 0;
    for (auto s : w) weight += s;
    if (weight <= radius) out.push_back(std::move(w));
  }
  return out;
}

CodeBlock greedy_block(Metric m, std::vector<std::uint32_t> coords, int radius) {
  const std::size_t len = coords.size();
  const std::uint32_t q = alphabet(m);
  std::uint32_t points = 1;
  for (std::size_t i = 0; i < len; ++i) points *= q;

  const auto offsets = ball_offsets(m, len, radius);
  auto covered_by = [&](std::uint32_t center, auto&& visit) {
    Word c = decode(center, q, len);
    Word p(len);
    for (const Word& off : offsets) {
      for (std::size_t i = 0; i < len; ++i) p[i] = static_cast<std::uint8_t>((c[i] + off[i]) % q);
      visit(encode(p, q));
    }
  };

  std::vector<bool> covered(points, false);
  std::uint32_t remaining = points;
  // Max-heap on (gain, -index); stored gains are upper bounds (lazy greedy).
  using Entry = std::pair<std::uint64_t, std::int64_t>;
  std::priority_queue<Entry> heap;
  for (std::uint32_t c = 0; c < points; ++c) heap.emplace(offsets.size(), -static_cast<std::int64_t>(c));

  CodeBlock block;
  block.coords = std::move(coords);
  block.radius = radius;
  block.points = points;
  block.ball_volume = offsets.size();
  while (remaining > 0) {
    auto [stale, neg_index] = heap.top();
    heap.pop();
    auto center = static_cast<std::uint32_t>(-neg_index);
    std::uint64_t gain = 0;
    covered_by(center, [&](std::uint32_t p) { gain += covered[p] ? 0 : 1; });
    if (!heap.empty() && Entry{gain, neg_index} < heap.top()) {
      heap.emplace(gain, neg_index);
      continue;
    }
    covered_by(center, [&](std::uint32_t p) {
      if (!covered[p]) {
        covered[p] = true;
        --remaining;
      }
    });
    block.words.push_back(decode(center, q, len));
  }
  return block;
}

// Even split of a total over parts, remainder to the first parts, each capped.
std::vector<int> split_radius(int total, const std::vector<int>& caps) {
  const int parts = static_cast<int>(caps.size());
  std::vector<int> out(caps.size(), 0);
  if (parts == 0) return out;
  for (int i = 0; i < parts; ++i) out[i] = std::min(caps[i], total / parts + (i < total % parts ? 1 : 0));
  int assigned = 0;
  for (int v : out) assigned += v;
  for (int i = 0; i < parts && assigned < total; ++i) {
    int room = std::min(caps[i] - out[i], total - assigned);
    out[i] += room;
    assigned += room;
  }
  return out;
}

CoveringCode build_product(Metric m, std::uint32_t length, int radius, int block_size) {
  const int per_symbol = m == Metric::hamming ? 1 : 2;
  const std::uint32_t nb = length == 0 ? 0 : (length + block_size - 1) / block_size;
  std::vector<std::vector<std::uint32_t>> coords(nb);
  std::vector<int> caps(nb);
  std::uint32_t next = 0;
  for (std::uint32_t b = 0; b < nb; ++b) {
    std::uint32_t len = length / nb + (b < length % nb ? 1 : 0);
    for (std::uint32_t i = 0; i < len; ++i) coords[b].push_back(next++);
    caps[b] = static_cast<int>(len) * per_symbol;
  }
  const auto radii = split_radius(radius, caps);
  std::vector<CodeBlock> blocks;
  blocks.reserve(nb);
  for (std::uint32_t b = 0; b < nb; ++b) blocks.push_back(greedy_block(m, std::move(coords[b]), radii[b]));
  return CoveringCode(m, length, radius, block_size, std::move(blocks));
}

}  // namespace

int code_distance(Metric metric, const Word& from, const Word& to) {
  if (from.size() != to.size()) throw std::invalid_argument("code_distance: length mismatch");
  int total = 0;
  for (std::size_t i = 0; i < from.size(); ++i) total += symbol_distance(metric, from[i], to[i]);
  return total;
}

CoveringCode::CoveringCode(Metric metric, std::uint32_t length, int radius, int block_size,
                           std::vector<CodeBlock> blocks)
    : metric_(metric), length_(length), radius_(radius), block_size_(block_size), blocks_(std::move(blocks)) {
  for (const CodeBlock& b : blocks_) size_ = saturating_mul(size_, b.words.size());
}

Word CoveringCode::word(std::uint64_t index) const {
  if (index >= size_) throw std::out_of_range("codeword index out of range");
  Word w(length_, 0);
  for (std::size_t b = blocks_.size(); b-- > 0;) {
    const CodeBlock& block = blocks_[b];
    const Word& part = block.words[index % block.words.size()];
    index /= block.words.size();
    for (std::size_t i = 0; i < block.coords.size(); ++i) w[block.coords[i]] = part[i];
  }
  return w;
}

std::vector<Word> CoveringCode::words() const {
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (std::uint64_t i = 0; i < size_; ++i) out.push_back(word(i));
  return out;
}

Assignment CoveringCode::assignment(std::uint64_t index) const {
  if (metric_ != Metric::hamming) throw std::logic_error("assignment() requires a Hamming code");
  Word w = word(index);
  Assignment a(length_);
  for (std::uint32_t i = 0; i < length_; ++i) a.set(i + 1, w[i] != 0);
  return a;
}

CoveringCode build_hamming_code(std::uint32_t n, int r, int block_size) {
  if (r < 0 || static_cast<std::uint32_t>(r) > n) throw std::invalid_argument("hamming code radius out of range");
  if (block_size < 1 || block_size > kMaxHammingBlockSize)
    throw std::invalid_argument("hamming block size must be in 1..16");
  return build_product(Metric::hamming, n, r, std::min<int>(block_size, std::max<std::uint32_t>(n, 1)));
}

CoveringCode build_exact_code_at(std::uint32_t m, int s, int block_size) {
  if (s < 0 || s > 2 * static_cast<int>(m)) throw std::invalid_argument("exact code radius out of range");
  if (block_size < 1 || block_size > kMaxExactBlockSize)
    throw std::invalid_argument("exact block size must be in 1..10");
  return build_product(Metric::exact_cycle, m, s, std::min<int>(block_size, std::max<std::uint32_t>(m, 1)));
}

ExactCodeChoice build_exact_code(std::uint32_t m, double x, int block_size) {
  if (m < 1) throw std::invalid_argument("build_exact_code requires m >= 1");
  if (!(x > 0.0) || x > 1.0) throw std::invalid_argument("build_exact_code requires 0 < x <= 1");
  std::optional<ExactCodeChoice> best;
  double best_score = 0.0;
  for (int s = 0; s <= 2 * static_cast<int>(m); ++s) {
    CoveringCode code = build_exact_code_at(m, s, block_size);
    double score = std::log(static_cast<double>(code.size())) - s * std::log(x);
    if (!best || score < best_score - 1e-12) {
      best_score = score;
      best = ExactCodeChoice{s, std::move(code)};
    }
  }
  return std::move(*best);
}

bool verify_covering(const CoveringCode& code) {
  const Metric m = code.metric();
  if ((m == Metric::hamming && code.length() > 20) || (m == Metric::exact_cycle && code.length() > 12))
    throw std::invalid_argument("verify_covering: space too large to enumerate");
  const auto words = code.words();
  const std::uint32_t q = alphabet(m);
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < code.length(); ++i) total *= q;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Word point = decode(static_cast<std::uint32_t>(idx), q, code.length());
    bool hit = std::any_of(words.begin(), words.end(),
                           [&](const Word& w) { return code_distance(m, w, point) <= code.radius(); });
    if (!hit) return false;
  }
  return true;
}

int choose_top_radius(std::uint32_t n) {
  const double a = (1.0 + std::sqrt(17.0)) / 2.0;
  auto r = static_cast<long>(std::lround(n / (a + 1.0)));
  return static_cast<int>(std::clamp<long>(r, 0, n));
}

void write_code(std::ostream& out, const CoveringCode& code) {
  out << "c " << (code.metric() == Metric::hamming ? "hamming" : "exact") << ' ' << code.length() << ' '
      << code.radius() << '\n';
  for (std::uint64_t i = 0; i < code.size(); ++i) {
    Word w = code.word(i);
    std::string line(w.size(), '0');
    for (std::size_t k = 0; k < w.size(); ++k)
      line[k] = static_cast<char>(code.metric() == Metric::hamming ? '0' + w[k] : '1' + w[k]);
    out << line << '\n';
  }
}

CoveringCode read_code(std::istream& in) {
  std::string line;
  std::optional<Metric> metric;
  std::uint32_t length = 0;
  int radius = 0;
  std::vector<Word> words;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == 'c') {
      std::istringstream ls(line.substr(1));
      std::string tag;
      if (!(ls >> tag >> length >> radius)) throw std::invalid_argument("malformed code header");
      if (tag == "hamming")
        metric = Metric::hamming;
      else if (tag == "exact")
        metric = Metric::exact_cycle;
      else
        throw std::invalid_argument("unknown code metric '" + tag + "'");
      continue;
    }
    if (!metric) throw std::invalid_argument("codeword before code header");
    if (line.size() != length) throw std::invalid_argument("codeword length mismatch");
    Word w(length);
    for (std::size_t k = 0; k < length; ++k) {
      char lo = *metric == Metric::hamming ? '0' : '1';
      char hi = *metric == Metric::hamming ? '1' : '3';
      if (line[k] < lo || line[k] > hi) throw std::invalid_argument("invalid codeword symbol");
      w[k] = static_cast<std::uint8_t>(line[k] - lo);
    }
    words.push_back(std::move(w));
  }
  if (!metric) throw std::invalid_argument("missing code header");
  CodeBlock block;
  for (std::uint32_t i = 0; i < length; ++i) block.coords.push_back(i);
  block.radius = radius;
  block.words = std::move(words);
  block.points = 1;
  for (std::uint32_t i = 0; i < length; ++i) block.points = saturating_mul(block.points, alphabet(*metric));
  block.ball_volume = ball_volume(*metric, length, radius);
  return CoveringCode(*metric, length, radius, static_cast<int>(length), {std::move(block)});
}

}  // namespace ballsat
