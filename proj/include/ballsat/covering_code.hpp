#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ballsat/cnf.hpp"

namespace ballsat {

enum class Metric : std::uint8_t {
  hamming,      // {0,1}^n, Hamming distance
  exact_cycle,  // {0,1,2}^m, per coordinate (to - from) mod 3 along the solid cycle
};

/// Symbol sequence; 0/1 for Hamming codes, zero positions 0..2 for exact codes.
using Word = std::vector<std::uint8_t>;

/// Directed distance from -> to under the metric.
int code_distance(Metric metric, const Word& from, const Word& to);

/// Greedy cover of one block of coordinates.
struct CodeBlock {
  std::vector<std::uint32_t> coords;  // 0-based coordinates of the full word
  int radius = 0;
  std::vector<Word> words;            // over coords.size() symbols
  std::uint64_t points = 0;           // size of the block space
  std::uint64_t ball_volume = 0;      // points within radius of any center
};

/// Product of per-block codes. The radius is the sum of block radii.
class CoveringCode {
 public:
  CoveringCode(Metric metric, std::uint32_t length, int radius, int block_size, std::vector<CodeBlock> blocks);

  Metric metric() const { return metric_; }
  std::uint32_t length() const { return length_; }
  int radius() const { return radius_; }
  int block_size() const { return block_size_; }
  const std::vector<CodeBlock>& blocks() const { return blocks_; }

  /// Number of codewords (saturates at UINT64_MAX).
  std::uint64_t size() const { return size_; }
  /// Codeword by index in mixed-radix order, first block most significant.
  Word word(std::uint64_t index) const;
  std::vector<Word> words() const;
  /// Codeword as an assignment (Hamming codes only).
  Assignment assignment(std::uint64_t index) const;

 private:
  Metric metric_;
  std::uint32_t length_;
  int radius_;
  int block_size_;
  std::vector<CodeBlock> blocks_;
  std::uint64_t size_ = 1;
};

inline constexpr int kDefaultHammingBlockSize = 6;
inline constexpr int kDefaultExactBlockSize = 4;
inline constexpr int kMaxHammingBlockSize = 16;
inline constexpr int kMaxExactBlockSize = 10;

CoveringCode build_hamming_code(std::uint32_t n, int r, int block_size = kDefaultHammingBlockSize);

/// Exact-state code of total radius s over m coordinates.
CoveringCode build_exact_code_at(std::uint32_t m, int s, int block_size = kDefaultExactBlockSize);

struct ExactCodeChoice {
  int s;
  CoveringCode code;
};
/// Picks s in 0..2m minimizing |C_s| * x^-s.
ExactCodeChoice build_exact_code(std::uint32_t m, double x, int block_size = kDefaultExactBlockSize);

/// Exhaustive check that every point is within the radius of some codeword.
bool verify_covering(const CoveringCode& code);

int choose_top_radius(std::uint32_t n);

/// Line format: "c <metric> <length> <radius>" header, then one codeword per line
/// (bits for Hamming; digits 1/2/3 for exact colors 011/101/110).
void write_code(std::ostream& out, const CoveringCode& code);
CoveringCode read_code(std::istream& in);

}  // namespace ballsat
