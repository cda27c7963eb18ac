#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ballsat {

struct SelftestOptions {
  std::uint32_t max_n = 10;
  std::uint32_t cases = 200;
  std::uint64_t seed = 1;
};

struct SuiteResult {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;
  bool ok() const { return mismatches == 0; }
};

/// Oracle-equivalence suites plus constant and color-graph checks.
std::vector<SuiteResult> run_selftest(const SelftestOptions& options);

/// One measured run. For ball families r_or_s is r and t is 0; for the
/// disjoint family they are the exact-code radius s and surplus t.
struct BenchRow {
  std::string family;
  int size = 0;
  int r_or_s = 0;
  int t = 0;
  std::uint64_t code_size = 1;
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  double bound = 0.0;
  double elapsed_ms = 0.0;
};

/// Families: share1-chain, share2-chain, disjoint. Sizes are k (pairs) or m (clauses).
std::vector<BenchRow> run_bench(const std::string& family, int min_size, int max_size, std::uint64_t seed);

inline constexpr const char* kBenchCsvHeader = "family,size,r_or_s,t,code_size,nodes,leaves,bound,elapsed_ms";
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace ballsat
