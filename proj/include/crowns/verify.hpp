#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "crowns/crown.hpp"
#include "crowns/matrix.hpp"

namespace crowns {

struct Mismatch {
  std::size_t row = 0;
  std::size_t col = 0;
  std::string row_label;
  std::string col_label;
  bool formula_bit = false;
  bool oracle_bit = false;
};

/// Closed form versus brute force for one parameter tuple.
struct VerifyReport {
  CrownParams params;
  MatrixMode mode = MatrixMode::Corrected;
  std::size_t dimension = 0;
  std::size_t block_rows = 0;
  bool dimensions_match = false;
  bool crit_set_match = false;
  std::vector<Mismatch> mismatches;
  /// |Crit| under non-strict containment minus |Crit| under proper containment.
  long strict_vs_nonstrict_crit_delta = 0;

  bool passed() const { return dimensions_match && crit_set_match && mismatches.empty(); }
  /// True when every mismatch lies in a diagonal block (and there is at least one).
  bool mismatches_confined_to_diagonal_blocks() const;
};

/// Requires n >= 3.
VerifyReport verify(int n, int k, int layers, MatrixMode mode = MatrixMode::Corrected);

struct SweepOptions {
  int n_max = 10;
  int k_max = 6;
  int l_max = 6;
  /// Upper bound on n + k.
  int sum_max = 10;
  MatrixMode mode = MatrixMode::Corrected;
  /// Work cap in oracle units (see verify_cost); tuples past it are skipped.
  std::uint64_t budget = 1'000'000'000'000ULL;
  unsigned jobs = 1;
};

struct SweepResult {
  std::vector<VerifyReport> reports;
  std::vector<CrownParams> skipped;
  bool complete() const { return skipped.empty(); }
  bool all_passed() const;
};

/// All (n, k, l) with 3 <= n <= n_max, 0 <= k <= k_max, n + k <= sum_max,
/// 1 <= l <= l_max, ordered by n, then k, then l.
std::vector<CrownParams> sweep_tuples(const SweepOptions& options);

/// Deterministic work estimate: |X|^3 for closure plus |Crit|^2 for the matrix.
std::uint64_t verify_cost(const CrownParams& params);

/// Verifies the longest prefix of sweep_tuples() that fits in the budget,
/// spread over `jobs` threads. Reports come back in tuple order.
SweepResult sweep(const SweepOptions& options);

}  // namespace crowns
