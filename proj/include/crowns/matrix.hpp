#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "crowns/crown.hpp"
#include "crowns/element.hpp"
#include "crowns/poset.hpp"

namespace crowns {

/// Dense 0/1 matrix, row-major.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool at(std::size_t r, std::size_t c) const { return bits_[r * cols_ + c] != 0; }
  void set(std::size_t r, std::size_t c, bool value = true) { bits_[r * cols_ + c] = value ? 1 : 0; }

  BitMatrix transposed() const;
  std::size_t popcount() const;
  std::size_t row_popcount(std::size_t r) const;
  /// Copies `block` with its top-left corner at (r0, c0).
  void paste(const BitMatrix& block, std::size_t r0, std::size_t c0);
  BitMatrix slice(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Ascending cyclic walk start, start+1, ..., end over 1..modulus.
struct CycInterval {
  int modulus;
  int start;
  int end;

  CycInterval(int modulus, long long start, long long end)
      : modulus(modulus), start(wrap(start, modulus)), end(wrap(end, modulus)) {}

  int size() const { return wrap(end - start + 1, modulus); }
  bool contains(long long x) const {
    return wrap(x - start + 1, modulus) <= size();
  }
};

/// Row/column label of the adjacency matrix. The lower position of the pair
/// is upper_pos - reach + 1 + offset (mod n+k).
struct Label {
  int group = 1;
  int upper_pos = 1;
  int offset = 0;
  CriticalPair pair;

  friend bool operator==(const Label&, const Label&) = default;
};

struct Labeling {
  CrownParams params;
  Regime regime;
  std::vector<Label> labels;

  Naming naming() const { return params.layers == 1 ? Naming::Crown : Naming::Layered; }
  std::vector<CriticalPair> pairs() const;
};

/// Labels ordered by group, then upper position, then offset.
Labeling canonical_labels(int n, int k, int layers);

struct AdjMatrix {
  CrownParams params;
  Regime regime;
  std::vector<Label> labels;
  BitMatrix entries;
  /// Rows per block: (n+k) * misses.
  std::size_t block_rows = 0;

  std::size_t dimension() const { return entries.rows(); }
  Naming naming() const { return params.layers == 1 ? Naming::Crown : Naming::Layered; }
  std::vector<std::string> label_strings() const;

  friend bool operator==(const AdjMatrix&, const AdjMatrix&) = default;
};

/// Brute force: entry (i, j) is 1 iff the duals of order[i] and order[j]
/// form a strict alternating 2-cycle in `p`. Throws ParameterError unless
/// `order` is a permutation of critical_pairs(p).
BitMatrix adjacency_oracle(const Poset& p, std::span<const CriticalPair> order);
AdjMatrix adjacency_oracle(const Poset& p, const Labeling& labeling);

/// Oracle matrix of the layered crown under canonical labels.
AdjMatrix oracle_matrix(int n, int k, int layers);

/// (k+1) x (k+1) block A_{i,j} of the single-crown matrix from the closed
/// form; blocks below the diagonal are transposes. Rows are a_i..a_{i+k} (the
/// misses of b_i), columns a_j..a_{j+k}.
///
/// With d = j-i mod n+k: d = 0 gives zeros; d < n-1 puts ones on rows
/// i..j-1 and columns i+k+1..j+k; otherwise on rows j+k+1..i+k and columns
/// j..i-1, each further cut to the near-case range. The cut only matters
/// when k >= n-1, where the two miss arcs overlap at both ends.
BitMatrix single_block(int i, int j, int n, int k);

/// The same block without the far-case cut. Agrees with single_block
/// exactly when k < n-1.
BitMatrix single_block_as_stated(int i, int j, int n, int k);

AdjMatrix single_matrix(int n, int k);

/// Non-zero count of A_{i,j} as given by the squared-difference corollary.
/// This is not the true count: see exact_nonzero_block.
int count_nonzero_block(int i, int j, int n, int k);

/// Non-zero count of single_block(i, j): min(d, k+1)^2 for 0 <= d < n-1,
/// min(n-1, n+k-d)^2 otherwise, where d = j-i mod n+k and i <= j.
int exact_nonzero_block(int i, int j, int n, int k);

enum class MatrixMode {
  /// Within-layer blocks of tall crowns carry the single-crown matrix.
  Corrected,
  /// Within-layer blocks of tall crowns are zero, as the layered theorem states.
  PaperLiteral,
};

std::string to_string(MatrixMode mode);
MatrixMode matrix_mode_from_string(const std::string& text);

/// Closed-form adjacency matrix of the l-layered crown. Requires n >= 3.
AdjMatrix layered_matrix(int n, int k, int layers, MatrixMode mode = MatrixMode::Corrected);

/// Block (i, j) for the multi-group regimes; w must equal layer_reach(n, k).
/// Size ((n+k)(k'+1))^2 with k' = k - (w-1)(n-2).
BitMatrix wide_block(int i, int j, int n, int k, int w);

struct BenchReport {
  double formula_seconds = 0;
  double oracle_seconds = 0;
  std::size_t dimension = 0;
  int repetitions = 0;
};

/// Times layered_matrix against the oracle after checking they agree.
/// Throws VerificationError on disagreement.
BenchReport bench(int n, int k, int layers, int repetitions = 3);

}  // namespace crowns
