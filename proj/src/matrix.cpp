#include "crowns/matrix.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "crowns/cycles.hpp"
#include "crowns/errors.hpp"

namespace crowns {

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
  }
  return t;
}

std::size_t BitMatrix::popcount() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::size_t BitMatrix::row_popcount(std::size_t r) const {
  auto first = bits_.begin() + static_cast<std::ptrdiff_t>(r * cols_);
  return static_cast<std::size_t>(
      std::count(first, first + static_cast<std::ptrdiff_t>(cols_), std::uint8_t{1}));
}

void BitMatrix::paste(const BitMatrix& block, std::size_t r0, std::size_t c0) {
  for (std::size_t r = 0; r < block.rows(); ++r) {
    for (std::size_t c = 0; c < block.cols(); ++c) set(r0 + r, c0 + c, block.at(r, c));
  }
}

BitMatrix BitMatrix::slice(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
  BitMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) out.set(r, c, at(r0 + r, c0 + c));
  }
  return out;
}

std::vector<CriticalPair> Labeling::pairs() const {
  std::vector<CriticalPair> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(l.pair);
  return out;
}

Labeling canonical_labels(int n, int k, int layers) {
  Labeling out;
  out.params = CrownParams{n, k, layers};
  out.regime = classify(out.params);
  const int m = n + k;
  const auto& regime = out.regime;
  out.labels.reserve(static_cast<std::size_t>(regime.groups * m * regime.misses()));
  for (int group = 1; group <= regime.groups; ++group) {
    for (int q = 1; q <= m; ++q) {
      for (int t = 0; t < regime.misses(); ++t) {
        const int p = wrap(q - regime.reach + 1 + t, m);
        out.labels.push_back(Label{group, q, t, CriticalPair{{group, p}, {group + regime.reach, q}}});
      }
    }
  }
  return out;
}

std::vector<std::string> AdjMatrix::label_strings() const {
  std::vector<std::string> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(pair_label(l.pair, naming()));
  return out;
}

BitMatrix adjacency_oracle(const Poset& p, std::span<const CriticalPair> order) {
  const auto crit = critical_pairs(p);
  std::set<CriticalPair> want(crit.begin(), crit.end());
  std::set<CriticalPair> got(order.begin(), order.end());
  if (got.size() != order.size() || got != want) {
    throw ParameterError("labels do not enumerate the critical pairs of the poset");
  }
  BitMatrix m(order.size(), order.size());
  for (const auto& [i, j] : skeleton_edges(p, order)) {
    m.set(i, j);
    m.set(j, i);
  }
  return m;
}

AdjMatrix adjacency_oracle(const Poset& p, const Labeling& labeling) {
  AdjMatrix out;
  out.params = labeling.params;
  out.regime = labeling.regime;
  out.labels = labeling.labels;
  out.entries = adjacency_oracle(p, labeling.pairs());
  out.block_rows = static_cast<std::size_t>(labeling.params.modulus() * labeling.regime.misses());
  return out;
}

AdjMatrix oracle_matrix(int n, int k, int layers) {
  const Labeling labeling = canonical_labels(n, k, layers);
  return adjacency_oracle(build_layered_crown(n, k, layers), labeling);
}

namespace {

void require_formula_params(int n, int k) {
  if (n < 3) throw ParameterError("closed forms need n >= 3");
  if (k < 0) throw ParameterError("k must be non-negative");
}

void require_block_index(int i, int j, int m) {
  if (i < 1 || j < 1 || i > m || j > m) {
    throw ParameterError("block index out of range 1.." + std::to_string(m));
  }
}

}  // namespace

namespace {

BitMatrix block_from_ranges(int i, int j, int n, int k, bool cut) {
  const int m = n + k;
  BitMatrix block(static_cast<std::size_t>(k + 1), static_cast<std::size_t>(k + 1));
  const int d = wrap(j - i + 1, m) - 1;
  if (d == 0) return block;

  const CycInterval near_rows(m, i, j - 1);
  const CycInterval near_cols(m, i + k + 1, j + k);
  const CycInterval far_rows(m, j + k + 1, i + k);
  const CycInterval far_cols(m, j, i - 1);
  const bool near = d < n - 1;
  for (int a = 0; a <= k; ++a) {
    const int u = i + a;
    const bool row = near ? near_rows.contains(u) : far_rows.contains(u) && (!cut || near_rows.contains(u));
    if (!row) continue;
    for (int b = 0; b <= k; ++b) {
      const int v = j + b;
      const bool col = near ? near_cols.contains(v) : far_cols.contains(v) && (!cut || near_cols.contains(v));
      if (col) block.set(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
    }
  }
  return block;
}

}  // namespace

BitMatrix single_block(int i, int j, int n, int k) {
  require_formula_params(n, k);
  require_block_index(i, j, n + k);
  if (i > j) return single_block(j, i, n, k).transposed();
  return block_from_ranges(i, j, n, k, true);
}

BitMatrix single_block_as_stated(int i, int j, int n, int k) {
  require_formula_params(n, k);
  require_block_index(i, j, n + k);
  if (i > j) return single_block_as_stated(j, i, n, k).transposed();
  return block_from_ranges(i, j, n, k, false);
}

AdjMatrix single_matrix(int n, int k) {
  require_formula_params(n, k);
  const Labeling labeling = canonical_labels(n, k, 1);
  const int m = n + k;
  const auto side = static_cast<std::size_t>(k + 1);

  AdjMatrix out;
  out.params = labeling.params;
  out.regime = labeling.regime;
  out.labels = labeling.labels;
  out.entries = BitMatrix(side * m, side * m);
  out.block_rows = side * m;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      out.entries.paste(single_block(i, j, n, k), side * (i - 1), side * (j - 1));
    }
  }
  return out;
}

int count_nonzero_block(int i, int j, int n, int k) {
  require_formula_params(n, k);
  const int m = n + k;
  require_block_index(i, j, m);
  if (i > j) std::swap(i, j);
  const int d = wrap(j - i + 1, m) - 1;
  if (d < n - 1) return d * d;
  const int back = wrap(i - j + 1, m) - 1;
  return back * back;
}

int exact_nonzero_block(int i, int j, int n, int k) {
  require_formula_params(n, k);
  const int m = n + k;
  require_block_index(i, j, m);
  if (i > j) std::swap(i, j);
  const int d = wrap(j - i + 1, m) - 1;
  const int side = d < n - 1 ? std::min(d, k + 1) : std::min(n - 1, m - d);
  return side * side;
}

std::string to_string(MatrixMode mode) {
  return mode == MatrixMode::Corrected ? "corrected" : "paper-literal-s3";
}

MatrixMode matrix_mode_from_string(const std::string& text) {
  if (text == "corrected") return MatrixMode::Corrected;
  if (text == "paper-literal-s3") return MatrixMode::PaperLiteral;
  throw ParameterError("unknown mode: " + text);
}

BitMatrix wide_block(int i, int j, int n, int k, int w) {
  require_formula_params(n, k);
  if (w != layer_reach(n, k)) {
    throw ParameterError("w must equal ceil((k+1)/(n-2)) = " + std::to_string(layer_reach(n, k)));
  }
  if (i < 1 || j < 1) throw ParameterError("block index must be positive");
  if (i > j) return wide_block(j, i, n, k, w).transposed();

  const int m = n + k;
  const int reduced_k = k - (w - 1) * (n - 2);
  const int reduced_n = n + (w - 1) * (n - 2);
  const int r = j - i;
  if (r == 0) return single_matrix(reduced_n, reduced_k).entries;

  const int misses = reduced_k + 1;
  const auto side = static_cast<std::size_t>(m * misses);
  BitMatrix block(side, side);
  if (r > w) return block;

  // Row label (x^i_alpha, x^{i+w}_beta); column label (x^j_gamma, x^{j+w}_delta).
  for (int beta = 1; beta <= m; ++beta) {
    const CycInterval below(m, beta - (w - r) * (n - 1), beta - w + r);
    for (int s = 0; s < misses; ++s) {
      const auto row = static_cast<std::size_t>((beta - 1) * misses + s);
      for (int delta = 1; delta <= m; ++delta) {
        for (int t = 0; t < misses; ++t) {
          const int gamma = wrap(delta - w + 1 + t, m);
          const bool hit = r == w ? gamma == beta : below.contains(gamma);
          if (hit) block.set(row, static_cast<std::size_t>((delta - 1) * misses + t));
        }
      }
    }
  }
  return block;
}

AdjMatrix layered_matrix(int n, int k, int layers, MatrixMode mode) {
  require_formula_params(n, k);
  const Labeling labeling = canonical_labels(n, k, layers);
  const Regime& regime = labeling.regime;

  AdjMatrix out;
  out.params = labeling.params;
  out.regime = regime;
  out.labels = labeling.labels;
  out.block_rows = static_cast<std::size_t>((n + k) * regime.misses());

  switch (regime.kind) {
    case RegimeKind::SingleCrown:
      out.entries = single_matrix(n, k).entries;
      return out;
    case RegimeKind::WideSmallL:
      out.entries = single_matrix(regime.reduced_n, regime.reduced_k).entries;
      return out;
    case RegimeKind::Tall:
    case RegimeKind::WideLargeL:
      break;
  }

  const std::size_t side = out.block_rows;
  out.entries = BitMatrix(side * regime.groups, side * regime.groups);
  for (int i = 1; i <= regime.groups; ++i) {
    for (int j = i; j <= regime.groups; ++j) {
      if (i == j && regime.kind == RegimeKind::Tall && mode == MatrixMode::PaperLiteral) continue;
      if (j - i > regime.w) continue;
      const BitMatrix block = wide_block(i, j, n, k, regime.w);
      out.entries.paste(block, side * (i - 1), side * (j - 1));
      if (i != j) out.entries.paste(block.transposed(), side * (j - 1), side * (i - 1));
    }
  }
  return out;
}

BenchReport bench(int n, int k, int layers, int repetitions) {
  if (repetitions < 1) throw ParameterError("repetitions must be positive");
  using Clock = std::chrono::steady_clock;

  const AdjMatrix formula = layered_matrix(n, k, layers);
  const AdjMatrix oracle = oracle_matrix(n, k, layers);
  if (!(formula == oracle)) {
    throw VerificationError("closed form and oracle disagree for (n, k, l) = (" +
                            std::to_string(n) + ", " + std::to_string(k) + ", " +
                            std::to_string(layers) + ")");
  }

  auto best_of = [&](auto&& run) {
    double best = 0;
    for (int rep = 0; rep < repetitions; ++rep) {
      const auto t0 = Clock::now();
      auto result = run();
      const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
      if (result.dimension() != formula.dimension()) throw VerificationError("dimension changed");
      best = rep == 0 ? secs : std::min(best, secs);
    }
    return best;
  };

  BenchReport report;
  report.repetitions = repetitions;
  report.dimension = formula.dimension();
  report.formula_seconds = best_of([&] { return layered_matrix(n, k, layers); });
  report.oracle_seconds = best_of([&] { return oracle_matrix(n, k, layers); });
  return report;
}

}  // namespace crowns
