#include "crowns/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "crowns/errors.hpp"

namespace crowns {

bool VerifyReport::mismatches_confined_to_diagonal_blocks() const {
  if (mismatches.empty() || block_rows == 0) return false;
  return std::all_of(mismatches.begin(), mismatches.end(), [&](const Mismatch& m) {
    return m.row / block_rows == m.col / block_rows;
  });
}

VerifyReport verify(int n, int k, int layers, MatrixMode mode) {
  VerifyReport report;
  report.params = CrownParams{n, k, layers};
  report.mode = mode;

  const Poset poset = build_layered_crown(n, k, layers);
  const auto oracle_crit = critical_pairs(poset);
  const auto proper_crit = critical_pairs(poset, Containment::Proper);
  report.strict_vs_nonstrict_crit_delta =
      static_cast<long>(oracle_crit.size()) - static_cast<long>(proper_crit.size());

  const auto formula_crit = crit_pairs_closed_form(n, k, layers);
  report.crit_set_match =
      std::set<CriticalPair>(oracle_crit.begin(), oracle_crit.end()) ==
          std::set<CriticalPair>(formula_crit.begin(), formula_crit.end()) &&
      formula_crit.size() == oracle_crit.size();

  const AdjMatrix formula = layered_matrix(n, k, layers, mode);
  report.dimension = formula.dimension();
  report.block_rows = formula.block_rows;
  report.dimensions_match = formula.dimension() == oracle_crit.size();
  if (!report.crit_set_match || !report.dimensions_match) return report;

  const Labeling labeling = canonical_labels(n, k, layers);
  const AdjMatrix oracle = adjacency_oracle(poset, labeling);
  const auto names = formula.label_strings();
  for (std::size_t r = 0; r < formula.dimension(); ++r) {
    for (std::size_t c = 0; c < formula.dimension(); ++c) {
      const bool f = formula.entries.at(r, c);
      const bool o = oracle.entries.at(r, c);
      if (f != o) report.mismatches.push_back(Mismatch{r, c, names[r], names[c], f, o});
    }
  }
  return report;
}

bool SweepResult::all_passed() const {
  return std::all_of(reports.begin(), reports.end(), [](const VerifyReport& r) { return r.passed(); });
}

std::vector<CrownParams> sweep_tuples(const SweepOptions& options) {
  std::vector<CrownParams> out;
  for (int n = 3; n <= options.n_max; ++n) {
    for (int k = 0; k <= options.k_max && n + k <= options.sum_max; ++k) {
      for (int l = 1; l <= options.l_max; ++l) out.push_back(CrownParams{n, k, l});
    }
  }
  return out;
}

std::uint64_t verify_cost(const CrownParams& params) {
  const Regime regime = classify(params);
  const auto ground = static_cast<std::uint64_t>((params.layers + 1) * params.modulus());
  const auto crit = static_cast<std::uint64_t>(regime.groups * params.modulus() * regime.misses());
  return ground * ground * ground + crit * crit;
}

SweepResult sweep(const SweepOptions& options) {
  SweepResult result;
  const auto tuples = sweep_tuples(options);
  std::vector<CrownParams> accepted;
  std::uint64_t spent = 0;
  for (const auto& t : tuples) {
    const std::uint64_t cost = verify_cost(t);
    if (result.skipped.empty() && spent + cost <= options.budget) {
      spent += cost;
      accepted.push_back(t);
    } else {
      result.skipped.push_back(t);
    }
  }

  result.reports.resize(accepted.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < accepted.size(); i = next++) {
      try {
        const auto& t = accepted[i];
        result.reports[i] = verify(t.n, t.k, t.layers, options.mode);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return result;
}

}  // namespace crowns
