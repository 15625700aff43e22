#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "crowns/element.hpp"
#include "crowns/poset.hpp"

namespace crowns {

/// The dual (upper, lower) of a critical pair (lower, upper).
struct DualPair {
  Element upper;
  Element lower;

  static DualPair of(const CriticalPair& cp) { return DualPair{cp.upper, cp.lower}; }
  friend constexpr auto operator<=>(const DualPair&, const DualPair&) = default;
};

/// lower_i <= upper_{i+1} for every i, cyclically. Throws ParameterError if a
/// dual is not an incomparable pair of `p`.
bool is_alternating_cycle(const Poset& p, std::span<const DualPair> seq);

/// lower_i <= upper_j exactly when j = i+1 (cyclically).
bool is_strict_alternating_cycle(const Poset& p, std::span<const DualPair> seq);

using IndexEdge = std::pair<std::size_t, std::size_t>;

/// Unordered pairs {i, j} (i < j) of `crit` whose duals form a strict
/// alternating 2-cycle: lower_i <= upper_j and lower_j <= upper_i.
std::vector<IndexEdge> skeleton_edges(const Poset& p, std::span<const CriticalPair> crit);

/// Strict hypergraph edge: indices into the critical-pair list (sorted) plus
/// one cyclic order of the duals that witnesses strictness.
struct Hyperedge {
  std::vector<std::size_t> members;
  std::vector<std::size_t> cycle;

  friend bool operator==(const Hyperedge& a, const Hyperedge& b) { return a.members == b.members; }
  friend auto operator<=>(const Hyperedge& a, const Hyperedge& b) {
    if (a.members.size() != b.members.size()) return a.members.size() <=> b.members.size();
    return a.members <=> b.members;
  }
};

struct HyperedgeOptions {
  std::size_t max_len = 4;
  /// Cap on candidate extensions examined by the search.
  std::uint64_t budget = 10'000'000;
};

/// Every subset of `crit` with 2..max_len members whose duals admit a cyclic
/// order forming a strict alternating cycle. Sorted by size, then members.
/// Throws ResourceError when the budget is exhausted.
std::vector<Hyperedge> enumerate_hyperedges(const Poset& p, std::span<const CriticalPair> crit,
                                            const HyperedgeOptions& options = {});

struct SkeletonGraph {
  std::vector<CriticalPair> vertices;
  std::vector<IndexEdge> edges;
};

/// Skeleton of the strict hypergraph, vertices in critical_pairs() order.
SkeletonGraph skeleton(const Poset& p);

/// Same, with a caller-supplied vertex order. Throws ParameterError unless
/// `order` is a permutation of critical_pairs(p).
SkeletonGraph skeleton(const Poset& p, std::vector<CriticalPair> order);

}  // namespace crowns
