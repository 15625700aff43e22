#include "crowns/cycles.hpp"

#include <algorithm>
#include <set>

#include "crowns/errors.hpp"

namespace crowns {

namespace {

void require_incomparable(const Poset& p, std::span<const DualPair> seq) {
  for (const auto& d : seq) {
    if (!p.incomparable(d.upper, d.lower)) {
      throw ParameterError("dual (" + element_name(d.upper, Naming::Layered) + ", " +
                           element_name(d.lower, Naming::Layered) + ") is not an incomparable pair");
    }
  }
}

}  // namespace

bool is_alternating_cycle(const Poset& p, std::span<const DualPair> seq) {
  require_incomparable(p, seq);
  if (seq.empty()) return false;
  const std::size_t len = seq.size();
  for (std::size_t i = 0; i < len; ++i) {
    if (!p.less_equal(seq[i].lower, seq[(i + 1) % len].upper)) return false;
  }
  return true;
}

bool is_strict_alternating_cycle(const Poset& p, std::span<const DualPair> seq) {
  require_incomparable(p, seq);
  if (seq.empty()) return false;
  const std::size_t len = seq.size();
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; j < len; ++j) {
      const bool below = p.less_equal(seq[i].lower, seq[j].upper);
      if (below != (j == (i + 1) % len)) return false;
    }
  }
  return true;
}

std::vector<IndexEdge> skeleton_edges(const Poset& p, std::span<const CriticalPair> crit) {
  std::vector<std::size_t> lo(crit.size());
  std::vector<std::size_t> hi(crit.size());
  for (std::size_t i = 0; i < crit.size(); ++i) {
    lo[i] = p.index_of(crit[i].lower);
    hi[i] = p.index_of(crit[i].upper);
  }
  std::vector<IndexEdge> edges;
  for (std::size_t i = 0; i < crit.size(); ++i) {
    for (std::size_t j = i + 1; j < crit.size(); ++j) {
      const bool forward = lo[i] == hi[j] || p.less(lo[i], hi[j]);
      const bool backward = lo[j] == hi[i] || p.less(lo[j], hi[i]);
      if (forward && backward) edges.emplace_back(i, j);
    }
  }
  return edges;
}

namespace {

// Depth-first search for induced directed cycles in the digraph i -> j iff
// lower_i <= upper_j. A vertex set is a strict hyperedge exactly when the
// induced subgraph is one directed cycle through all of it.
class CycleSearch {
 public:
  CycleSearch(const Poset& p, std::span<const CriticalPair> crit, const HyperedgeOptions& options)
      : size_(crit.size()), options_(options), arc_(crit.size() * crit.size(), 0) {
    for (std::size_t i = 0; i < size_; ++i) {
      const std::size_t lo = p.index_of(crit[i].lower);
      for (std::size_t j = 0; j < size_; ++j) {
        const std::size_t up = p.index_of(crit[j].upper);
        arc_[i * size_ + j] = (lo == up || p.less(lo, up)) ? 1 : 0;
      }
    }
  }

  std::vector<Hyperedge> run() {
    if (options_.max_len < 2) return {};
    for (std::size_t start = 0; start < size_; ++start) {
      path_.assign(1, start);
      extend();
    }
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  bool arc(std::size_t i, std::size_t j) const { return arc_[i * size_ + j] != 0; }

  void extend() {
    const std::size_t start = path_.front();
    const std::size_t last = path_.back();
    for (std::size_t v = start + 1; v < size_; ++v) {
      if (++examined_ > options_.budget) {
        throw ResourceError("hyperedge enumeration exceeded its budget of " +
                            std::to_string(options_.budget) + " candidates");
      }
      if (!arc(last, v) || std::find(path_.begin(), path_.end(), v) != path_.end()) continue;
      bool chordless = true;
      for (std::size_t at = 0; at + 1 < path_.size() && chordless; ++at) {
        if (arc(path_[at], v)) chordless = false;
      }
      for (std::size_t at = 1; at < path_.size() && chordless; ++at) {
        if (arc(v, path_[at])) chordless = false;
      }
      if (!chordless) continue;

      path_.push_back(v);
      if (arc(v, start)) {
        Hyperedge e;
        e.cycle = path_;
        e.members = path_;
        std::sort(e.members.begin(), e.members.end());
        found_.push_back(std::move(e));
      } else if (path_.size() < options_.max_len) {
        extend();
      }
      path_.pop_back();
    }
  }

  std::size_t size_;
  HyperedgeOptions options_;
  std::vector<std::uint8_t> arc_;
  std::vector<std::size_t> path_;
  std::vector<Hyperedge> found_;
  std::uint64_t examined_ = 0;
};

}  // namespace

std::vector<Hyperedge> enumerate_hyperedges(const Poset& p, std::span<const CriticalPair> crit,
                                            const HyperedgeOptions& options) {
  return CycleSearch(p, crit, options).run();
}

SkeletonGraph skeleton(const Poset& p) { return skeleton(p, critical_pairs(p)); }

SkeletonGraph skeleton(const Poset& p, std::vector<CriticalPair> order) {
  auto expected = critical_pairs(p);
  std::set<CriticalPair> want(expected.begin(), expected.end());
  std::set<CriticalPair> got(order.begin(), order.end());
  if (got.size() != order.size() || want != got) {
    throw ParameterError("vertex order is not a permutation of the critical pairs");
  }
  SkeletonGraph g;
  g.edges = skeleton_edges(p, order);
  g.vertices = std::move(order);
  return g;
}

}  // namespace crowns
