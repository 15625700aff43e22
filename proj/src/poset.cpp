#include "crowns/poset.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "crowns/errors.hpp"

namespace crowns {

std::size_t Relation::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

Relation transitive_closure(const Relation& relation) {
  const std::size_t n = relation.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (relation.at(x, x)) throw OrderError("relation is not irreflexive");
  }
  // Warshall, row-oriented.
  Relation closed = relation;
  for (std::size_t mid = 0; mid < n; ++mid) {
    for (std::size_t x = 0; x < n; ++x) {
      if (!closed.at(x, mid)) continue;
      for (std::size_t y = 0; y < n; ++y) {
        if (closed.at(mid, y)) closed.set(x, y);
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (closed.at(x, x)) throw OrderError("relation contains a cycle");
  }
  return closed;
}

Poset Poset::from_relation(std::vector<Element> elements, const Relation& relation) {
  if (relation.size() != elements.size()) {
    throw ParameterError("relation size does not match element count");
  }
  Poset p;
  p.elements_ = std::move(elements);
  for (std::size_t i = 0; i < p.elements_.size(); ++i) {
    if (!p.index_.emplace(p.elements_[i], i).second) {
      throw ParameterError("duplicate element " + element_name(p.elements_[i], Naming::Layered));
    }
  }
  p.less_ = transitive_closure(relation);
  return p;
}

Poset Poset::from_covers(std::vector<Element> elements,
                         std::span<const std::pair<Element, Element>> covers) {
  std::unordered_map<Element, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);
  Relation rel(elements.size());
  for (const auto& [lo, hi] : covers) {
    auto a = index.find(lo);
    auto b = index.find(hi);
    if (a == index.end() || b == index.end()) {
      throw UnknownElementError("cover references an element outside the ground set");
    }
    rel.set(a->second, b->second);
  }
  return from_relation(std::move(elements), rel);
}

std::optional<std::size_t> Poset::find(const Element& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Poset::index_of(const Element& e) const {
  auto i = find(e);
  if (!i) throw UnknownElementError("unknown element " + element_name(e, Naming::Layered));
  return *i;
}

bool Poset::less(const Element& x, const Element& y) const {
  return less_.at(index_of(x), index_of(y));
}

bool Poset::less_equal(const Element& x, const Element& y) const {
  if (x == y) {
    index_of(x);
    return true;
  }
  return less(x, y);
}

bool Poset::incomparable(const Element& x, const Element& y) const {
  std::size_t a = index_of(x);
  std::size_t b = index_of(y);
  return a != b && !less_.at(a, b) && !less_.at(b, a);
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!less_.at(x, y)) continue;
      bool direct = true;
      for (std::size_t z = 0; z < n && direct; ++z) {
        if (less_.at(x, z) && less_.at(z, y)) direct = false;
      }
      if (direct) out.emplace_back(x, y);
    }
  }
  return out;
}

int Poset::max_row() const {
  int row = 0;
  for (const auto& e : elements_) row = std::max(row, e.row);
  return row;
}

namespace {

std::vector<Element> sorted(std::vector<Element> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool downset_contained(const Poset& p, std::size_t x, std::size_t y) {
  for (std::size_t z = 0; z < p.size(); ++z) {
    if (p.less(z, x) && !p.less(z, y)) return false;
  }
  return true;
}

bool upset_contained(const Poset& p, std::size_t y, std::size_t x) {
  for (std::size_t z = 0; z < p.size(); ++z) {
    if (p.less(y, z) && !p.less(x, z)) return false;
  }
  return true;
}

std::size_t downset_size(const Poset& p, std::size_t x) {
  std::size_t c = 0;
  for (std::size_t z = 0; z < p.size(); ++z) c += p.less(z, x) ? 1 : 0;
  return c;
}

std::size_t upset_size(const Poset& p, std::size_t x) {
  std::size_t c = 0;
  for (std::size_t z = 0; z < p.size(); ++z) c += p.less(x, z) ? 1 : 0;
  return c;
}

}  // namespace

std::vector<Element> strict_downset(const Poset& p, const Element& x) {
  std::size_t i = p.index_of(x);
  std::vector<Element> out;
  for (std::size_t z = 0; z < p.size(); ++z) {
    if (p.less(z, i)) out.push_back(p.element(z));
  }
  return sorted(std::move(out));
}

std::vector<Element> strict_upset(const Poset& p, const Element& x) {
  std::size_t i = p.index_of(x);
  std::vector<Element> out;
  for (std::size_t z = 0; z < p.size(); ++z) {
    if (p.less(i, z)) out.push_back(p.element(z));
  }
  return sorted(std::move(out));
}

std::vector<std::pair<Element, Element>> incomparable_pairs(const Poset& p) {
  std::vector<std::pair<Element, Element>> out;
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t y = x + 1; y < p.size(); ++y) {
      if (p.less(x, y) || p.less(y, x)) continue;
      Element a = p.element(x);
      Element b = p.element(y);
      if (b < a) std::swap(a, b);
      out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> minimals(const Poset& p) {
  std::vector<Element> out;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (downset_size(p, x) == 0) out.push_back(p.element(x));
  }
  return sorted(std::move(out));
}

std::vector<Element> maximals(const Poset& p) {
  std::vector<Element> out;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (upset_size(p, x) == 0) out.push_back(p.element(x));
  }
  return sorted(std::move(out));
}

Poset induced_subposet(const Poset& p, std::span<const Element> subset) {
  std::vector<std::size_t> idx;
  idx.reserve(subset.size());
  for (const auto& e : subset) idx.push_back(p.index_of(e));
  Relation rel(idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = 0; b < idx.size(); ++b) {
      if (p.less(idx[a], idx[b])) rel.set(a, b);
    }
  }
  return Poset::from_relation(std::vector<Element>(subset.begin(), subset.end()), rel);
}

std::vector<CriticalPair> critical_pairs(const Poset& p, Containment containment) {
  std::vector<CriticalPair> out;
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (x == y || p.less(x, y) || p.less(y, x)) continue;
      if (!downset_contained(p, x, y) || !upset_contained(p, y, x)) continue;
      if (containment == Containment::Proper &&
          (downset_size(p, x) == downset_size(p, y) || upset_size(p, y) == upset_size(p, x))) {
        continue;
      }
      out.push_back(CriticalPair{p.element(x), p.element(y)});
    }
  }
  std::sort(out.begin(), out.end(), [](const CriticalPair& a, const CriticalPair& b) {
    return std::tie(a.lower.row, a.upper.row, a.upper.pos, a.lower.pos) <
           std::tie(b.lower.row, b.upper.row, b.upper.pos, b.lower.pos);
  });
  return out;
}

}  // namespace crowns
