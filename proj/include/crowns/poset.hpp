#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "crowns/element.hpp"

namespace crowns {

/// Square boolean relation over element indices; at(x, y) means x < y.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t size) : size_(size), bits_(size * size, 0) {}

  std::size_t size() const { return size_; }
  bool at(std::size_t x, std::size_t y) const { return bits_[x * size_ + y] != 0; }
  void set(std::size_t x, std::size_t y, bool value = true) {
    bits_[x * size_ + y] = value ? 1 : 0;
  }
  std::size_t count() const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Smallest transitive superset of `relation`. Throws OrderError if the
/// input has a loop or a cycle.
Relation transitive_closure(const Relation& relation);

/// Finite strict partial order. Immutable once built; every instance is
/// irreflexive, antisymmetric and transitively closed.
class Poset {
 public:
  Poset() = default;

  /// Closes `relation` (indexed like `elements`) and validates the result.
  static Poset from_relation(std::vector<Element> elements, const Relation& relation);

  /// Convenience: `covers` lists (lower, upper) pairs by element.
  static Poset from_covers(std::vector<Element> elements,
                           std::span<const std::pair<Element, Element>> covers);

  std::size_t size() const { return elements_.size(); }
  std::span<const Element> elements() const { return elements_; }
  const Element& element(std::size_t i) const { return elements_[i]; }
  const Relation& relation() const { return less_; }

  std::optional<std::size_t> find(const Element& e) const;
  /// Throws UnknownElementError.
  std::size_t index_of(const Element& e) const;
  bool contains(const Element& e) const { return find(e).has_value(); }

  bool less(std::size_t x, std::size_t y) const { return less_.at(x, y); }
  bool less(const Element& x, const Element& y) const;
  bool less_equal(const Element& x, const Element& y) const;
  bool incomparable(const Element& x, const Element& y) const;

  /// Cover relation (x < y with nothing strictly between), as index pairs.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  int max_row() const;

 private:
  std::vector<Element> elements_;
  std::unordered_map<Element, std::size_t> index_;
  Relation less_;
};

// Queries. Element-valued results are sorted by (row, pos).

std::vector<Element> strict_downset(const Poset& p, const Element& x);
std::vector<Element> strict_upset(const Poset& p, const Element& x);

/// Unordered incomparable pairs {x, y}, reported with x < y in (row, pos) order.
std::vector<std::pair<Element, Element>> incomparable_pairs(const Poset& p);

std::vector<Element> minimals(const Poset& p);
std::vector<Element> maximals(const Poset& p);

/// Restriction of the order to `subset`. Throws UnknownElementError.
Poset induced_subposet(const Poset& p, std::span<const Element> subset);

enum class Containment {
  /// D(x) ⊆ D(y) and U(y) ⊆ U(x).
  NonStrict,
  /// D(x) ⊊ D(y) and U(y) ⊊ U(x).
  Proper,
};

/// All critical pairs (x, y): x || y with the downset/upset containments.
/// Sorted by (lower.row, upper.row, upper.pos, lower.pos).
std::vector<CriticalPair> critical_pairs(const Poset& p,
                                         Containment containment = Containment::NonStrict);

}  // namespace crowns
