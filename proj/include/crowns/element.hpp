#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>

namespace crowns {

/// A node x^row_pos of a (layered) crown. Row 1 is the bottom row; pos is
/// the cyclic representative in 1..n+k.
struct Element {
  int row = 0;
  int pos = 0;

  friend constexpr auto operator<=>(const Element&, const Element&) = default;
};

/// Ordered pair (lower, upper) of incomparable elements.
struct CriticalPair {
  Element lower;
  Element upper;

  friend constexpr auto operator<=>(const CriticalPair&, const CriticalPair&) = default;
};

/// How element names are rendered. Crown naming (a_j / b_j) only makes sense
/// for height-two posets whose rows are 1 and 2.
enum class Naming { Crown, Layered };

/// "a3" / "b1" under Crown naming, "x2.4" under Layered naming.
std::string element_name(const Element& e, Naming naming);

/// Label of a critical pair: "a2b1" for crowns, "x1.4|x3.1" for layers.
std::string pair_label(const CriticalPair& cp, Naming naming);

/// Name of the dual (upper, lower): "b1a2" for crowns, "x3.1|x1.4" for layers.
std::string dual_label(const CriticalPair& cp, Naming naming);

/// Inverse of pair_label; accepts either naming. Throws ParameterError.
CriticalPair parse_pair_label(const std::string& text);

/// Representative of pos in 1..modulus.
constexpr int wrap(long long pos, int modulus) {
  long long r = (pos - 1) % modulus;
  if (r < 0) r += modulus;
  return static_cast<int>(r) + 1;
}

}  // namespace crowns

template <>
struct std::hash<crowns::Element> {
  std::size_t operator()(const crowns::Element& e) const noexcept {
    return std::hash<long long>{}((static_cast<long long>(e.row) << 32) ^ e.pos);
  }
};
