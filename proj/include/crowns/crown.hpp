#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "crowns/element.hpp"
#include "crowns/poset.hpp"

namespace crowns {

/// Parameters of the l-layered generalized crown S^k_n.
struct CrownParams {
  int n = 3;
  int k = 0;
  int layers = 1;

  int modulus() const { return n + k; }
  friend bool operator==(const CrownParams&, const CrownParams&) = default;
};

enum class RegimeKind { SingleCrown, Tall, WideSmallL, WideLargeL };

std::string to_string(RegimeKind kind);
RegimeKind regime_kind_from_string(const std::string& text);

/// Which closed form applies to (n, k, l), plus the derived sizes used to
/// label critical pairs.
///
/// `w` is the layer reach ceil((k+1)/(n-2)). Critical pairs connect row j to
/// row j + reach, where reach is w for WideLargeL, l for WideSmallL and 1
/// otherwise. Each upper element misses `misses()` consecutive lowers.
struct Regime {
  RegimeKind kind = RegimeKind::SingleCrown;
  int w = 1;
  int reduced_n = 3;
  int reduced_k = 0;
  int reach = 1;
  int groups = 1;

  int misses() const { return reduced_k + 1; }
  friend bool operator==(const Regime&, const Regime&) = default;
};

/// ceil((k+1)/(n-2)); requires n >= 3.
int layer_reach(int n, int k);

/// Throws ParameterError unless n >= 3, k >= 0, layers >= 1.
Regime classify(const CrownParams& params);

/// Height-two crown on x^1_1..x^1_{n+k} (the a's) and x^2_1..x^2_{n+k} (the
/// b's): b_i misses a_i..a_{i+k} and lies over the other n-1 minimals.
/// n = 2 is accepted only when `permissive` is set.
Poset build_crown(int n, int k, bool permissive = false);

/// Relabels every element x^r_j as x^{r+delta}_j.
Poset shift_rows(const Poset& p, int delta);

/// Glues `upper` on top of `lower`: each pair (x, y) of `gluing` identifies
/// x in max(lower) with y in min(upper), and the order is the transitive
/// closure of both orders. Glued elements keep their name from `lower`.
/// Throws ParameterError unless `gluing` is a bijection max(lower) -> min(upper)
/// and the remaining elements of `upper` do not collide with `lower`.
Poset beta_layer(const Poset& lower, const Poset& upper,
                 std::span<const std::pair<Element, Element>> gluing);

/// l-fold self-layering with the identity position bijection; rows 1..l+1.
Poset build_layered_crown(int n, int k, int layers);

/// X^row ordered by position. Throws ParameterError when the row is empty.
std::vector<Element> row_set(const Poset& p, int row);

/// Induced subposet on X^j and X^{j+w}; requires 1 <= j and j + w <= max row.
Poset extreme_subposet(const Poset& p, int j, int w);

/// Critical pairs of the layered crown predicted by the closed forms, in
/// canonical label order (group, upper position, offset along the miss arc).
std::vector<CriticalPair> crit_pairs_closed_form(int n, int k, int layers);

}  // namespace crowns
