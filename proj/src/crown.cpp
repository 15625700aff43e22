#include "crowns/crown.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "crowns/errors.hpp"

namespace crowns {

std::string to_string(RegimeKind kind) {
  switch (kind) {
    case RegimeKind::SingleCrown: return "single-crown";
    case RegimeKind::Tall: return "tall";
    case RegimeKind::WideSmallL: return "wide-small-l";
    case RegimeKind::WideLargeL: return "wide-large-l";
  }
  return "unknown";
}

RegimeKind regime_kind_from_string(const std::string& text) {
  for (auto kind : {RegimeKind::SingleCrown, RegimeKind::Tall, RegimeKind::WideSmallL,
                    RegimeKind::WideLargeL}) {
    if (to_string(kind) == text) return kind;
  }
  throw ParameterError("unknown regime: " + text);
}

int layer_reach(int n, int k) {
  if (n < 3) throw ParameterError("layer reach needs n >= 3");
  if (k < 0) throw ParameterError("k must be non-negative");
  return (k + 1 + (n - 2) - 1) / (n - 2);
}

Regime classify(const CrownParams& params) {
  const auto [n, k, layers] = params;
  if (n < 3) throw ParameterError("closed forms need n >= 3 (got n = " + std::to_string(n) + ")");
  if (k < 0) throw ParameterError("k must be non-negative");
  if (layers < 1) throw ParameterError("number of layers must be at least 1");

  Regime r;
  r.w = layer_reach(n, k);
  const int span = std::min(layers, r.w) - 1;
  r.reduced_k = k - span * (n - 2);
  r.reduced_n = n + span * (n - 2);
  if (layers == 1) {
    r.kind = RegimeKind::SingleCrown;
    r.reach = 1;
    r.groups = 1;
  } else if (r.w == 1) {
    r.kind = RegimeKind::Tall;
    r.reach = 1;
    r.groups = layers;
  } else if (layers <= r.w) {
    r.kind = RegimeKind::WideSmallL;
    r.reach = layers;
    r.groups = 1;
  } else {
    r.kind = RegimeKind::WideLargeL;
    r.reach = r.w;
    r.groups = layers - r.w + 1;
  }
  return r;
}

Poset build_crown(int n, int k, bool permissive) {
  if (k < 0) throw ParameterError("k must be non-negative");
  if (n < 2 || (n == 2 && !permissive)) {
    throw ParameterError("crowns need n >= 3 (n = 2 only in permissive mode)");
  }
  const int m = n + k;
  std::vector<Element> elements;
  elements.reserve(2 * m);
  for (int row = 1; row <= 2; ++row) {
    for (int j = 1; j <= m; ++j) elements.push_back({row, j});
  }
  std::vector<std::pair<Element, Element>> covers;
  for (int i = 1; i <= m; ++i) {
    // hits: a_{i+k+1}, ..., a_{i-1}
    for (int h = 0; h < n - 1; ++h) {
      covers.push_back({Element{1, wrap(i + k + 1 + h, m)}, Element{2, i}});
    }
  }
  return Poset::from_covers(std::move(elements), covers);
}

Poset shift_rows(const Poset& p, int delta) {
  std::vector<Element> elements(p.elements().begin(), p.elements().end());
  for (auto& e : elements) e.row += delta;
  return Poset::from_relation(std::move(elements), p.relation());
}

Poset beta_layer(const Poset& lower, const Poset& upper,
                 std::span<const std::pair<Element, Element>> gluing) {
  const auto top = maximals(lower);
  const auto bottom = minimals(upper);
  if (gluing.size() != top.size() || gluing.size() != bottom.size()) {
    throw ParameterError("gluing must be a bijection max(lower) -> min(upper)");
  }
  std::map<Element, Element> glue_back;  // min(upper) -> max(lower)
  std::set<Element> domain;
  for (const auto& [x, y] : gluing) {
    if (!std::binary_search(top.begin(), top.end(), x)) {
      throw ParameterError("gluing domain must be max(lower)");
    }
    if (!std::binary_search(bottom.begin(), bottom.end(), y)) {
      throw ParameterError("gluing codomain must be min(upper)");
    }
    if (!domain.insert(x).second || !glue_back.emplace(y, x).second) {
      throw ParameterError("gluing is not injective");
    }
  }

  std::vector<Element> elements(lower.elements().begin(), lower.elements().end());
  std::vector<std::size_t> from_upper(upper.size());
  for (std::size_t i = 0; i < upper.size(); ++i) {
    const Element& e = upper.element(i);
    if (auto g = glue_back.find(e); g != glue_back.end()) {
      from_upper[i] = lower.index_of(g->second);
    } else {
      if (lower.contains(e)) {
        throw ParameterError("ground sets overlap outside the glued elements");
      }
      from_upper[i] = elements.size();
      elements.push_back(e);
    }
  }

  Relation rel(elements.size());
  for (std::size_t x = 0; x < lower.size(); ++x) {
    for (std::size_t y = 0; y < lower.size(); ++y) {
      if (lower.less(x, y)) rel.set(x, y);
    }
  }
  for (std::size_t x = 0; x < upper.size(); ++x) {
    for (std::size_t y = 0; y < upper.size(); ++y) {
      if (upper.less(x, y)) rel.set(from_upper[x], from_upper[y]);
    }
  }
  return Poset::from_relation(std::move(elements), rel);
}

Poset build_layered_crown(int n, int k, int layers) {
  if (layers < 1) throw ParameterError("number of layers must be at least 1");
  const Poset layer = build_crown(n, k);
  Poset result = layer;
  for (int r = 2; r <= layers; ++r) {
    Poset next = shift_rows(layer, r - 1);
    std::vector<std::pair<Element, Element>> gluing;
    for (int j = 1; j <= n + k; ++j) gluing.push_back({Element{r, j}, Element{r, j}});
    result = beta_layer(result, next, gluing);
  }
  return result;
}

std::vector<Element> row_set(const Poset& p, int row) {
  std::vector<Element> out;
  for (const auto& e : p.elements()) {
    if (e.row == row) out.push_back(e);
  }
  if (out.empty()) throw ParameterError("row " + std::to_string(row) + " is out of range");
  std::sort(out.begin(), out.end());
  return out;
}

Poset extreme_subposet(const Poset& p, int j, int w) {
  if (j < 1 || w < 1 || j + w > p.max_row()) {
    throw ParameterError("extreme subposet index out of range");
  }
  auto ground = row_set(p, j);
  auto top = row_set(p, j + w);
  ground.insert(ground.end(), top.begin(), top.end());
  return induced_subposet(p, ground);
}

std::vector<CriticalPair> crit_pairs_closed_form(int n, int k, int layers) {
  const Regime regime = classify(CrownParams{n, k, layers});
  const int m = n + k;
  const int reach = regime.reach;
  std::vector<std::tuple<int, int, int, CriticalPair>> keyed;
  for (int j = 1; j <= regime.groups; ++j) {
    for (int p = 1; p <= m; ++p) {
      // x^j_p || x^{j+reach}_q for q in p+reach(n-1)+1 .. p+reach-1 (cyclic)
      const int first = p + reach * (n - 1) + 1;
      for (int s = 0; s < regime.misses(); ++s) {
        const int q = wrap(first + s, m);
        const int offset = wrap(p - (q - reach + 1) + 1, m) - 1;
        keyed.emplace_back(j, q, offset, CriticalPair{{j, p}, {j + reach, q}});
      }
    }
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a), std::get<2>(a)) <
           std::tie(std::get<0>(b), std::get<1>(b), std::get<2>(b));
  });
  std::vector<CriticalPair> out;
  out.reserve(keyed.size());
  for (auto& entry : keyed) out.push_back(std::get<3>(entry));
  return out;
}

}  // namespace crowns
