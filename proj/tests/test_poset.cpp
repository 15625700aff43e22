#include <algorithm>
#include <set>

#include "crowns/crown.hpp"
#include "crowns/errors.hpp"
#include "crowns/poset.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace crowns;
using namespace crowns::test;

namespace {

using Elements = std::vector<Element>;

Poset chain(int length) {
  Elements els;
  std::vector<std::pair<Element, Element>> covers;
  for (int i = 1; i <= length; ++i) {
    els.push_back({i, 1});
    if (i > 1) covers.push_back({{i - 1, 1}, {i, 1}});
  }
  return Poset::from_covers(els, covers);
}

Poset antichain(int size) {
  Elements els;
  for (int i = 1; i <= size; ++i) els.push_back({1, i});
  return Poset::from_relation(els, Relation(els.size()));
}

void check_order_axioms(const Poset& p) {
  const auto& rel = p.relation();
  for (std::size_t x = 0; x < p.size(); ++x) {
    CHECK_FALSE(rel.at(x, x));
    for (std::size_t y = 0; y < p.size(); ++y) {
      CHECK_FALSE((rel.at(x, y) && rel.at(y, x)));
      if (!rel.at(x, y)) continue;
      for (std::size_t z = 0; z < p.size(); ++z) {
        if (rel.at(y, z)) CHECK(rel.at(x, z));
      }
    }
  }
}

}  // namespace

TEST_CASE("transitive closure") {
  SUBCASE("empty relation stays empty") {
    CHECK(transitive_closure(Relation(4)).count() == 0);
    CHECK(transitive_closure(Relation()).size() == 0);
  }
  SUBCASE("chain of three gains a < c") {
    Relation r(3);
    r.set(0, 1);
    r.set(1, 2);
    const Relation c = transitive_closure(r);
    CHECK(c.at(0, 1));
    CHECK(c.at(1, 2));
    CHECK(c.at(0, 2));
    CHECK(c.count() == 3);
  }
  SUBCASE("loops and cycles are rejected") {
    Relation loop(2);
    loop.set(1, 1);
    CHECK_THROWS_AS(transitive_closure(loop), OrderError);
    Relation cycle(3);
    cycle.set(0, 1);
    cycle.set(1, 2);
    cycle.set(2, 0);
    CHECK_THROWS_AS(transitive_closure(cycle), OrderError);
    CHECK_THROWS_AS(Poset::from_relation({{1, 1}, {1, 2}, {1, 3}}, cycle), OrderError);
  }
  SUBCASE("two-layer crown S^2_3: bottom row lies below exactly the tops that miss none of it") {
    // x^1_j < x^3_m fails exactly when every middle element above x^1_j is
    // missed by x^3_m; closure is computed by reachability over covers.
    const Poset p = build_layered_crown(3, 2, 2);
    check_order_axioms(p);
    const Poset one = build_crown(3, 2);
    for (int j = 1; j <= 5; ++j) {
      for (int m = 1; m <= 5; ++m) {
        bool reach = false;
        for (int mid = 1; mid <= 5; ++mid) {
          reach = reach || (one.less(a(j), b(mid)) && one.less(a(mid), b(m)));
        }
        CHECK(p.less(x(1, j), x(3, m)) == reach);
      }
    }
    CHECK_FALSE(p.less(x(1, 1), x(3, 1)));
  }
  SUBCASE("two-layer crown S^1_6: every bottom element is below every top") {
    const Poset p = build_layered_crown(6, 1, 2);
    for (int j = 1; j <= 7; ++j) {
      for (int m = 1; m <= 7; ++m) CHECK(p.less(x(1, j), x(3, m)));
    }
  }
}

TEST_CASE("downsets and upsets") {
  CHECK(strict_downset(build_crown(6, 1), a(1)).empty());
  CHECK(strict_downset(build_crown(4, 2), b(1)) == Elements{a(4), a(5), a(6)});
  CHECK(strict_upset(build_crown(6, 1), b(1)).empty());
  CHECK(strict_upset(build_crown(3, 0), a(1)) == Elements{b(2), b(3)});

  const Poset layered = build_layered_crown(3, 2, 2);
  CHECK(strict_downset(layered, x(3, 1)) == Elements{x(1, 2), x(1, 3), x(1, 4), x(2, 4), x(2, 5)});
  CHECK(strict_upset(layered, x(1, 1)) == Elements{x(2, 2), x(2, 3), x(3, 3), x(3, 4), x(3, 5)});

  CHECK_THROWS_AS(strict_downset(layered, x(4, 1)), UnknownElementError);
  CHECK_THROWS_AS(strict_upset(layered, x(1, 9)), UnknownElementError);

  for (const auto& e : layered.elements()) {
    const auto down = strict_downset(layered, e);
    const auto up = strict_upset(layered, e);
    CHECK(std::find(down.begin(), down.end(), e) == down.end());
    CHECK(std::find(up.begin(), up.end(), e) == up.end());
    for (const auto& d : down) CHECK(std::find(up.begin(), up.end(), d) == up.end());
  }
}

TEST_CASE("incomparable pairs") {
  CHECK(incomparable_pairs(chain(2)).empty());
  auto misses_of = [](const Poset& p, const Element& top) {
    Elements out;
    for (const auto& [u, v] : incomparable_pairs(p)) {
      if (v == top && u.row == 1) out.push_back(u);
    }
    return out;
  };
  CHECK(misses_of(build_crown(3, 0), b(1)) == Elements{a(1)});
  CHECK(misses_of(build_crown(4, 2), b(1)) == Elements{a(1), a(2), a(3)});
  CHECK(incomparable_pairs(antichain(3)).size() == 3);
}

TEST_CASE("minimal and maximal elements") {
  const Poset crown = build_crown(6, 1);
  CHECK(minimals(crown) == row_set(crown, 1));
  CHECK(maximals(crown) == row_set(crown, 2));
  CHECK(minimals(crown).size() == 7);

  const Poset layered = build_layered_crown(3, 2, 2);
  CHECK(minimals(layered) == row_set(layered, 1));
  CHECK(maximals(layered) == row_set(layered, 3));

  const Poset anti = antichain(3);
  CHECK(minimals(anti).size() == 3);
  CHECK(maximals(anti).size() == 3);
}

TEST_CASE("induced subposets") {
  const Poset p = build_layered_crown(3, 1, 3);
  const auto all = p.elements();
  const Poset same = induced_subposet(p, Elements(all.begin(), all.end()));
  CHECK(same.size() == p.size());
  for (const auto& u : all) {
    for (const auto& v : all) CHECK(same.less(u, v) == p.less(u, v));
  }

  const Poset top = induced_subposet(chain(2), Elements{{2, 1}});
  CHECK(top.size() == 1);
  CHECK(top.relation().count() == 0);

  Elements subset = row_set(p, 2);
  const auto r4 = row_set(p, 4);
  subset.insert(subset.end(), r4.begin(), r4.end());
  const Poset s = induced_subposet(p, subset);
  for (const auto& u : subset) {
    for (const auto& v : subset) CHECK(s.less(u, v) == p.less(u, v));
  }
  CHECK_THROWS_AS(induced_subposet(p, Elements{{9, 9}}), UnknownElementError);
}

TEST_CASE("critical pairs: printed examples") {
  CHECK(critical_pairs(build_crown(3, 0)) ==
        std::vector<CriticalPair>{cp(a(1), b(1)), cp(a(2), b(2)), cp(a(3), b(3))});

  const std::vector<CriticalPair> s16{
      cp(a(1), b(1)), cp(a(2), b(1)), cp(a(2), b(2)), cp(a(3), b(2)), cp(a(3), b(3)),
      cp(a(4), b(3)), cp(a(4), b(4)), cp(a(5), b(4)), cp(a(5), b(5)), cp(a(6), b(5)),
      cp(a(6), b(6)), cp(a(7), b(6)), cp(a(7), b(7)), cp(a(1), b(7))};
  const auto crit = critical_pairs(build_crown(6, 1));
  CHECK(std::set<CriticalPair>(crit.begin(), crit.end()) ==
        std::set<CriticalPair>(s16.begin(), s16.end()));
  CHECK(canonical_labels(6, 1, 1).pairs() == s16);
}

TEST_CASE("critical pairs of single crowns match the miss arcs") {
  for (int n = 3; n <= 10; ++n) {
    for (int k = 0; n + k <= 10; ++k) {
      const int m = n + k;
      const Poset p = build_crown(n, k);
      const auto crit = critical_pairs(p);
      std::set<CriticalPair> expected;
      for (int i = 1; i <= m; ++i) {
        for (int t = 0; t <= k; ++t) expected.insert(cp(a(wrap(i + t, m)), b(i)));
      }
      CHECK(crit.size() == static_cast<std::size_t>((k + 1) * m));
      CHECK(std::set<CriticalPair>(crit.begin(), crit.end()) == expected);
      CHECK(critical_pairs(p, Containment::Proper) == crit);
      for (const auto& c : crit) CHECK(p.incomparable(c.lower, c.upper));
    }
  }
}

TEST_CASE("proper containment can drop pairs") {
  // On an antichain every downset is empty, so no containment is proper.
  CHECK(critical_pairs(antichain(2)).size() == 2);
  CHECK(critical_pairs(antichain(2), Containment::Proper).empty());
}

TEST_CASE("element lookup and naming") {
  const Poset p = build_crown(3, 0);
  CHECK(p.contains(a(3)));
  CHECK_FALSE(p.contains(a(4)));
  CHECK_THROWS_AS(p.index_of(b(7)), UnknownElementError);
  CHECK(p.less_equal(a(1), a(1)));
  CHECK(p.less_equal(a(1), b(2)));
  CHECK_FALSE(p.less_equal(b(2), a(1)));

  CHECK(element_name(a(3), Naming::Crown) == "a3");
  CHECK(element_name(b(1), Naming::Crown) == "b1");
  CHECK(element_name(x(2, 4), Naming::Layered) == "x2.4");
  CHECK(pair_label(cp(a(2), b(1)), Naming::Crown) == "a2b1");
  CHECK(pair_label(cp(x(1, 4), x(3, 1)), Naming::Layered) == "x1.4|x3.1");
  CHECK(dual_label(cp(a(2), b(1)), Naming::Crown) == "b1a2");
  CHECK(parse_pair_label("a12b3") == cp(a(12), b(3)));
  CHECK(parse_pair_label("x1.4|x3.1") == cp(x(1, 4), x(3, 1)));
  CHECK_THROWS_AS(parse_pair_label("a1c2"), ParameterError);
  CHECK_THROWS_AS(parse_pair_label("x1.4x3.1"), ParameterError);
  CHECK(wrap(0, 7) == 7);
  CHECK(wrap(8, 7) == 1);
  CHECK(wrap(-7, 7) == 7);
}
