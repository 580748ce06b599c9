#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "g2grad/abelian.hpp"

using namespace g2grad;

namespace {

// Independent order computation by repeated addition, no scalar_mul.
long order_by_repeated_addition(const AbelianGroup& g, const GroupElement& x) {
  GroupElement acc = x;
  long n = 1;
  while (acc != g.identity()) {
    acc = g.add(acc, x);
    ++n;
  }
  return n;
}

// Multiplicative order of a character under the pointwise product.
long char_order(const AbelianGroup& g, const Character& chi) {
  Character acc = chi;
  const Character trivial{std::vector<int>(g.num_factors(), 0)};
  long n = 1;
  while (!(acc == trivial)) {
    acc = char_product(g, acc, chi);
    ++n;
  }
  return n;
}

std::multiset<long> element_order_multiset(const AbelianGroup& g) {
  std::multiset<long> out;
  for (const auto& x : g.elements()) out.insert(g.element_order(x));
  return out;
}

}  // namespace

TEST_CASE("group construction and basic counts") {
  CHECK(AbelianGroup({3}).order() == 3);
  CHECK(AbelianGroup({2, 2, 2}).order() == 8);
  CHECK(AbelianGroup({2, 2, 2}).exponent() == 2);
  CHECK(AbelianGroup({4, 6}).exponent() == 12);
  CHECK(AbelianGroup().order() == 1);
  CHECK(AbelianGroup().exponent() == 1);
  CHECK_THROWS_AS(AbelianGroup({3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(AbelianGroup({0}), std::invalid_argument);
  CHECK_THROWS_AS(AbelianGroup({-2}), std::invalid_argument);
}

TEST_CASE("element enumeration is lexicographic with identity first") {
  const AbelianGroup g({2, 3});
  const auto elems = g.elements();
  REQUIRE(elems.size() == 6);
  CHECK(elems.front() == g.identity());
  CHECK(std::is_sorted(elems.begin(), elems.end()));
  CHECK(std::set<GroupElement>(elems.begin(), elems.end()).size() == 6);

  CHECK(AbelianGroup().elements() ==
        std::vector<GroupElement>{GroupElement{}});
}

TEST_CASE("element validation") {
  const AbelianGroup g({4, 2});
  CHECK(g.is_element({3, 1}));
  CHECK_FALSE(g.is_element({4, 0}));
  CHECK_FALSE(g.is_element({0, -1}));
  CHECK_FALSE(g.is_element({0}));
  CHECK_THROWS_AS(g.require_element({0, 2}), std::invalid_argument);
}

TEST_CASE("group arithmetic") {
  const AbelianGroup g({4, 3});
  CHECK(g.add({3, 2}, {2, 2}) == GroupElement{1, 1});
  CHECK(g.neg({1, 2}) == GroupElement{3, 1});
  CHECK(g.sub({0, 0}, {1, 1}) == GroupElement{3, 2});
  CHECK(g.scalar_mul(5, {1, 1}) == GroupElement{1, 2});
  CHECK(g.scalar_mul(-1, {1, 0}) == GroupElement{3, 0});
  CHECK(g.scalar_mul(0, {2, 2}) == g.identity());
}

TEST_CASE("element order matches the repeated addition oracle") {
  CHECK(AbelianGroup({5}).element_order({0}) == 1);
  CHECK(AbelianGroup({4}).element_order({1}) == 4);
  CHECK(AbelianGroup({4}).element_order({2}) == 2);

  for (const auto& factors :
       {std::vector<int>{6}, {4, 2}, {2, 3}, {2, 2, 2}, {12}}) {
    const AbelianGroup g(factors);
    for (const auto& x : g.elements()) {
      REQUIRE(g.element_order(x) == order_by_repeated_addition(g, x));
    }
  }
}

TEST_CASE("order of a sum divides the lcm of orders") {
  const AbelianGroup g({4, 6});
  for (const auto& a : g.elements())
    for (const auto& b : g.elements()) {
      const long la = g.element_order(a), lb = g.element_order(b);
      const long l = std::lcm(la, lb);
      REQUIRE(l % g.element_order(g.add(a, b)) == 0);
    }
}

TEST_CASE("subgroups and generation") {
  const AbelianGroup g({4, 2});
  CHECK(g.subgroup({{2, 0}}).size() == 2);
  CHECK(g.subgroup({{1, 0}}).size() == 4);
  CHECK(g.subgroup({{1, 0}, {0, 1}}).size() == 8);
  CHECK(g.generates({{1, 0}, {0, 1}}));
  CHECK(g.generates({{1, 1}, {0, 1}}));
  CHECK_FALSE(g.generates({{2, 0}, {0, 1}}));
  CHECK(g.subgroup({}).size() == 1);  // empty set generates the identity
}

TEST_CASE("invariant factors") {
  CHECK(AbelianGroup({2, 3}).invariant_factors() == std::vector<long>{6});
  CHECK(AbelianGroup({6}).invariant_factors() == std::vector<long>{6});
  CHECK(AbelianGroup({4, 2}).invariant_factors() ==
        std::vector<long>{2, 4});
  CHECK(AbelianGroup({2, 2, 2}).invariant_factors() ==
        std::vector<long>{2, 2, 2});
  CHECK(AbelianGroup({12, 2}).invariant_factors() ==
        std::vector<long>{2, 12});
  CHECK(AbelianGroup({4, 6}).invariant_factors() ==
        std::vector<long>{2, 12});
  CHECK(AbelianGroup().invariant_factors().empty());
}

TEST_CASE("character counts") {
  CHECK(characters(AbelianGroup({3})).size() == 3);
  CHECK(characters(AbelianGroup()).size() == 1);

  const AbelianGroup klein({2, 2});
  const auto chars = characters(klein);
  REQUIRE(chars.size() == 4);
  CHECK(chars.front().exponents == std::vector<int>{0, 0});
  for (const auto& chi : chars)
    for (const auto& x : klein.elements()) {
      const Cyc v = char_eval(klein, chi, x);
      REQUIRE((v == Cyc(1) || v == Cyc(-1)));
    }
}

TEST_CASE("character evaluation anchors") {
  const AbelianGroup z4({4});
  const Character trivial{{0}};
  for (const auto& x : z4.elements())
    CHECK(char_eval(z4, trivial, x) == Cyc::one());

  const Character chi{{1}};
  const Cyc at_gen = char_eval(z4, chi, {1});
  CHECK(at_gen == Cyc::zeta(4));
  CHECK(at_gen * at_gen == Cyc(-1));

  const AbelianGroup klein({2, 2});
  CHECK(char_eval(klein, Character{{1, 0}}, {1, 1}) == Cyc(-1));
}

TEST_CASE("characters are multiplicative in the group argument") {
  for (const auto& factors : {std::vector<int>{5}, {4, 2}, {2, 3}, {3, 3}}) {
    const AbelianGroup g(factors);
    for (const auto& chi : characters(g))
      for (const auto& a : g.elements())
        for (const auto& b : g.elements()) {
          REQUIRE(char_eval(g, chi, g.add(a, b)) ==
                  char_eval(g, chi, a) * char_eval(g, chi, b));
        }
  }
}

TEST_CASE("character product is pointwise multiplication") {
  const AbelianGroup g({4, 3});
  const auto chars = characters(g);
  for (size_t i = 0; i < chars.size(); i += 3)
    for (size_t j = 0; j < chars.size(); j += 2) {
      const Character p = char_product(g, chars[i], chars[j]);
      for (const auto& x : g.elements())
        REQUIRE(char_eval(g, p, x) ==
                char_eval(g, chars[i], x) * char_eval(g, chars[j], x));
    }
}

TEST_CASE("dual group is isomorphic to the group") {
  // Order multisets determine finite abelian groups; match them for every
  // factor list of order <= 16.
  const std::vector<std::vector<int>> lists = {
      {2},    {3},    {4},    {2, 2},    {5},       {6},    {2, 3},
      {7},    {8},    {4, 2}, {2, 2, 2}, {9},       {3, 3}, {10},
      {2, 5}, {11},   {12},   {6, 2},    {4, 3},    {2, 2, 3},
      {13},   {14},   {15},   {16},      {4, 4},    {8, 2}, {2, 2, 2, 2},
      {4, 2, 2}};
  for (const auto& factors : lists) {
    const AbelianGroup g(factors);
    std::multiset<long> group_orders = element_order_multiset(g);
    std::multiset<long> dual_orders;
    for (const auto& chi : characters(g)) dual_orders.insert(char_order(g, chi));
    REQUIRE(group_orders == dual_orders);
  }
}

TEST_CASE("automorphism counts for small groups") {
  CHECK(automorphisms(AbelianGroup({3})).size() == 2);
  CHECK(automorphisms(AbelianGroup({2, 2})).size() == 6);
  CHECK(automorphisms(AbelianGroup({4})).size() == 2);
  CHECK(automorphisms(AbelianGroup({2, 2, 2})).size() == 168);
  CHECK(automorphisms(AbelianGroup({4, 2})).size() == 8);
  CHECK(automorphisms(AbelianGroup()).size() == 1);
}

TEST_CASE("automorphism enumeration bound") {
  CHECK_THROWS_AS(automorphisms(AbelianGroup({5, 13})),
                  std::invalid_argument);
  CHECK(automorphisms(AbelianGroup({8, 8})).size() > 0);  // order 64: allowed
}

TEST_CASE("automorphisms preserve orders and compose within the list") {
  for (const auto& factors : {std::vector<int>{6}, {4, 2}, {2, 2}}) {
    const AbelianGroup g(factors);
    const auto autos = automorphisms(g);
    const std::set<GroupAutomorphism> lookup(autos.begin(), autos.end());

    for (const auto& f : autos) {
      // Bijectivity: image set is the whole group.
      std::set<GroupElement> image;
      for (const auto& x : g.elements()) {
        REQUIRE(g.element_order(f.apply(g, x)) == g.element_order(x));
        image.insert(f.apply(g, x));
      }
      REQUIRE(image.size() == static_cast<size_t>(g.order()));
    }

    for (const auto& f : autos)
      for (const auto& h : autos)
        REQUIRE(lookup.count(compose(g, f, h)) == 1);
  }
}

TEST_CASE("automorphisms are homomorphisms") {
  const AbelianGroup g({4, 2});
  for (const auto& f : automorphisms(g))
    for (const auto& a : g.elements())
      for (const auto& b : g.elements())
        REQUIRE(f.apply(g, g.add(a, b)) ==
                g.add(f.apply(g, a), f.apply(g, b)));
}

TEST_CASE("element rendering") {
  CHECK(element_str({1, 0, 2}) == "(1,0,2)");
  CHECK(element_str({}) == "()");
}
