#include <doctest.h>

#include <set>

#include "oracles/oracles.hpp"
#include "symflag/errors.hpp"
#include "symflag/root_system.hpp"

using namespace symflag;

TEST_CASE("reflections in A1 and A2") {
  const RootSystem a1 = cartan_root_system("A1", 2);
  const Vector alpha = a1.roots().back();
  CHECK(a1.reflect(alpha, alpha) == -alpha);
  CHECK(a1.reflect(alpha, Vector{Rational(1, 3)}) == Vector{Rational(-1, 3)});
  CHECK_THROWS_AS(a1.reflect(Vector{3}, alpha), UnknownRoot);

  const RootSystem a2 = cartan_root_system("A2");
  CHECK(a2.size() == 6);
  // s1 sends alpha2 to alpha1 + alpha2.
  CHECK(a2.reflect(Vector{1, 0}, Vector{0, 1}) == Vector{1, 1});
}

TEST_CASE("Weyl group orders match the exponent products") {
  for (const char* type : {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "BC2", "F4"}) {
    CAPTURE(type);
    const std::string t(type);
    const std::string oracle_type = t == "BC2" ? "B2" : t;
    const WeylGroup w = WeylGroup::generate(cartan_root_system(type));
    CHECK(w.size() == oracle::weyl_order(oracle_type));
  }
}

TEST_CASE("A2 lengths reproduce S3 inversion counts") {
  const WeylGroup w = WeylGroup::generate(cartan_root_system("A2"));
  std::map<int, int> hist;
  for (WeylIndex i = 0; i < w.size(); ++i) {
    ++hist[w.length(i)];
    CHECK(static_cast<int>(w.element(i).word.size()) == w.length(i));
  }
  CHECK(hist == oracle::inversion_histogram(3));
  CHECK(w.length(w.longest()) == 3);
}

TEST_CASE("BC2 has divisible roots and the expected root count") {
  const RootSystem bc = cartan_root_system("BC2");
  CHECK(bc.size() == 12);
  int divisible = 0;
  for (RootIndex r = 0; r < bc.size(); ++r)
    if (!bc.is_indivisible(r)) ++divisible;
  CHECK(divisible == 4);
}

TEST_CASE("group structure: inverse, compose, closure") {
  const WeylGroup w = WeylGroup::generate(cartan_root_system("B3"));
  for (WeylIndex a = 0; a < w.size(); ++a) {
    CHECK(w.compose(a, w.inverse(a)) == WeylGroup::identity());
    CHECK(w.from_word(w.element(a).word) == a);
  }
  std::set<WeylIndex> products;
  for (WeylIndex a = 0; a < w.size(); a += 7)
    for (WeylIndex b = 0; b < w.size(); ++b) products.insert(w.compose(a, b));
  CHECK(products.size() == w.size());
}

TEST_CASE("chamber_of is W-equivariant") {
  const WeylGroup w = WeylGroup::generate(cartan_root_system("G2"));
  const Vector x = w.roots().base_point();
  for (WeylIndex u = 0; u < w.size(); ++u) CHECK(w.chamber_of(w.act(u, x)) == u);
  CHECK_THROWS_AS(w.chamber_of(Vector{0, 0}), NotRegular);
}

TEST_CASE("w(R+) has one root from each opposite pair") {
  const WeylGroup w = WeylGroup::generate(cartan_root_system("A3"));
  const RootSystem& rs = w.roots();
  for (WeylIndex u = 0; u < w.size(); ++u) {
    const auto& pos = w.positive_roots_of(u);
    CHECK(pos.size() * 2 == rs.size());
    for (RootIndex r : pos) CHECK(std::find(pos.begin(), pos.end(), rs.negative(r)) == pos.end());
  }
}

TEST_CASE("generation respects the size cap") {
  CHECK_THROWS_AS(WeylGroup::generate(cartan_root_system("F4"), 100), BudgetExceeded);
}

TEST_CASE("word parsing") {
  CHECK(parse_word("e").empty());
  CHECK(parse_word("s1s2") == std::vector<int>{0, 1});
  CHECK(parse_word("2,1") == std::vector<int>{1, 0});
  CHECK(word_to_string({0, 1, 0}) == "s1s2s1");
  CHECK_THROWS_AS(parse_word("s0"), std::invalid_argument);
}
