#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "capelli/capelli.hpp"
#include "capelli/serialize.hpp"

using namespace capelli;

TEST_CASE("rationals") {
  CHECK(to_fraction_string(Rational(3)) == "3/1");
  CHECK(to_fraction_string(make_rational(-6, 4)) == "-3/2");
  CHECK(to_short_string(Rational(-1, 2)) == "-1/2");
  CHECK(parse_rational(" -4/6 ") == Rational(-2, 3));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("element text form") {
  CHECK(to_text(UglElement(2)) == "0");
  CHECK(to_text(column_capelli({1, 2, 3}, {2, 1, 1}, 3)) == "-e[1,2]e[2,1]e[3,1] + e[1,1]e[3,1]");
  CHECK(to_text(column_capelli({1, 2}, {2, 1}, 2)) == "-e[1,2]e[2,1] + e[1,1]");
  CHECK(to_text(UglElement::scalar(2, Rational(-3, 2))) == "-3/2");
  CHECK(to_text(UglElement::generator(1, 2, 2) * Rational(1, 3) + UglElement::unit(2)) == "1/3*e[1,2] + 1");
  CHECK(parse_ugl_text("e[2,1]e[1,2]", 2) == parse_ugl_text("e[1,2]e[2,1] - e[1,1] + e[2,2]", 2));
  CHECK(parse_ugl_text("\xE2\x88\x92" "e[1,1]", 2) == UglElement::generator(1, 1, 2) * Rational(-1));
  CHECK(parse_ugl_text("0", 2).is_zero());
  CHECK_THROWS_AS(parse_ugl_text("e[3,1]", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_ugl_text("e[1,1", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_ugl_text("e[1,1] e[1,2] +", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_ugl_text("", 2), std::invalid_argument);
}

TEST_CASE("element JSON round trip and determinism") {
  const UglElement x = schur_element(Partition({2, 1}), 2);
  const json j = to_json(x);
  CHECK(j.dump() == to_json(schur_element(Partition({2, 1}), 2)).dump());
  CHECK(ugl_from_json(j, 2) == x);
  CHECK(ugl_from_json(json::parse(j.dump()), 2) == x);
  CHECK(j.at(0).at("coeff") == "1/1");
  CHECK(parse_ugl_text(to_text(x), 2) == x);
  std::mt19937 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    UglElement y(3);
    for (int t = 0; t < 4; ++t) {
      Monomial w;
      for (int k = 0; k < static_cast<int>(rng() % 4); ++k)
        w.push_back(Generator{static_cast<std::uint8_t>(1 + rng() % 3), static_cast<std::uint8_t>(1 + rng() % 3)});
      y += UglElement::from_word(3, w, make_rational(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 4)));
    }
    CHECK(ugl_from_json(to_json(y), 3) == y);
    CHECK(parse_ugl_text(to_text(y), 3) == y);
  }
}

TEST_CASE("polynomial forms") {
  const MPoly p = biproduct({1, 2}, {1, 2}, 2, 2);
  CHECK(to_text(p) == "-x[1,1]x[2,2] + x[1,2]x[2,1]");
  CHECK(to_text(MPoly::variable(1, 1, 2, 2) * MPoly::variable(1, 1, 2, 2) * Rational(3, 2)) == "3/2*x[1,1]^2");
  CHECK(parse_mpoly_text(to_text(p), 2, 2) == p);
  CHECK(mpoly_from_json(to_json(p), 2, 2) == p);
  CHECK_THROWS_AS(parse_mpoly_text("x[1,3]", 2, 2), std::invalid_argument);
  std::mt19937 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    MPoly q(2, 3);
    for (int t = 0; t < 4; ++t) {
      const auto monos = monomials_of_degree(2, 3, static_cast<int>(rng() % 4));
      q += monos[rng() % monos.size()] * make_rational(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
    }
    CHECK(parse_mpoly_text(to_text(q), 2, 3) == q);
    CHECK(mpoly_from_json(json::parse(to_json(q).dump()), 2, 3) == q);
  }
}

TEST_CASE("tableaux, partitions and expansions") {
  CHECK(parse_partition("2,1") == Partition({2, 1}));
  CHECK(parse_partition("") == Partition());
  CHECK_THROWS_AS(parse_partition("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("2,x"), std::invalid_argument);
  CHECK(parse_index_list("1, 2,3") == std::vector<int>{1, 2, 3});
  const YoungTableau t = parse_tableau("[[1,2],[1]]");
  CHECK(t == YoungTableau::from_rows({{1, 2}, {1}}));
  CHECK(to_json(t).dump() == "[[1,2],[1]]");
  CHECK_THROWS_AS(parse_tableau("[[1],[1,2]]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tableau("[[1,"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tableau("[[0]]"), std::invalid_argument);

  const StdExpansion e = standard_capelli_expansion(schur_element(Partition({2, 1}), 2));
  CHECK(to_text(e) == "-1/2 * ([[1,2],[1]] | [[1,2],[1]])\n-1 * ([[1,2],[2]] | [[1,2],[2]])");
  CHECK(expansion_from_json(json::parse(to_json(e).dump())) == e);
  CHECK(to_json(e).at(1).at("coeff") == "-1/1");
}
