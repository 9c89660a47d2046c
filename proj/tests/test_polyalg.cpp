#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "capelli/characters.hpp"
#include "capelli/polyalg.hpp"
#include "capelli/serialize.hpp"

using namespace capelli;

namespace {

MPoly x(int i, int phi, int n, int d) { return MPoly::variable(i, phi, n, d); }

// Leibniz determinant with no sign convention applied.
MPoly plain_det(const std::vector<int>& rows, const std::vector<int>& cols, int n, int d) {
  MPoly out(n, d);
  for (const Permutation& s : permutations_of(static_cast<int>(rows.size()))) {
    MPoly term = MPoly::constant(n, d, s.sign());
    for (std::size_t r = 0; r < rows.size(); ++r) term = term * x(rows[r], cols[static_cast<std::size_t>(s(static_cast<int>(r)))], n, d);
    out += term;
  }
  return out;
}

YoungTableau random_tableau(std::mt19937& rng, const Partition& p, int alphabet) {
  std::vector<int> w(static_cast<std::size_t>(p.weight()));
  for (int& v : w) v = std::uniform_int_distribution<int>(1, alphabet)(rng);
  return YoungTableau(p, w);
}

Partition random_partition(std::mt19937& rng, int lo, int hi) {
  const auto all = partitions_of(std::uniform_int_distribution<int>(lo, hi)(rng));
  return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
}

MPoly random_poly(std::mt19937& rng, int n, int d, int degree) {
  MPoly p(n, d);
  const auto monos = monomials_of_degree(n, d, degree);
  for (int t = 0; t < 3; ++t)
    p += monos[std::uniform_int_distribution<std::size_t>(0, monos.size() - 1)(rng)] *
         Rational(std::uniform_int_distribution<int>(-4, 4)(rng));
  return p;
}

}  // namespace

TEST_CASE("biproducts") {
  CHECK(biproduct({1, 2}, {1, 2}, 2, 2) == x(1, 2, 2, 2) * x(2, 1, 2, 2) - x(1, 1, 2, 2) * x(2, 2, 2, 2));
  CHECK(biproduct({1}, {1}, 2, 2) == x(1, 1, 2, 2));
  CHECK(biproduct({1, 2}, {1}, 2, 2).is_zero());
  CHECK(biproduct({1, 2, 3}, {1, 2, 3}, 3, 3) == plain_det({1, 2, 3}, {1, 2, 3}, 3, 3) * Rational(-1));
}

TEST_CASE("column bitableaux carry the depth sign") {
  CHECK(column_bitableau({1, 2}, {1, 2}, 2, 2) == -(x(1, 1, 2, 2) * x(2, 2, 2, 2)));
  CHECK(bitableau(YoungTableau::column({1, 2}), YoungTableau::column({1, 2}), 2, 2) ==
        column_bitableau({1, 2}, {1, 2}, 2, 2));
  CHECK(bitableau(YoungTableau::column({1, 2, 2}), YoungTableau::column({2, 1, 1}), 2, 2) ==
        column_bitableau({1, 2, 2}, {2, 1, 1}, 2, 2));
  CHECK(bitableau(YoungTableau::from_rows({{1, 2}}), YoungTableau::from_rows({{2, 1}}), 2, 2) ==
        biproduct({1, 2}, {2, 1}, 2, 2));
  CHECK(bitableau(YoungTableau::from_rows({{1, 2}}), YoungTableau::column({1, 2}), 2, 2).is_zero());
}

TEST_CASE("expansion into columns") {
  CHECK(expand_into_columns(YoungTableau::column({1, 2}), YoungTableau::column({2, 1})).size() == 1);
  CHECK(expand_into_columns(YoungTableau::from_rows({{1, 2, 3}}), YoungTableau::from_rows({{1, 2, 3}})).size() == 6);
  CHECK(expand_into_columns(YoungTableau::from_rows({{1, 2}, {1}}), YoungTableau::from_rows({{1, 2}, {1}})).size() == 2);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const Partition p = random_partition(rng, 1, 5);
    const YoungTableau s = random_tableau(rng, p, 3), t = random_tableau(rng, p, 3);
    MPoly sum(3, 3);
    for (const ColumnTerm& c : expand_into_columns(s, t)) sum += c.sign * column_bitableau(c.lefts, c.rights, 3, 3);
    CHECK(sum == bitableau(s, t, 3, 3));
  }
}

TEST_CASE("right symmetrized bitableaux") {
  const YoungTableau s = YoungTableau::from_rows({{1, 3}, {2, 4}});
  const YoungTableau t = YoungTableau::from_rows({{1, 2}, {1, 3}});
  const YoungTableau t2 = YoungTableau::from_rows({{1, 3}, {1, 2}});
  const MPoly sym = right_symmetrized(s, t, 4, 3);
  CHECK(sym == Rational(2) * bitableau(s, t, 4, 3) + Rational(2) * bitableau(s, t2, 4, 3));
  CHECK(sym == right_symmetrized_via_symmetrizer(s, t, 4, 3));
  const YoungTableau row = YoungTableau::from_rows({{1, 2}});
  CHECK(right_symmetrized(row, YoungTableau::from_rows({{2, 1}}), 2, 2) ==
        bitableau(row, YoungTableau::from_rows({{2, 1}}), 2, 2));
  CHECK(right_symmetrized(YoungTableau::from_rows({{1, 2, 3}}), YoungTableau::from_rows({{1, 2, 2}}), 3, 2).is_zero());
  CHECK(right_symmetrized_via_symmetrizer(YoungTableau::from_rows({{2}}), YoungTableau::from_rows({{1}}), 2, 2) ==
        x(2, 1, 2, 2));
}

TEST_CASE("symmetrizer route agrees for random tableaux and multilinear choices") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Partition p = random_partition(rng, 1, 4);
    const YoungTableau u = random_tableau(rng, p, 3), v = random_tableau(rng, p, 3);
    const MPoly expected = right_symmetrized(u, v, 3, 3);
    CHECK(right_symmetrized_via_symmetrizer(u, v, 3, 3) == expected);
    std::vector<int> sw(static_cast<std::size_t>(p.weight())), tw(sw.size());
    std::iota(sw.begin(), sw.end(), 1);
    std::iota(tw.begin(), tw.end(), 1);
    std::shuffle(sw.begin(), sw.end(), rng);
    std::shuffle(tw.begin(), tw.end(), rng);
    CHECK(right_symmetrized_via_symmetrizer(u, v, YoungTableau(p, sw), YoungTableau(p, tw), 3, 3) == expected);
  }
}

TEST_CASE("immanants") {
  CHECK(immanant(Partition({2}), {1, 2}, {1, 2}, 2, 2) == biproduct({1, 2}, {1, 2}, 2, 2));
  CHECK(immanant(Partition({3}), {1, 2, 2}, {2, 1, 3}, 2, 3) == biproduct({1, 2, 2}, {2, 1, 3}, 2, 3));
  CHECK(immanant(Partition({3}), {1, 2, 1}, {1, 2, 1}, 2, 2).is_zero());
  CHECK(immanant(Partition({2, 1}), {1, 2, 3}, {1, 2, 3}, 3, 3).is_zero() == false);
  CHECK_THROWS_AS(immanant(Partition({2}), {1}, {1}, 2, 2), std::invalid_argument);
  std::mt19937 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const Partition p = random_partition(rng, 1, 4);
    const int h = p.weight();
    std::vector<int> l(static_cast<std::size_t>(h)), r(l.size());
    for (int& v : l) v = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int& v : r) v = std::uniform_int_distribution<int>(1, 3)(rng);
    const auto perms = permutations_of(h);
    const Permutation tau = perms[std::uniform_int_distribution<std::size_t>(0, perms.size() - 1)(rng)];
    std::vector<int> l2(l.size()), r2(r.size());
    for (int k = 0; k < h; ++k) {
      l2[static_cast<std::size_t>(k)] = l[static_cast<std::size_t>(tau(k))];
      r2[static_cast<std::size_t>(k)] = r[static_cast<std::size_t>(tau(k))];
    }
    CHECK(immanant(p, l, r, 3, 3) == immanant(p, l2, r2, 3, 3));
  }
}

TEST_CASE("IMM operator is a scaled idempotent on each degree") {
  for (int h = 1; h <= 3; ++h)
    for (const Partition& lambda : partitions_of(h)) {
      const Rational scale(mpz_class(1), mpz_class(static_cast<unsigned long>(lambda.hook_number())));
      for (const MPoly& m : monomials_of_degree(2, 2, h)) {
        const MPoly once = imm_operator(lambda, m) * scale;
        CHECK(imm_operator(lambda, once) * scale == once);
      }
    }
  CHECK(imm_operator(Partition({2}), MPoly(2, 2)).is_zero());
  CHECK_THROWS_AS(imm_operator(Partition({2}), x(1, 1, 2, 2)), std::invalid_argument);
}

TEST_CASE("straightening") {
  const YoungTableau s = YoungTableau::from_rows({{1, 2}, {1}});
  const YoungTableau t = YoungTableau::from_rows({{1, 2}, {2}});
  const auto id = straighten(bitableau(s, t, 2, 2));
  REQUIRE(id.size() == 1);
  CHECK(id.begin()->first == BitabSpec{s, t});
  CHECK(id.begin()->second == 1);

  // (2,1|1,2) as a column equals -(12|12) + (1,2|1,2) as a column.
  const auto e = straighten(bitableau(YoungTableau::column({2, 1}), YoungTableau::column({1, 2}), 2, 2));
  const StdExpansion expected{
      {BitabSpec{YoungTableau::from_rows({{1, 2}}), YoungTableau::from_rows({{1, 2}})}, Rational(-1)},
      {BitabSpec{YoungTableau::column({1, 2}), YoungTableau::column({1, 2})}, Rational(1)}};
  CHECK(e == expected);
  CHECK_THROWS_AS(straighten(x(1, 1, 2, 2) + x(1, 1, 2, 2) * x(2, 2, 2, 2)), std::invalid_argument);
  CHECK(straighten(MPoly(2, 2)).empty());
}

TEST_CASE("randomized straightening reconstructs with preserved content and order") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 3)(rng);
    const Partition p = random_partition(rng, 1, 4);
    if (p.first() > n) continue;
    const YoungTableau s = random_tableau(rng, p, n), t = random_tableau(rng, p, n);
    const MPoly poly = bitableau(s, t, n, n);
    const StdExpansion e = straighten(poly);
    MPoly rebuilt(n, n);
    for (const auto& [b, c] : e) {
      rebuilt += c * bitableau(b.left, b.right, n, n);
      CHECK(b.left.is_standard());
      CHECK(b.right.is_standard());
      CHECK(b.left.content(n) == s.content(n));
      CHECK(b.right.content(n) == t.content(n));
      CHECK(straight_order_geq(b, BitabSpec{s, t}));
    }
    CHECK(rebuilt == poly);
  }
}

TEST_CASE("Gordan-Capelli expansion reconstructs") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const MPoly p = random_poly(rng, 2, 2, std::uniform_int_distribution<int>(1, 3)(rng));
    MPoly rebuilt(2, 2);
    for (const auto& [b, c] : gc_expand(p)) rebuilt += c * right_symmetrized(b.left, b.right, 2, 2);
    CHECK(rebuilt == p);
  }
}

TEST_CASE("polarization action") {
  CHECK(act_generator(1, 1, x(1, 1, 2, 2)) == x(1, 1, 2, 2));
  CHECK(act_generator(1, 2, x(2, 1, 2, 2)) == x(1, 1, 2, 2));
  CHECK(act_generator(2, 1, x(2, 1, 2, 2)).is_zero());
  const MPoly p = x(1, 2, 2, 3) * x(2, 3, 2, 3);
  CHECK(act_ugl(UglElement::generator(2, 1, 2), p) == act_generator(2, 1, p));
  CHECK(act_ugl(UglElement::unit(2), p) == p);
  CHECK_THROWS_AS(act_ugl(UglElement::unit(3), p), std::invalid_argument);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (const MPoly& m : monomials_of_degree(2, 2, 2)) CHECK(act_column_capelli_diff({i}, {j}, m) == act_generator(i, j, m));
  for (const MPoly& m : monomials_of_degree(2, 2, 1)) CHECK(act_column_capelli_diff({1, 2}, {2, 1}, m).is_zero());
  CHECK(act_higher_capelli(Partition({1, 1}), x(1, 1, 2, 2)).is_zero());
  CHECK(act_higher_capelli(Partition({1, 1, 1}), x(1, 1, 2, 2) * x(1, 2, 2, 2) * x(2, 1, 2, 2)).is_zero());
}

TEST_CASE("representation property on random inputs") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    UglElement a(2), b(2);
    for (int k = 0; k < 2; ++k) {
      Monomial wa, wb;
      for (int t = 0; t < std::uniform_int_distribution<int>(0, 2)(rng); ++t)
        wa.push_back(Generator{static_cast<std::uint8_t>(1 + rng() % 2), static_cast<std::uint8_t>(1 + rng() % 2)});
      for (int t = 0; t < std::uniform_int_distribution<int>(0, 2)(rng); ++t)
        wb.push_back(Generator{static_cast<std::uint8_t>(1 + rng() % 2), static_cast<std::uint8_t>(1 + rng() % 2)});
      a += UglElement::from_word(2, wa, Rational(1 + k));
      b += UglElement::from_word(2, wb, Rational(2 - 3 * k));
    }
    const MPoly p = random_poly(rng, 2, 2, std::uniform_int_distribution<int>(1, 3)(rng));
    CHECK(act_ugl(a * b, p) == act_ugl(a, act_ugl(b, p)));
  }
}

TEST_CASE("monomial enumeration") {
  CHECK(monomials_of_degree(2, 2, 3).size() == 20);
  CHECK(monomials_of_degree(3, 2, 0).size() == 1);
}
