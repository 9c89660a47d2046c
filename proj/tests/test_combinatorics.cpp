#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "capelli/combinatorics.hpp"

using namespace capelli;

namespace {

// Every filling of the shape over {1..n}, filtered by a predicate.
std::vector<YoungTableau> brute_force(const Partition& shape, int n, bool (YoungTableau::*pred)() const) {
  std::vector<YoungTableau> out;
  std::vector<int> w(static_cast<std::size_t>(shape.weight()), 1);
  while (true) {
    YoungTableau t(shape, w);
    if ((t.*pred)()) out.push_back(t);
    int k = shape.weight() - 1;
    while (k >= 0 && w[static_cast<std::size_t>(k)] == n) w[static_cast<std::size_t>(k--)] = 1;
    if (k < 0) break;
    ++w[static_cast<std::size_t>(k)];
  }
  return out;
}

bool is_multilinear(const YoungTableau& t) {
  std::vector<int> w = t.word();
  std::sort(w.begin(), w.end());
  for (std::size_t k = 0; k < w.size(); ++k)
    if (w[k] != static_cast<int>(k) + 1) return false;
  return true;
}

Partition random_partition(std::mt19937& rng, int max_weight) {
  const int h = std::uniform_int_distribution<int>(1, max_weight)(rng);
  const auto all = partitions_of(h);
  return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
}

}  // namespace

TEST_CASE("partition validation and conjugation") {
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK(Partition({2, 1}).conjugate() == Partition({2, 1}));
  CHECK(Partition({3}).conjugate() == Partition({1, 1, 1}));
  CHECK(Partition({4, 2, 1}).conjugate() == Partition({3, 2, 1, 1}));
  CHECK(Partition().conjugate() == Partition());
}

TEST_CASE("hook numbers") {
  CHECK(Partition({2, 1}).hook_number() == 3);
  CHECK(Partition({1}).hook_number() == 1);
  CHECK(Partition({2, 2}).hook_number() == 12);
  CHECK(Partition().hook_number() == 1);
}

TEST_CASE("partitions are listed lexicographically decreasing") {
  const auto p4 = partitions_of(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4.front() == Partition({4}));
  CHECK(p4.back() == Partition({1, 1, 1, 1}));
  CHECK(std::is_sorted(p4.rbegin(), p4.rend()));
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(8).size() == 22);
}

TEST_CASE("conjugation is an involution up to weight 8") {
  for (int h = 0; h <= 8; ++h)
    for (const Partition& p : partitions_of(h)) {
      CHECK(p.conjugate().conjugate() == p);
      CHECK(p.conjugate().weight() == h);
    }
}

TEST_CASE("standardness follows the strict-rows weak-columns convention") {
  CHECK(YoungTableau::from_rows({{1, 2}, {1}}).is_standard());
  CHECK_FALSE(YoungTableau::from_rows({{1, 1}, {2}}).is_standard());
  CHECK_FALSE(YoungTableau::from_rows({{2}, {1}}).is_standard());
  CHECK(YoungTableau::from_rows({{1}, {1}}).is_standard());
}

TEST_CASE("enumerate_standard examples and brute force") {
  const auto s21 = enumerate_standard(Partition({2, 1}), 2);
  REQUIRE(s21.size() == 2);
  CHECK(s21[0] == YoungTableau::from_rows({{1, 2}, {1}}));
  CHECK(s21[1] == YoungTableau::from_rows({{1, 2}, {2}}));
  CHECK(enumerate_standard(Partition({1}), 3).size() == 3);
  CHECK(enumerate_standard(Partition({1, 1, 1}), 2).size() == 4);
  for (int h = 0; h <= 4; ++h)
    for (const Partition& p : partitions_of(h))
      for (int n = 1; n <= 3; ++n) {
        const auto fast = enumerate_standard(p, n);
        CHECK(fast == brute_force(p, n, &YoungTableau::is_standard));
        CHECK(std::is_sorted(fast.begin(), fast.end()));
      }
}

TEST_CASE("multilinear standard tableaux count h!/H") {
  for (int h = 1; h <= 6; ++h) {
    std::uint64_t fact = 1;
    for (int k = 2; k <= h; ++k) fact *= static_cast<std::uint64_t>(k);
    for (const Partition& p : partitions_of(h)) {
      const auto all = enumerate_standard(p, h);
      const auto count = std::count_if(all.begin(), all.end(), is_multilinear);
      CHECK(static_cast<std::uint64_t>(count) * p.hook_number() == fact);
    }
  }
}

TEST_CASE("row strict enumeration") {
  const auto r21 = enumerate_row_strict(Partition({2, 1}), 2);
  REQUIRE(r21.size() == 2);
  CHECK(r21[0] == YoungTableau::from_rows({{1, 2}, {1}}));
  CHECK(r21[1] == YoungTableau::from_rows({{1, 2}, {2}}));
  CHECK(enumerate_row_strict(Partition({2}), 2).size() == 1);
  CHECK(enumerate_row_strict(Partition({2, 2}), 3).size() == 9);
  for (int h = 1; h <= 4; ++h)
    for (const Partition& p : partitions_of(h))
      for (int n = 1; n <= 4; ++n) {
        const auto rs = enumerate_row_strict(p, n);
        CHECK(rs.empty() == (p.first() > n));
        CHECK(rs == brute_force(p, n, &YoungTableau::is_row_strict));
      }
}

TEST_CASE("column permuted family") {
  const auto fam = column_permuted_family(YoungTableau::from_rows({{1, 2}, {1, 3}}));
  CHECK(fam.size() == 4);
  CHECK(std::set<YoungTableau>(fam.begin(), fam.end()).size() == 2);
  CHECK(column_permuted_family(YoungTableau::from_rows({{3, 1, 2}})).size() == 1);
  const auto col = column_permuted_family(YoungTableau::column({1, 2, 3}));
  CHECK(std::set<YoungTableau>(col.begin(), col.end()).size() == 6);

  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 40; ++trial) {
    const Partition p = random_partition(rng, 6);
    std::vector<int> w(static_cast<std::size_t>(p.weight()));
    for (int& x : w) x = std::uniform_int_distribution<int>(1, 4)(rng);
    const YoungTableau t(p, w);
    std::size_t expected = 1;
    const Partition c = p.conjugate();
    for (int k = 0; k < c.length(); ++k)
      for (int f = 2; f <= c[k]; ++f) expected *= static_cast<std::size_t>(f);
    CHECK(column_permuted_family(t).size() == expected);
  }
}

TEST_CASE("row permuted family carries permutation signs") {
  const auto fam = row_permuted_family(YoungTableau::from_rows({{1, 2, 3}}));
  REQUIRE(fam.size() == 6);
  int total = 0;
  for (const auto& [sign, t] : fam) total += sign;
  CHECK(total == 0);
  CHECK(fam.front().first == 1);
  CHECK(fam.front().second == YoungTableau::from_rows({{1, 2, 3}}));
}

TEST_CASE("compositions") {
  const auto c = enumerate_compositions(3, 2);
  CHECK(c == std::vector<std::vector<int>>{{0, 3}, {1, 2}, {2, 1}, {3, 0}});
  CHECK(enumerate_compositions(0, 3) == std::vector<std::vector<int>>{{0, 0, 0}});
  CHECK(enumerate_compositions(2, 3).size() == 6);
  CHECK_THROWS(enumerate_compositions(1, 0));
  const std::vector<int> comp{2, 0, 1};
  CHECK(diagonal_sequence(comp) == std::vector<int>{1, 1, 3});
}

TEST_CASE("permutations") {
  const auto s3 = permutations_of(3);
  REQUIRE(s3.size() == 6);
  CHECK(s3.front() == Permutation::identity(3));
  for (const auto& p : s3) {
    CHECK(p.compose(p.inverse()) == Permutation::identity(3));
    CHECK(p.sign() == ((p.inversions() % 2 == 0) ? 1 : -1));
  }
  CHECK(Permutation({1, 2, 0}).cycle_type() == Partition({3}));
  CHECK(Permutation({1, 0, 2}).cycle_type() == Partition({2, 1}));
  CHECK_THROWS_AS(Permutation({0, 0}), std::invalid_argument);
}

TEST_CASE("row and column groups of a multilinear tableau") {
  const YoungTableau t = identity_tableau(Partition({2, 1}));
  CHECK(t == YoungTableau::from_rows({{1, 2}, {3}}));
  CHECK(row_group(t).size() == 2);
  CHECK(column_group(t).size() == 2);
  CHECK(row_group(identity_tableau(Partition({2, 2}))).size() == 4);
  CHECK_THROWS(row_group(YoungTableau::from_rows({{1, 1}})));
}

TEST_CASE("contents") {
  const YoungTableau t = YoungTableau::from_rows({{1, 2}, {1}});
  CHECK(t.content(3) == std::vector<int>{2, 1, 0});
  CHECK(t.max_entry() == 2);
}
