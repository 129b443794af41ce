#include <set>

#include "atlas/pil.hpp"
#include "doctest.h"

using namespace atlas;

namespace {

std::vector<int> upto(int n) {
  std::vector<int> g(n);
  for (int i = 0; i < n; ++i) g[i] = i + 1;
  return g;
}

} // namespace

TEST_CASE("PIL enumeration matches the pinned small counts") {
  auto p2 = enumerate_pil(upto(2));
  REQUIRE(p2.size() == 3);
  std::set<std::string> got;
  for (const auto& p : p2) got.insert(to_json(p));
  CHECK(got == std::set<std::string>{"[[1,2]]", "[[2,1]]", "[[1],[2]]"});

  CHECK(enumerate_pil(upto(3)).size() == 13);
  // |PIL(4)| via the two-term recursion from 3 and 13.
  CHECK(enumerate_pil(upto(4)).size() == 7 * 13 - 6 * 3);
}

TEST_CASE("SPIL enumeration matches the pinned small counts") {
  auto s2 = enumerate_spil(2, false);
  REQUIRE(s2.size() == 5);
  std::set<std::string> got;
  for (const auto& s : s2) got.insert(to_json(s));
  CHECK(got == std::set<std::string>{"[[1,2]]", "[[-1,2]]", "[[2,1]]", "[[-2,1]]", "[[1],[2]]"});

  CHECK(enumerate_spil(1, true).size() == 3);
  CHECK(enumerate_spil(2, true).size() == 17);
  CHECK(enumerate_spil(4, true).size() == 1473);
}

TEST_CASE("signed list invariants are enforced") {
  CHECK_THROWS_AS(SignedList({1, -1}), DomainError);
  CHECK_THROWS_AS(SignedList({2, -1}), DomainError);
  CHECK_THROWS_AS(SignedList({0, 1}), DomainError);
  CHECK_NOTHROW(SignedList({-2, 1}));
  CHECK_NOTHROW(SignedList({-2, 1, 0}));
}

TEST_CASE("Lah numbers") {
  for (int n = 1; n <= 6; ++n) CHECK(lah(n, n) == 1);
  CHECK(lah(4, 1) == 24);
  CHECK_THROWS_AS(lah(3, 4), DomainError);
  CHECK_THROWS_AS(lah(3, 0), DomainError);
  // lah(3,2) by brute force: partitions of {1,2,3} into 2 lists.
  int count = 0;
  for (const Pil& p : enumerate_pil(upto(3)))
    if (p.lists.size() == 2) ++count;
  CHECK(lah(3, 2) == count);
  CHECK(lah(3, 2) == 6);
}

TEST_CASE("orbit counts agree across all four methods") {
  for (int n = 1; n <= 7; ++n) {
    Integer f = count_orbits(Family::A, n, CountMethod::Formula);
    CHECK(f == count_orbits(Family::A, n, CountMethod::Enumerate));
    CHECK(f == count_orbits(Family::A, n, CountMethod::Recursion));
    CHECK(f == count_orbits(Family::A, n, CountMethod::Egf));
  }
  for (Family fam : {Family::D, Family::B})
    for (int ell = 1; ell <= 5; ++ell) {
      Integer f = count_orbits(fam, ell, CountMethod::Formula);
      CHECK(f == count_orbits(fam, ell, CountMethod::Enumerate));
      CHECK(f == count_orbits(fam, ell, CountMethod::Recursion));
      CHECK(f == count_orbits(fam, ell, CountMethod::Egf));
    }
  CHECK(count_orbits(Family::A, 3, CountMethod::Formula) == 13);
  CHECK(count_orbits(Family::D, 3, CountMethod::Formula) == 37);
  CHECK(count_orbits(Family::B, 3, CountMethod::Recursion) == 139);
}

TEST_CASE("type B counts are the binomial convolution of type D counts") {
  // b_n = sum_k C(n,k) 2^k k! d_{n-k}, the series identity behind the
  // 1/(1-2x) factor, through order 8.
  for (int n = 0; n <= 8; ++n) {
    Integer expect = 0;
    for (int k = 0; k <= n; ++k)
      expect += binomial(n, k) * boost::multiprecision::pow(Integer(2), k) * factorial(k) *
                count_orbits(Family::D, n - k, CountMethod::Recursion);
    CHECK(count_orbits(Family::B, n, CountMethod::Recursion) == expect);
  }
}

TEST_CASE("Lah transform") {
  std::vector<Integer> ones(6, Integer(1));
  std::vector<Integer> a = lah_transform(ones);
  CHECK(a == std::vector<Integer>{1, 1, 3, 13, 73, 501});
  std::vector<Integer> pil = {1, 1, 3, 13};
  CHECK(lah_transform(pil)[3] == 37);
  std::vector<Integer> zeros(5, Integer(0));
  CHECK(lah_transform(zeros) == zeros);
  // First five terms of the type D sequence.
  std::vector<Integer> d = lah_transform(a);
  for (int i = 0; i < 5; ++i) CHECK(d[i] == count_orbits(Family::D, i, CountMethod::Formula));
}

TEST_CASE("shift bijection on pinned examples") {
  // A = {1,2}, x = 1: {(-2,0)} -> {(-1,2)}.
  Spil in({SignedList({-2, 0})}, true);
  Spil out = shift_lambda(in, 1);
  CHECK(out == Spil({SignedList({-1, 2})}, false));
  // Degenerate zero list: {(0),(2)} -> {(1),(2)}.
  Spil in2({SignedList({0}), SignedList({2})}, true);
  CHECK(shift_lambda(in2, 1) == Spil({SignedList({1}), SignedList({2})}, false));
  CHECK(shift_gamma(shift_lambda(in2, 1), 1) == in2);
}

TEST_CASE("shift bijection round trips over small ground sets") {
  for (int m = 1; m <= 4; ++m)
    for (int x = 1; x <= m; ++x) {
      std::vector<int> rest;
      for (int v = 1; v <= m; ++v)
        if (v != x) rest.push_back(v);
      std::vector<Spil> domain = rest.empty() ? std::vector<Spil>{Spil({SignedList({0})}, true)}
                                              : enumerate_spil_set(rest, true);
      for (const Spil& sp : domain) CHECK(shift_gamma(shift_lambda(sp, x), x) == sp);
    }
}

TEST_CASE("signed list enumeration") {
  auto one_of_two = enumerate_signed_lists(1, 2);
  REQUIRE(one_of_two.size() == 4);
  std::set<std::vector<int>> got;
  for (const auto& l : one_of_two) got.insert(l.entries);
  CHECK(got == std::set<std::vector<int>>{{1}, {-1}, {2}, {-2}});
  CHECK(enumerate_signed_lists(0, 3).size() == 1);
  CHECK(enumerate_signed_lists(2, 3).size() == 24);
  for (int ell = 1; ell <= 4; ++ell)
    for (int i = 0; i <= ell; ++i)
      CHECK(Integer(enumerate_signed_lists(i, ell).size()) ==
            boost::multiprecision::pow(Integer(2), i) * factorial(ell) / factorial(ell - i));
}

TEST_CASE("block decompositions are exhaustive and sized by the fiber formulas") {
  auto blocks_a = block_partition_a(3);
  CHECK(blocks_a[{1, 3}].size() == 3);
  size_t total = 0;
  for (const auto& [key, block] : blocks_a) total += block.size();
  CHECK(total == 13);
  for (const auto& [key, block] : blocks_a) {
    auto [i, j] = key;
    Integer expect =
        factorial(2) / factorial(j - i) * count_orbits(Family::A, j - i, CountMethod::Formula);
    CHECK(Integer(block.size()) == expect);
  }

  auto blocks_b = block_partition_spil(2, true);
  CHECK(blocks_b[2].size() == 8);
  size_t total_b = 0;
  for (const auto& [i, block] : blocks_b) total_b += block.size();
  CHECK(total_b == 17);
  for (const auto& [i, block] : blocks_b)
    CHECK(Integer(block.size()) == boost::multiprecision::pow(Integer(2), i) * factorial(2) /
                                       factorial(2 - i) *
                                       count_orbits(Family::D, 2 - i, CountMethod::Formula));

  auto blocks_d = block_partition_spil(3, false);
  size_t total_d = 0;
  for (const auto& [i, block] : blocks_d) total_d += block.size();
  CHECK(total_d == 37);
  for (const auto& [i, block] : blocks_d)
    CHECK(Integer(block.size()) == boost::multiprecision::pow(Integer(2), i - 1) * factorial(2) /
                                       factorial(3 - i) *
                                       count_orbits(Family::B, 3 - i, CountMethod::Formula));
}

TEST_CASE("SPIL(l,k) counts match 2^{l-k} L(l,k)") {
  for (int ell = 1; ell <= 5; ++ell) {
    std::map<int, int> by_lists;
    for (const Spil& s : enumerate_spil(ell, false)) by_lists[static_cast<int>(s.lists.size())]++;
    for (int k = 1; k <= ell; ++k)
      CHECK(Integer(by_lists[k]) == boost::multiprecision::pow(Integer(2), ell - k) * lah(ell, k));
  }
}
