#include <doctest.h>

#include <cstdint>
#include <random>

#include "hindlab/setcore.hpp"

using namespace hindlab;

TEST_CASE("universe bounds") {
  CHECK_THROWS_AS(Universe(0), std::out_of_range);
  CHECK_THROWS_AS(Universe(65), std::out_of_range);
  CHECK(Universe(64).full_mask() == ~std::uint64_t{0});
  CHECK(Universe(3).full_mask() == 0b111);
}

TEST_CASE("finset construction and accessors") {
  Universe u(6);
  FinSet s = FinSet::from_elements(u, {1, 3, 3});
  CHECK(s.bits() == 0b1010);
  CHECK(s.size() == 2);
  CHECK(s.elements() == std::vector<int>{1, 3});
  CHECK(s.min_element() == 1);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(0));
  CHECK(s.str() == "{1,3}");

  CHECK_THROWS_AS(FinSet(u, 1ull << 6), std::out_of_range);
  CHECK_THROWS_AS(FinSet::from_elements(u, {6}), std::out_of_range);
  CHECK_THROWS_AS(FinSet::from_elements(u, {-1}), std::out_of_range);
  CHECK_THROWS_AS(FinSet(u, 0).min_element(), std::domain_error);
}

TEST_CASE("disjoint union") {
  Universe u(8);
  FinSet a = FinSet::from_elements(u, {0, 2});
  FinSet b = FinSet::from_elements(u, {1, 5});
  CHECK(disjoint_union(a, b) == FinSet::from_elements(u, {0, 1, 2, 5}));
  CHECK_THROWS_AS(disjoint_union(a, FinSet::from_elements(u, {2})), disjointness_error);
}

TEST_CASE("disjoint family canonical order and validation") {
  Universe u(8);
  FinSet a = FinSet::from_elements(u, {4, 5});
  FinSet b = FinSet::from_elements(u, {0});
  FinSet c = FinSet::from_elements(u, {1, 2});
  DisjointFamily f = DisjointFamily::of({a, b, c});
  CHECK(f.size() == 3);
  CHECK(f[0] == b);
  CHECK(f[1] == c);
  CHECK(f[2] == a);
  CHECK(f.member_sizes() == std::vector<int>{1, 2, 2});
  CHECK(f.union_bits() == 0b110111);

  CHECK_THROWS_AS(DisjointFamily::of({a, FinSet::from_elements(u, {5, 7})}),
                  disjointness_error);
  CHECK_THROWS_AS(DisjointFamily::of({FinSet(u, 0)}), std::invalid_argument);
  CHECK_THROWS_AS(DisjointFamily::of({a, FinSet::from_elements(Universe(9), {0})}),
                  std::invalid_argument);
}

TEST_CASE("fu closure enumerates all nonempty unions in submask order") {
  Universe u(9);
  FinSet x0 = FinSet::from_elements(u, {0});
  FinSet x1 = FinSet::from_elements(u, {1, 2});
  FinSet x2 = FinSet::from_elements(u, {3, 4, 5, 6});
  DisjointFamily f = DisjointFamily::of({x0, x1, x2});
  std::vector<FinSet> closure = fu_closure(f);
  REQUIRE(closure.size() == 7);
  CHECK(closure[0] == x0);
  CHECK(closure[1] == x1);
  CHECK(closure[2] == disjoint_union(x0, x1));
  CHECK(closure[3] == x2);
  CHECK(closure[4] == disjoint_union(x0, x2));
  CHECK(closure[5] == disjoint_union(x1, x2));
  CHECK(closure[6].size() == 7);

  // every closure member's bits are a union of selected member bits
  for (std::size_t mask = 1; mask <= 7; ++mask) {
    std::uint64_t expect = 0;
    for (std::size_t i = 0; i < 3; ++i)
      if ((mask >> i) & 1) expect |= f[i].bits();
    CHECK(closure[mask - 1].bits() == expect);
  }
}

TEST_CASE("fu closure guard") {
  Universe u(21);
  std::vector<FinSet> members;
  for (int i = 0; i < 21; ++i) members.push_back(FinSet(u, std::uint64_t{1} << i));
  CHECK_THROWS_AS(fu_closure(DisjointFamily::of(members)), std::length_error);
}

TEST_CASE("log blocks") {
  CHECK(log_block_of_count(1) == 0);
  CHECK(log_block_of_count(2) == 1);
  CHECK(log_block_of_count(3) == 1);
  CHECK(log_block_of_count(4) == 2);
  CHECK(log_block_of_count(7) == 2);
  CHECK(log_block_of_count(8) == 3);
  CHECK_THROWS_AS(log_block_of_count(0), std::domain_error);
  Universe u(10);
  CHECK(log_block(FinSet::from_elements(u, {0, 1, 2, 3, 4})) == 2);
}

TEST_CASE("binary support round trip") {
  Universe u(6);
  FinSet s = binary_support(13, u);
  CHECK(s == FinSet::from_elements(u, {0, 2, 3}));
  CHECK(from_binary_support(s) == 13);
  CHECK(from_binary_support(FinSet(u, 0)) == 0);
  CHECK_THROWS_AS(binary_support(0, u), std::domain_error);
  CHECK_THROWS_AS(binary_support(1ull << 6, u), std::out_of_range);

  std::mt19937_64 rng(42);
  Universe u64(64);
  for (int i = 0; i < 200; ++i) {
    std::uint64_t m = rng();
    if (m == 0) continue;
    FinSet supp = binary_support(m, u64);
    CHECK(from_binary_support(supp) == m);
    CHECK(supp.size() == __builtin_popcountll(m));
  }
}

TEST_CASE("binary support is additive on disjoint supports") {
  Universe u(12);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    std::uint64_t a = rng() & 0xFFF, b = rng() & 0xFFF & ~a;
    if (a == 0 || b == 0) continue;
    CHECK(binary_support(a + b, u) ==
          disjoint_union(binary_support(a, u), binary_support(b, u)));
  }
}
