#include <doctest.h>

#include <random>

#include <json.hpp>

#include "hindlab/colorings.hpp"
#include "hindlab/setcore.hpp"

using namespace hindlab;
using nlohmann::json;

TEST_CASE("log parity color per size") {
  // block k covers sizes [2^k, 2^(k+1)); color is k mod 2
  const int expect[] = {0, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 0};
  for (int size = 1; size <= 16; ++size)
    CHECK(to_int(log_parity_color_of_count(size)) == expect[size - 1]);
  CHECK(flip(Color::zero) == Color::one);
  CHECK(flip(Color::one) == Color::zero);
}

TEST_CASE("log parity coloring of sets is permutation invariant") {
  SetColoring c = SetColoring::log_parity();
  CHECK(c.permutation_invariant());
  Universe u(10);
  CHECK(c.color(FinSet::from_elements(u, {3})) == Color::zero);
  CHECK(c.color(FinSet::from_elements(u, {3, 7})) == Color::one);
  CHECK(c.color(FinSet::from_elements(u, {0, 1, 2, 3})) == Color::zero);
  CHECK(c.color(FinSet::from_elements(u, {2, 4, 6, 8})) == Color::zero);
}

TEST_CASE("seeded coloring is deterministic and seed sensitive") {
  SetColoring a = SetColoring::seeded_random(5);
  SetColoring b = SetColoring::seeded_random(5);
  SetColoring c = SetColoring::seeded_random(6);
  CHECK_FALSE(a.permutation_invariant());
  Universe u(12);
  bool any_diff = false;
  for (std::uint64_t bits = 1; bits < 4096; ++bits) {
    FinSet s(u, bits);
    CHECK(a.color(s) == b.color(s));
    any_diff = any_diff || a.color(s) != c.color(s);
  }
  CHECK(any_diff);
}

TEST_CASE("table coloring json round trip and totality") {
  Universe u(3);
  json spec = {
      {"kind", "table"},
      {"entries",
       {{{0}, 0}, {{1}, 0}, {{2}, 1}, {{0, 1}, 1}, {{0, 2}, 0}, {{1, 2}, 0}, {{0, 1, 2}, 1}}}};
  SetColoring c = SetColoring::from_json(spec, u);
  CHECK(c.color(FinSet::from_elements(u, {0, 1})) == Color::one);
  CHECK(c.color(FinSet::from_elements(u, {1, 2})) == Color::zero);
  CHECK_FALSE(c.permutation_invariant());

  SetColoring back = SetColoring::from_json(c.to_json(), u);
  for (std::uint64_t bits = 1; bits < 8; ++bits)
    CHECK(back.color(FinSet(u, bits)) == c.color(FinSet(u, bits)));

  json partial = {{"kind", "table"}, {"entries", {{{0}, 0}}}};
  CHECK_THROWS_AS(SetColoring::from_json(partial, u), std::invalid_argument);
  // larger universe than the table covers: the lookup itself must fail
  CHECK_THROWS_AS(c.color(FinSet::from_elements(Universe(5), {4})), std::out_of_range);
}

TEST_CASE("coloring spec parsing errors") {
  Universe u(4);
  CHECK_THROWS_AS(SetColoring::from_json(json{{"kind", "mystery"}}, u),
                  std::invalid_argument);
  CHECK_THROWS_AS(SetColoring::from_json(json{{"no_kind", 1}}, u), std::invalid_argument);
  json bad_entry = {{"kind", "table"}, {"entries", {{{2, 1}, 0}}}};
  CHECK_THROWS_AS(SetColoring::from_json(bad_entry, u), std::invalid_argument);
  json bad_color = {{"kind", "table"}, {"entries", {{{0}, 2}}}};
  CHECK_THROWS_AS(SetColoring::from_json(bad_color, u), std::invalid_argument);
}

TEST_CASE("coloring spec round trips for builtin kinds") {
  Universe u(5);
  SetColoring lp = SetColoring::from_json(json{{"kind", "log_parity"}}, u);
  CHECK(lp.kind() == ColoringKind::log_parity);
  SetColoring sr =
      SetColoring::from_json(json{{"kind", "random"}, {"seed", 99}}, u);
  CHECK(sr.kind() == ColoringKind::seeded_random);
  CHECK(sr.seed() == 99);
  CHECK(SetColoring::from_json(sr.to_json(), u).color(FinSet(u, 21)) ==
        sr.color(FinSet(u, 21)));
}

TEST_CASE("monochromatic check over a span of sets") {
  Universe u(8);
  SetColoring c = SetColoring::log_parity();
  std::vector<FinSet> same = {FinSet::from_elements(u, {0, 1}),
                              FinSet::from_elements(u, {2, 3, 4})};
  auto mono = is_monochromatic(c, same);
  REQUIRE(mono.has_value());
  CHECK(*mono == Color::one);

  std::vector<FinSet> mixed = {FinSet::from_elements(u, {0}),
                               FinSet::from_elements(u, {1, 2})};
  CHECK_FALSE(is_monochromatic(c, mixed).has_value());
}

TEST_CASE("color flip lemma sampled on a 12 element universe") {
  Universe u(12);
  SetColoring c = SetColoring::log_parity();
  std::mt19937_64 rng(2026);
  int checked = 0;
  while (checked < 2000) {
    std::uint64_t x = rng() & 0xFFF, y = rng() & 0xFFF & ~x;
    if (x == 0 || y == 0) continue;
    FinSet sx(u, x), sy(u, y);
    if (log_block(sx) != log_block(sy)) continue;
    ++checked;
    FinSet un = disjoint_union(sx, sy);
    CHECK(log_block(un) == log_block(sx) + 1);
    CHECK(c.color(un) == flip(c.color(sx)));
  }
}
