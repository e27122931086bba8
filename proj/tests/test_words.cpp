#include <doctest.h>

#include <random>
#include <set>

#include "hindlab/words.hpp"

using namespace hindlab;

TEST_CASE("word parse and print round trip") {
  Word w = Word::parse("g0 g1^-1 g0");
  CHECK(w.length() == 3);
  CHECK(w.str() == "g0 g1^-1 g0");
  CHECK(w.letters()[1].generator == 1);
  CHECK(w.letters()[1].sign == -1);
  CHECK(Word::parse("").empty());
  CHECK(Word::parse("  ").str() == "");
  CHECK(Word::parse("g12^-1").length() == 1);
}

TEST_CASE("parser rejects malformed and unreduced input") {
  CHECK_THROWS_AS(Word::parse("g0 g0^-1"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("g1^-1 g1"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("h3"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("g0^2"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("g0^1"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("g"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("g-1"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("g99999999999999"), std::invalid_argument);
}

TEST_CASE("reduced_from cancels adjacent inverses and validates letters") {
  CHECK(Word::reduced_from({Letter{0, 1}, Letter{0, -1}}).empty());
  CHECK(Word::reduced_from({Letter{0, 1}, Letter{1, 1}, Letter{1, -1}, Letter{0, -1}})
            .empty());
  CHECK_THROWS_AS(Word::reduced_from({Letter{0, 2}}), std::invalid_argument);
  CHECK(Word::reduced_from({Letter{0, 1}, Letter{0, 1}}).length() == 2);
  CHECK(Word::positive({0, 1, 0}).str() == "g0 g1 g0");
  CHECK(Word::positive({0, 0}).is_positive());
  CHECK_FALSE(Word::parse("g0^-1").is_positive());
}

TEST_CASE("concatenation cancels at the junction only") {
  Word a = Word::parse("g0 g1");
  Word b = Word::parse("g1^-1 g0");
  CHECK(concat_reduce(a, b).str() == "g0 g0");
  CHECK(concat_reduce(a, a.inverse()).empty());
  CHECK(concat_reduce(Word(), a) == a);
  CHECK(concat_reduce(a, Word()) == a);

  // cascade: everything cancels through the junction
  Word c = Word::parse("g0 g1 g2");
  Word d = Word::parse("g2^-1 g1^-1 g3");
  CHECK(concat_reduce(c, d).str() == "g0 g3");
}

TEST_CASE("concatenation is associative") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> len(0, 6), gen(0, 3), sign(0, 1);
  auto random_word = [&] {
    std::vector<Letter> ls;
    int target = len(rng);
    while ((int)ls.size() < target) {
      Letter l{static_cast<std::uint32_t>(gen(rng)), sign(rng) ? 1 : -1};
      if (!ls.empty() && ls.back().generator == l.generator && ls.back().sign == -l.sign)
        continue;
      ls.push_back(l);
    }
    return Word::reduced_from(ls);
  };
  for (int i = 0; i < 500; ++i) {
    Word a = random_word(), b = random_word(), c = random_word();
    CHECK(concat_reduce(concat_reduce(a, b), c) == concat_reduce(a, concat_reduce(b, c)));
  }
}

TEST_CASE("inverse reverses and flips") {
  Word w = Word::parse("g0 g1^-1 g2");
  CHECK(w.inverse().str() == "g2^-1 g1 g0^-1");
  CHECK(concat_reduce(w, w.inverse()).empty());
  CHECK(concat_reduce(w.inverse(), w).empty());
}

TEST_CASE("word support") {
  Word w = Word::parse("g0 g5^-1 g0 g2");
  CHECK(w.support() == std::set<std::uint32_t>{0, 2, 5});
  CHECK(word_support(w) == w.support());
}

TEST_CASE("fp closure lists products in submask order with increasing factors") {
  Word x0 = Word::parse("g0");
  Word x1 = Word::parse("g1");
  Word x2 = Word::parse("g0^-1");
  std::vector<Word> closure = fp_closure(std::vector<Word>{x0, x1, x2});
  REQUIRE(closure.size() == 7);
  CHECK(closure[0] == x0);
  CHECK(closure[1] == x1);
  CHECK(closure[2].str() == "g0 g1");
  CHECK(closure[3] == x2);
  CHECK(closure[4].empty());             // g0 * g0^-1
  CHECK(closure[5].str() == "g1 g0^-1");
  CHECK(closure[6].str() == "g0 g1 g0^-1");

  CHECK_THROWS_AS(fp_closure(std::vector<Word>{}), std::invalid_argument);
  CHECK_THROWS_AS(fp_closure(std::vector<Word>(16, x0)), std::length_error);
}

TEST_CASE("decompose splits off maximal root prefix and suffix") {
  std::set<std::uint32_t> root{0};
  Word x = Word::parse("g0 g0 g1 g0^-1 g2 g0");
  WordDecomposition d = decompose(x, root);
  CHECK(d.prefix.str() == "g0 g0");
  CHECK(d.middle.str() == "g1 g0^-1 g2");
  CHECK(d.suffix.str() == "g0");
  CHECK(concat_reduce(concat_reduce(d.prefix, d.middle), d.suffix) == x);

  Word no_root = Word::parse("g1 g2");
  WordDecomposition d2 = decompose(no_root, root);
  CHECK(d2.prefix.empty());
  CHECK(d2.suffix.empty());
  CHECK(d2.middle == no_root);

  CHECK_THROWS_AS(decompose(Word::parse("g0 g0"), root), std::domain_error);
  CHECK_THROWS_AS(decompose(Word(), root), std::domain_error);
}

TEST_CASE("product length formula") {
  std::vector<std::uint64_t> lengths{5, 5};
  CHECK(product_length_formula(lengths, 2) == 8);
  std::vector<std::uint64_t> one{7};
  CHECK(product_length_formula(one, 3) == 7);
  std::vector<std::uint64_t> bad{3, 2};
  CHECK_THROWS_AS(product_length_formula(bad, 2), std::domain_error);
  CHECK_THROWS_AS(product_length_formula(std::vector<std::uint64_t>{}, 0),
                  std::invalid_argument);
}

TEST_CASE("fixed ends family validates and measures junction cancellation") {
  Word z = Word::parse("g0");
  Word w = Word::parse("g0^-1 g1");
  std::vector<Word> middles{Word::parse("g2"), Word::parse("g3 g0 g3")};
  FixedEndsFamily fam = FixedEndsFamily::of(z, w, middles);
  // w*z = g0^-1 g1 g0 reduces nothing, so no junction cancellation
  CHECK(fam.junction_cancellation() == 0);
  REQUIRE(fam.members().size() == 2);
  CHECK(fam.members()[0].str() == "g0 g2 g0^-1 g1");
  CHECK(fam.members()[1].str() == "g0 g3 g0 g3 g0^-1 g1");

  Word wc = Word::parse("g1 g0^-1");
  FixedEndsFamily fam2 = FixedEndsFamily::of(z, wc, middles);
  // wc*z = g1 g0^-1 g0 = g1 cancels two letters
  CHECK(fam2.junction_cancellation() == 2);

  // endpoint generator inside the root
  CHECK_THROWS_AS(FixedEndsFamily::of(z, w, {Word::parse("g0")}), std::invalid_argument);
  // shared fresh generator across middles
  CHECK_THROWS_AS(FixedEndsFamily::of(z, w, {Word::parse("g2"), Word::parse("g2 g2")}),
                  std::invalid_argument);
  // empty middle list and empty middle word
  CHECK_THROWS_AS(FixedEndsFamily::of(z, w, {}), std::invalid_argument);
  CHECK_THROWS_AS(FixedEndsFamily::of(z, w, {Word()}), std::invalid_argument);
}

TEST_CASE("length formula matches direct reduction on a fixture family") {
  Word z = Word::parse("g0 g1");
  Word w = Word::parse("g1^-1 g0^-1");
  std::vector<Word> middles{Word::parse("g5"), Word::parse("g6 g6"),
                            Word::parse("g7 g0 g7^-1")};
  FixedEndsFamily fam = FixedEndsFamily::of(z, w, middles);
  const std::uint64_t n = fam.junction_cancellation();
  CHECK(n == 4);  // w*z reduces to the empty word
  std::vector<Word> closure = fp_closure(fam.members());
  for (std::uint32_t mask = 1; mask < 8; ++mask) {
    std::vector<std::uint64_t> lengths;
    for (int i = 0; i < 3; ++i)
      if ((mask >> i) & 1) lengths.push_back(fam.members()[i].length());
    CHECK(closure[mask - 1].length() == product_length_formula(lengths, n));
  }
}
