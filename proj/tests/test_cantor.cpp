#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "core/cantor.hpp"
#include "core/spread.hpp"
#include "support.hpp"

using namespace conreal;
using conreal::testing::all_words;
using conreal::testing::random_binary;
using conreal::testing::Rng;

TEST_CASE("ternary scale: pinned values, growth, and minimality") {
  CHECK(ternary_scale(0) == 0);
  CHECK(ternary_scale(1) == 2);
  CHECK(ternary_scale(2) == 4);
  Rational three_pow(1);
  for (std::uint64_t k = 0; k <= 40; ++k) {
    std::uint64_t L = ternary_scale(k);
    CHECK(Rational::pow2(static_cast<long>(L)) >= three_pow);
    if (L > 0) CHECK(Rational::pow2(static_cast<long>(L - 1)) < three_pow);
    three_pow = three_pow * Rational(3);
  }
}

TEST_CASE("pinned discontinuum values") {
  CHECK(eq_at(kappa(BinaryStream::constant(0)), RegularReal::constant(Rational(0)), 40));
  CHECK(eq_at(kappa(BinaryStream::constant(1)), RegularReal::constant(Rational(1)), 40));
  CHECK(eq_at(kappa(BinaryStream::from_word({1}, 0)), RegularReal::constant(Rational(2, 3)), 40));
  CHECK(eq_at(kappa(BinaryStream::from_word({0}, 1)), RegularReal::constant(Rational(1, 3)), 40));
}

TEST_CASE("discontinuum values are regular and live in their cells") {
  Rng rng(55);
  for (int i = 0; i < 20; ++i) {
    BinaryStream b = random_binary(rng);
    RegularReal x = kappa(b);
    CHECK(!regular_check_prefix(x, 40).has_value());
    for (std::size_t n = 0; n <= 10; ++n) {
      RatInterval cell = cantor_interval(b.prefix(n));
      CHECK(approx(x, 25) >= cell.lo - Rational::pow2(-25));
      CHECK(approx(x, 25) <= cell.hi + Rational::pow2(-25));
    }
  }
}

TEST_CASE("cells: endpoints, lengths, nesting, and separation") {
  CHECK(cantor_interval({}) == RatInterval(Rational(0), Rational(1)));
  CHECK(cantor_interval({0}) == RatInterval(Rational(0), Rational(1, 3)));
  CHECK(cantor_interval({1}) == RatInterval(Rational(2, 3), Rational(1)));
  CHECK(cantor_interval({0, 1}) == RatInterval(Rational(2, 9), Rational(1, 3)));
  for (const Word& s : all_words(2, 5)) {
    RatInterval cell = cantor_interval(s);
    CHECK(cell.length() == Rational::pow3_inv(s.size()));
    if (!s.empty()) {
      Word parent(s.begin(), s.end() - 1);
      CHECK(interval_within(cell, cantor_interval(parent)));
    }
  }
  // Distinct cells at one level are separated by at least a middle third.
  auto words = all_words(2, 4);
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      RatInterval a = cantor_interval(words[i]);
      RatInterval b = cantor_interval(words[j]);
      CHECK((a.hi + Rational::pow3_inv(4) <= b.lo || b.hi + Rational::pow3_inv(4) <= a.lo));
    }
}

TEST_CASE("bit readout inverts the discontinuum map") {
  CHECK(word_str(gamma(TernaryStream::constant(1)).prefix(6)) == "011111");
  CHECK(word_str(gamma(TernaryStream::constant(0)).prefix(6)) == "000000");
  CHECK(word_str(gamma(TernaryStream::constant(2)).prefix(6)) == "111111");
  Rng rng(66);
  for (int i = 0; i < 20; ++i) {
    BinaryStream b = random_binary(rng);
    BinaryStream readout = gamma(path_of_real(kappa(b)));
    CHECK(readout.prefix(30) == b.prefix(30));
  }
}

TEST_CASE("the readout looks far enough ahead to decide each bit") {
  for (std::uint64_t n = 0; n <= 10; ++n) CHECK(gamma_lookahead(n) == ternary_scale(n + 1));
}

TEST_CASE("immediate neighbors: edge cases and pinned flips") {
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(!immediate_neighbors(Word(n, 0)).pred.has_value());
    CHECK(!immediate_neighbors(Word(n, 1)).succ.has_value());
  }
  Neighbors mid = immediate_neighbors({0, 1});
  REQUIRE(mid.pred.has_value());
  REQUIRE(mid.succ.has_value());
  CHECK(*mid.pred == Word{0, 0});
  CHECK(*mid.succ == Word{1, 0});
  CHECK(*immediate_neighbors({1, 0}).pred == Word{0, 1});
}

TEST_CASE("successor chains enumerate each level in cell order") {
  for (std::size_t n = 1; n <= 8; ++n) {
    Word w(n, 0);
    std::set<Word> seen{w};
    while (true) {
      auto next = immediate_neighbors(w).succ;
      if (!next) break;
      // Successive cells are adjacent in value with nothing between them.
      CHECK(cantor_interval(w).hi < cantor_interval(*next).lo);
      w = *next;
      CHECK(seen.insert(w).second);
    }
    CHECK(w == Word(n, 1));
    CHECK(seen.size() == (std::size_t{1} << n));
    // pred walks the same chain backwards.
    auto back = immediate_neighbors(w).pred;
    std::size_t steps = 0;
    while (back) {
      ++steps;
      back = immediate_neighbors(*back).pred;
    }
    CHECK(steps == (std::size_t{1} << n) - 1);
  }
}
