#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "core/errors.hpp"
#include "core/moduli.hpp"
#include "core/spread.hpp"
#include "support.hpp"

using namespace conreal;
using conreal::testing::identity_fn;
using conreal::testing::random_dyadic;
using conreal::testing::random_ternary;
using conreal::testing::Rng;

namespace {

ModulusFamily ternary_const(std::uint64_t offset, bool self, bool mono) {
  return ModulusFamily::on_ternary(
      [offset](std::uint64_t k, const TernaryStream&) { return k + offset; }, self, mono);
}

}  // namespace

TEST_CASE("families know their domain and reject the others") {
  ModulusFamily g = ternary_const(0, false, true);
  CHECK(g.domain() == ModulusDomain::Ternary);
  CHECK(g.eval(3, TernaryStream::constant(1)) == 3);
  CHECK_THROWS_AS(g.eval(3, BinaryStream::constant(1)), std::invalid_argument);
  CHECK_THROWS_AS(g.eval(3, RegularReal::constant(Rational(0))), std::invalid_argument);
  CHECK(g.eval_hat(4, {1, 2}) == 4);
  CHECK(g.eval_breve(4, {1, 2}) == 4);
}

TEST_CASE("hat and breve evaluation agree with the explicit streams") {
  auto probe = ModulusFamily::on_ternary(
      [](std::uint64_t, const TernaryStream& a) {
        return static_cast<std::uint64_t>(a.at(0) + a.at(3));
      },
      false, false);
  CHECK(probe.eval_hat(0, {2, 1}) == 2);    // 2,1,0,0,...
  CHECK(probe.eval_breve(0, {2, 1}) == 3);  // 2,1,1,1,...
  CHECK(probe.eval_hat(0, {}) == 0);
  CHECK(probe.eval_breve(0, {}) == 2);
}

TEST_CASE("the self-modulus transform pins the lookahead to the value it reports") {
  ModulusFamily g = identity_fn().modulus;  // g_k = k, not a self-modulus
  ModulusFamily G = self_modulus(g, kDefaultCap);
  CHECK(G.self_modulus());
  CHECK(G.monotone_in_k());
  Rng rng(77);
  TernaryStream a = random_ternary(rng);
  for (std::uint64_t k = 0; k <= 8; ++k) {
    // least n with g_{k+1} = k+1 < n is k+2, on any stream
    CHECK(G.eval(k, a) == k + 2);
  }
  ModulusFamily intensional = ModulusFamily::on_real(
      [](std::uint64_t k, const RegularReal&) { return k; }, false, true);
  CHECK_THROWS_AS(self_modulus(intensional, kDefaultCap), std::invalid_argument);
}

TEST_CASE("the self-modulus transform respects its cap") {
  // g_1 is huge, so the least n with g_1 < n exceeds a small cap.
  ModulusFamily g = ternary_const(1000, false, true);
  CHECK_THROWS_AS(self_modulus(g, 10).eval(0, TernaryStream::constant(0)), CapExceededError);
}

TEST_CASE("monotonizing takes running maxima and keeps flags honest") {
  ModulusFamily spiky = ModulusFamily::on_ternary(
      [](std::uint64_t k, const TernaryStream&) -> std::uint64_t { return k == 1 ? 5 : k; },
      false, false);
  ModulusFamily mono = monotonize(spiky);
  CHECK(mono.monotone_in_k());
  CHECK(!mono.self_modulus());
  TernaryStream a = TernaryStream::constant(0);
  CHECK(mono.eval(0, a) == 0);
  CHECK(mono.eval(1, a) == 5);
  CHECK(mono.eval(3, a) == 5);
  CHECK(mono.eval(5, a) == 5);
  CHECK(mono.eval(6, a) == 6);
}

TEST_CASE("least uniform lookahead is found by factoring the value table") {
  auto digit2 = std::function<std::uint64_t(const BinaryStream&)>(
      [](const BinaryStream& p) { return static_cast<std::uint64_t>(p.at(2)); });
  CHECK(least_uc_modulus(digit2, 5, kDefaultCap) == 3);
  auto constant = std::function<std::uint64_t(const BinaryStream&)>(
      [](const BinaryStream&) -> std::uint64_t { return 9; });
  CHECK(least_uc_modulus(constant, 5, kDefaultCap) == 0);
  auto first = std::function<std::uint64_t(const TernaryStream&)>(
      [](const TernaryStream& p) { return static_cast<std::uint64_t>(p.at(0)); });
  CHECK(least_uc_modulus(first, 4, kDefaultCap) == 1);
  CHECK_THROWS_AS(least_uc_modulus(first, 40, kDefaultCap), CapExceededError);
}

TEST_CASE("fan search: depths, the empty-word bar, and exact node accounting") {
  auto depth3 = [](const Word& s) { return s.size() >= 3; };
  CHECK(fan_uniform_depth(depth3, 3, kDefaultCap) == 3);
  CHECK(fan_uniform_depth(depth3, 2, kDefaultCap) == 3);
  CHECK(fan_uniform_depth([](const Word&) { return true; }, 3, kDefaultCap) == 0);
  // The ternary fan to depth 3 visits 1 + 3 + 9 + 27 = 40 nodes.
  CHECK(fan_uniform_depth(depth3, 3, 40) == 3);
  CHECK_THROWS_AS(fan_uniform_depth(depth3, 3, 39), CapExceededError);
  CHECK_THROWS_AS(fan_uniform_depth([](const Word&) { return false; }, 2, 1000),
                  CapExceededError);
}

TEST_CASE("pointwise-to-uniform: worked values for flat self-moduli") {
  UniformModulus w2 = pointwise_to_uniform_modulus(ternary_const(2, true, true), kDefaultCap);
  for (std::uint64_t k = 0; k <= 5; ++k) CHECK(w2.at(k) == k + 3);

  ModulusFamily zero = ModulusFamily::on_ternary(
      [](std::uint64_t, const TernaryStream&) -> std::uint64_t { return 0; }, true, true);
  UniformModulus w0 = pointwise_to_uniform_modulus(zero, kDefaultCap);
  for (std::uint64_t k = 0; k <= 5; ++k) CHECK(w0.at(k) == 0);

  ModulusFamily binary = ModulusFamily::on_binary(
      [](std::uint64_t k, const BinaryStream&) { return k + 1; }, true, true);
  UniformModulus wb = pointwise_to_uniform_modulus(binary, kDefaultCap);
  for (std::uint64_t k = 0; k <= 5; ++k) CHECK(wb.at(k) == k + 2);

  CHECK_THROWS_AS(pointwise_to_uniform_modulus(ternary_const(0, false, true), kDefaultCap),
                  std::invalid_argument);
}

TEST_CASE("pointwise-to-uniform sees through unused stream dependence") {
  // The family inspects digits but its value never depends on them, so the
  // factoring step must still find lookahead 0.
  ModulusFamily peeking = ModulusFamily::on_ternary(
      [](std::uint64_t k, const TernaryStream& a) {
        return k + 1 + static_cast<std::uint64_t>(a.at(0) * 0);
      },
      true, true);
  UniformModulus w = pointwise_to_uniform_modulus(peeking, kDefaultCap);
  for (std::uint64_t k = 0; k <= 4; ++k) CHECK(w.at(k) == k + 2);
}

TEST_CASE("a uniform modulus normalizes to a monotone table") {
  UniformModulus w([](std::uint64_t k) -> std::uint64_t { return k == 2 ? 0 : k; });
  CHECK(w.at(0) == 0);
  CHECK(w.at(1) == 1);
  CHECK(w.at(2) == 1);  // raw dip is lifted to keep the table monotone
  CHECK(w.at(3) == 3);
}

TEST_CASE("domain bridges evaluate through the coding maps") {
  ModulusFamily intensional = ModulusFamily::on_real(
      [](std::uint64_t k, const RegularReal& x) {
        return k + (approx(x, 5) > Rational(1, 2) ? 10 : 0);
      },
      false, true);
  ModulusFamily on_paths = ternary_from_intensional(intensional);
  CHECK(on_paths.domain() == ModulusDomain::Ternary);
  CHECK(on_paths.eval(1, TernaryStream::constant(0)) == 1);
  CHECK(on_paths.eval(1, TernaryStream::constant(2)) == 11);

  ModulusFamily ternary = ModulusFamily::on_ternary(
      [](std::uint64_t k, const TernaryStream& a) {
        return k + static_cast<std::uint64_t>(a.at(0));
      },
      false, true);
  ModulusFamily on_reals = intensional_from_ternary(ternary);
  CHECK(on_reals.domain() == ModulusDomain::Intensional);
  CHECK(on_reals.eval(2, RegularReal::constant(Rational(0))) == 2);
  CHECK(on_reals.eval(2, RegularReal::constant(Rational(1))) == 4);
  CHECK_THROWS_AS(ternary_from_intensional(ternary), std::invalid_argument);
  CHECK_THROWS_AS(intensional_from_ternary(intensional), std::invalid_argument);
}

TEST_CASE("sampled verdicts accept an honest modulus") {
  Rng rng(88);
  std::vector<std::pair<RegularReal, RegularReal>> pairs;
  for (int i = 0; i < 15; ++i) {
    Rational x = random_dyadic(rng, 10);
    pairs.emplace_back(RegularReal::constant(x),
                       RegularReal::constant(x + Rational::pow2(-26)));
  }
  ModulusReport report = check_modulus(identity_fn(), pairs, 8, 12);
  CHECK(report.clean());
  CHECK(report.triggered == pairs.size() * 9);  // every pair is close enough at every k
}

TEST_CASE("sampled verdicts expose a lying modulus") {
  // Claims no lookahead is ever needed while the function moves distance 1.
  ModulatedRealFn lying{[](const RegularReal& x) { return x; },
                        ModulusFamily::on_ternary(
                            [](std::uint64_t, const TernaryStream&) -> std::uint64_t { return 0; },
                            true, true)};
  std::vector<std::pair<RegularReal, RegularReal>> pairs{
      {RegularReal::constant(Rational(0)), RegularReal::constant(Rational(1))}};
  ModulusReport report = check_modulus(lying, pairs, 4, 12);
  CHECK(!report.clean());
  CHECK(report.triggered == 5);
  REQUIRE(!report.violations.empty());
  CHECK(report.violations.front().k >= 1);  // k = 0 tolerates a unit jump
  CHECK(report.violations.front().pair_index == 0);
}
