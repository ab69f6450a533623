#pragma once
// Shared generators and fixtures for the test suites.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "core/bars.hpp"
#include "core/moduli.hpp"
#include "core/rational.hpp"
#include "core/reals.hpp"
#include "core/streams.hpp"

namespace conreal::testing {

using Rng = std::mt19937_64;

// Writes content to a throwaway file in the working directory and removes it
// when the guard dies.
struct TempFile {
  std::string path;
  explicit TempFile(const std::string& content) {
    path = "fixture_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + ".txt";
    std::ofstream out(path, std::ios::binary);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;
};

// Regular real staying strictly inside (0, 1): starts in [1/4, 3/4] and moves
// by at most 2^-(n+2) at index n, a quarter of the allowed regularity slack,
// so conversions have headroom and the total drift stays below 1/4.
inline RegularReal random_unit_regular(Rng& rng) {
  auto state = std::make_shared<Rng>(rng());
  return RegularReal::from_step([state](std::size_t n, const std::vector<Rational>& prev) {
    if (n == 0) return Rational(static_cast<long>((*state)() % 129 + 64), 256);
    long numer = static_cast<long>((*state)() % 17) - 8;  // in [-8, 8]
    return prev[n - 1] + Rational(numer, 16) * Rational::pow2(-static_cast<long>(n) - 1);
  });
}

inline TernaryStream random_ternary(Rng& rng) {
  auto state = std::make_shared<Rng>(rng());
  return TernaryStream::from_step(
      [state](std::size_t, const std::vector<Digit>&) { return static_cast<Digit>((*state)() % 3); });
}

inline BinaryStream random_binary(Rng& rng) {
  auto state = std::make_shared<Rng>(rng());
  return BinaryStream::from_step(
      [state](std::size_t, const std::vector<Digit>&) { return static_cast<Digit>((*state)() % 2); });
}

// Dyadic rational p / 2^pow in the open interval (margin, 1 - margin) where
// margin = 2^-3; handy for sample points that must sit inside [0, 1].
inline Rational random_dyadic(Rng& rng, unsigned pow) {
  std::uint64_t cells = std::uint64_t{1} << pow;
  std::uint64_t lo = cells / 8 + 1, hi = cells - cells / 8 - 1;
  std::uint64_t p = lo + rng() % (hi - lo + 1);
  return Rational(static_cast<long>(p), static_cast<unsigned long>(cells));
}

inline std::vector<Word> all_words(int arity, std::size_t length) {
  std::vector<Word> out;
  Word w(length, 0);
  while (true) {
    out.push_back(w);
    std::size_t i = length;
    while (i > 0 && w[i - 1] == arity - 1) w[--i] = 0;
    if (i == 0) break;
    ++w[i - 1];
  }
  return out;
}

// Leaves of a random cut of the binary tree: a prefix antichain every
// infinite path meets exactly once, with all leaves at depth <= max_depth.
inline std::vector<Word> random_cut(Rng& rng, std::size_t max_depth) {
  std::vector<Word> leaves;
  std::vector<Word> stack{Word{}};
  while (!stack.empty()) {
    Word w = stack.back();
    stack.pop_back();
    if (w.size() == max_depth || (!w.empty() && rng() % 3 == 0)) {
      leaves.push_back(std::move(w));
    } else {
      stack.push_back(word_append(w, 1));
      stack.push_back(word_append(w, 0));
    }
  }
  return leaves;
}

inline DecidableBar random_antichain_bar(Rng& rng, std::size_t max_depth) {
  return DecidableBar::from_prefixes(random_cut(rng, max_depth));
}

// Every binary word of one fixed length: the bar {|s| >= d} in generator form.
inline DecidableBar uniform_bar(std::size_t d) { return DecidableBar::from_prefixes(all_words(2, d)); }

// The worked two-level example: plateau 1 on [0, 1/3], value 2 from 2/3 on,
// induced value 3/2 at the midpoint.
inline DecidableBar two_level_bar() {
  return DecidableBar::from_prefixes({{0}, {1, 0}, {1, 1}});
}

// ---- modulated function fixtures ---------------------------------------------
// Each pairs a point function on [0, 1] with a ternary modulus family valid
// for it: paths agreeing on g_k digits land in a node interval of length
// 2^-g_k, so a c-Lipschitz function needs g_k = k + ceil(log2 max(c, 1)).

inline ModulatedRealFn identity_fn() {
  return {[](const RegularReal& x) { return x; },
          ModulusFamily::on_ternary(
              [](std::uint64_t k, const TernaryStream&) { return k; },
              /*self_modulus=*/false, /*monotone_in_k=*/true)};
}

inline ModulatedRealFn constant_fn(const Rational& q) {
  return {[q](const RegularReal&) { return RegularReal::constant(q); },
          ModulusFamily::on_ternary(
              [](std::uint64_t, const TernaryStream&) -> std::uint64_t { return 0; },
              /*self_modulus=*/true, /*monotone_in_k=*/true)};
}

inline RegularReal affine_apply(const Rational& a, const Rational& b, const RegularReal& x) {
  std::uint64_t shift = 0;
  while (Rational::pow2(static_cast<long>(shift)) < abs(a)) ++shift;
  return RegularReal::from_terms(
      [a, b, x, shift](std::size_t n) { return a * x.term(n + shift) + b; });
}

inline ModulatedRealFn affine_fn(const Rational& a, const Rational& b) {
  std::uint64_t shift = 0;
  while (Rational::pow2(static_cast<long>(shift)) < abs(a)) ++shift;
  return {[a, b](const RegularReal& x) { return affine_apply(a, b, x); },
          ModulusFamily::on_ternary(
              [shift](std::uint64_t k, const TernaryStream&) { return k + shift; },
              /*self_modulus=*/false, /*monotone_in_k=*/true)};
}

inline ModulatedRealFn abs_half_fn() {
  return {[](const RegularReal& x) {
            return absolute(add(x, negate(RegularReal::constant(Rational(1, 2)))));
          },
          ModulusFamily::on_ternary(
              [](std::uint64_t k, const TernaryStream&) { return k; },
              /*self_modulus=*/false, /*monotone_in_k=*/true)};
}

}  // namespace conreal::testing
