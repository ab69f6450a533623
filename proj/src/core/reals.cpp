#include "core/reals.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace conreal {

RegularReal RegularReal::from_terms(std::function<Rational(std::size_t)> terms) {
  return RegularReal(LazySeq<Rational>::from_fn(std::move(terms)));
}

RegularReal RegularReal::from_step(LazySeq<Rational>::Step step) {
  return RegularReal(LazySeq<Rational>(std::move(step)));
}

RegularReal RegularReal::constant(const Rational& q) {
  return from_terms([q](std::size_t) { return q; });
}

FundamentalReal::FundamentalReal(std::function<Rational(std::size_t)> terms,
                                 std::function<std::uint64_t(std::uint64_t)> modulus)
    : terms_(LazySeq<Rational>::from_fn(std::move(terms))), modulus_(std::move(modulus)) {}

ShrinkingReal::ShrinkingReal(std::function<RatInterval(std::size_t)> intervals,
                             std::function<std::uint64_t(std::uint64_t)> witness)
    : intervals_(LazySeq<RatInterval>::from_fn(std::move(intervals))), witness_(std::move(witness)) {}

ShrinkingReal ShrinkingReal::from_step(LazySeq<RatInterval>::Step step,
                                       std::function<std::uint64_t(std::uint64_t)> witness) {
  return ShrinkingReal(LazySeq<RatInterval>(std::move(step)), std::move(witness));
}

std::optional<std::size_t> regular_check_prefix(const RegularReal& x, std::size_t depth) {
  for (std::size_t n = 0; n < depth; ++n) {
    if (abs(x.term(n) - x.term(n + 1)) > Rational::pow2(-static_cast<long>(n + 1))) return n;
  }
  return std::nullopt;
}

bool fundamental_check_prefix(const FundamentalReal& x, std::uint64_t kmax, std::uint64_t span) {
  for (std::uint64_t k = 0; k <= kmax; ++k) {
    std::uint64_t base = x.modulus(k);
    Rational bound = Rational::pow2(-static_cast<long>(k));
    for (std::uint64_t n = 0; n <= span; ++n) {
      for (std::uint64_t m = n + 1; m <= span; ++m) {
        if (abs(x.term(base + n) - x.term(base + m)) > bound) return false;
      }
    }
  }
  return true;
}

bool shrinking_check_prefix(const ShrinkingReal& x, std::size_t depth, std::uint64_t kmax) {
  for (std::size_t n = 0; n + 1 < depth; ++n) {
    if (!interval_within(x.interval(n + 1), x.interval(n))) return false;
  }
  for (std::uint64_t k = 0; k <= kmax; ++k) {
    if (x.interval(x.witness(k)).length() > Rational::pow2(-static_cast<long>(k))) return false;
  }
  return true;
}

RegularReal regular_from_fundamental(const FundamentalReal& x) {
  return RegularReal::from_terms([x](std::size_t n) { return x.term(x.modulus(n + 1)); });
}

FundamentalReal fundamental_from_regular(const RegularReal& x) {
  return FundamentalReal([x](std::size_t n) { return x.term(n); },
                         [](std::uint64_t k) { return k; });
}

RegularReal regular_from_shrinking(const ShrinkingReal& x, std::uint64_t cap) {
  return RegularReal::from_terms([x, cap](std::size_t n) {
    Rational bound = Rational::pow2(-static_cast<long>(n + 1));
    for (std::uint64_t m = 0; m < cap; ++m) {
      RatInterval iv = x.interval(m);
      if (!(iv.length() > bound)) return iv.lo;
    }
    throw CapExceededError("no interval of length 2^-" + std::to_string(n + 1) +
                               " found; convergence witness is broken",
                           cap);
  });
}

ShrinkingReal shrinking_from_regular(const RegularReal& x) {
  return ShrinkingReal(
      [x](std::size_t n) {
        Rational r = x.term(n + 1);
        Rational h = Rational::pow2(-static_cast<long>(n + 1));
        return RatInterval(r - h, r + h);
      },
      [](std::uint64_t k) { return k; });
}

RegularReal add(const RegularReal& x, const RegularReal& y) {
  return RegularReal::from_terms([x, y](std::size_t n) { return x.term(n + 1) + y.term(n + 1); });
}

RegularReal negate(const RegularReal& x) {
  return RegularReal::from_terms([x](std::size_t n) { return -x.term(n); });
}

RegularReal absolute(const RegularReal& x) {
  return RegularReal::from_terms([x](std::size_t n) { return abs(x.term(n)); });
}

FundamentalReal add(const FundamentalReal& x, const FundamentalReal& y) {
  return FundamentalReal(
      [x, y](std::size_t n) { return x.term(n) + y.term(n); },
      [x, y](std::uint64_t k) { return std::max(x.modulus(k + 1), y.modulus(k + 1)); });
}

FundamentalReal negate(const FundamentalReal& x) {
  return FundamentalReal([x](std::size_t n) { return -x.term(n); },
                         [x](std::uint64_t k) { return x.modulus(k); });
}

FundamentalReal absolute(const FundamentalReal& x) {
  return FundamentalReal([x](std::size_t n) { return abs(x.term(n)); },
                         [x](std::uint64_t k) { return x.modulus(k); });
}

ShrinkingReal add(const ShrinkingReal& x, const ShrinkingReal& y) {
  return ShrinkingReal(
      [x, y](std::size_t n) {
        RatInterval a = x.interval(n), b = y.interval(n);
        return RatInterval(a.lo + b.lo, a.hi + b.hi);
      },
      [x, y](std::uint64_t k) { return std::max(x.witness(k + 1), y.witness(k + 1)); });
}

ShrinkingReal negate(const ShrinkingReal& x) {
  return ShrinkingReal(
      [x](std::size_t n) {
        RatInterval a = x.interval(n);
        return RatInterval(-a.hi, -a.lo);
      },
      [x](std::uint64_t k) { return x.witness(k); });
}

ShrinkingReal absolute(const ShrinkingReal& x) {
  return ShrinkingReal(
      [x](std::size_t n) {
        RatInterval a = x.interval(n);
        return RatInterval(max(-a.hi, a.lo), max(-a.lo, a.hi));
      },
      [x](std::uint64_t k) { return x.witness(k); });
}

Rational approx(const RegularReal& x, std::uint64_t k) { return x.term(k); }

bool eq_at(const RegularReal& x, const RegularReal& y, std::size_t depth) {
  for (std::size_t n = 0; n < depth; ++n) {
    if (abs(x.term(n + 1) - y.term(n + 1)) > Rational::pow2(-static_cast<long>(n))) return false;
  }
  return true;
}

Trichotomy less_at(const RegularReal& x, const RegularReal& y, std::uint64_t cap) {
  for (std::uint64_t n = 0; n < cap; ++n) {
    Rational gap = Rational::pow2(-static_cast<long>(n));
    Rational xs = x.term(n + 1), ys = y.term(n + 1);
    if (ys - xs > gap) return {OrderKind::LessAt, n};
    if (xs - ys > gap) return {OrderKind::GreaterAt, n};
  }
  return {OrderKind::IndistinguishableAtCap, cap};
}

bool eq_at(const FundamentalReal& x, const FundamentalReal& y, std::size_t depth) {
  return eq_at(regular_from_fundamental(x), regular_from_fundamental(y), depth);
}

bool eq_at(const ShrinkingReal& x, const ShrinkingReal& y, std::size_t depth, std::uint64_t cap) {
  return eq_at(regular_from_shrinking(x, cap), regular_from_shrinking(y, cap), depth);
}

}  // namespace conreal
