#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "core/rational.hpp"
#include "core/seq.hpp"

namespace conreal {

// Real given by a regular sequence: |r_n - r_{n+1}| <= 2^-(n+1), so term n is
// within 2^-n of the limit.
class RegularReal {
 public:
  static RegularReal from_terms(std::function<Rational(std::size_t)> terms);
  static RegularReal from_step(LazySeq<Rational>::Step step);
  static RegularReal constant(const Rational& q);

  Rational term(std::size_t n) const { return terms_.at(n); }

 private:
  explicit RegularReal(LazySeq<Rational> terms) : terms_(std::move(terms)) {}
  LazySeq<Rational> terms_;
};

// Cauchy sequence with an explicit convergence modulus:
// |r_{delta(k)+n} - r_{delta(k)+m}| <= 2^-k.
class FundamentalReal {
 public:
  FundamentalReal(std::function<Rational(std::size_t)> terms,
                  std::function<std::uint64_t(std::uint64_t)> modulus);

  Rational term(std::size_t n) const { return terms_.at(n); }
  std::uint64_t modulus(std::uint64_t k) const { return modulus_(k); }

 private:
  LazySeq<Rational> terms_;
  std::function<std::uint64_t(std::uint64_t)> modulus_;
};

// Nested sequence of closed rational intervals whose lengths fall below
// 2^-k from index witness(k) on.
class ShrinkingReal {
 public:
  ShrinkingReal(std::function<RatInterval(std::size_t)> intervals,
                std::function<std::uint64_t(std::uint64_t)> witness);
  static ShrinkingReal from_step(LazySeq<RatInterval>::Step step,
                                 std::function<std::uint64_t(std::uint64_t)> witness);

  RatInterval interval(std::size_t n) const { return intervals_.at(n); }
  std::uint64_t witness(std::uint64_t k) const { return witness_(k); }

 private:
  ShrinkingReal(LazySeq<RatInterval> intervals, std::function<std::uint64_t(std::uint64_t)> witness)
      : intervals_(std::move(intervals)), witness_(std::move(witness)) {}
  LazySeq<RatInterval> intervals_;
  std::function<std::uint64_t(std::uint64_t)> witness_;
};

// ---- finite-depth contract checks -----------------------------------------

// First index < depth violating the regularity bound, if any.
std::optional<std::size_t> regular_check_prefix(const RegularReal& x, std::size_t depth);
// Checks the modulus contract for all k <= kmax with offsets n, m <= span.
bool fundamental_check_prefix(const FundamentalReal& x, std::uint64_t kmax, std::uint64_t span);
// Checks nesting up to depth and the length bound at the witnesses for k <= kmax.
bool shrinking_check_prefix(const ShrinkingReal& x, std::size_t depth, std::uint64_t kmax);

// ---- conversions (order-preserving bijections between the carriers) -------

// Term n of the result is the fundamental term at index modulus(n+1).
RegularReal regular_from_fundamental(const FundamentalReal& x);
// Same terms with the identity modulus.
FundamentalReal fundamental_from_regular(const RegularReal& x);
// Term n is the left endpoint of the first interval of length <= 2^-(n+1);
// the linear search is capped (a broken witness otherwise loops forever).
RegularReal regular_from_shrinking(const ShrinkingReal& x, std::uint64_t cap);
// Interval n is [r_{n+1} - 2^-(n+1), r_{n+1} + 2^-(n+1)].
ShrinkingReal shrinking_from_regular(const RegularReal& x);

// ---- arithmetic (addition, negation, absolute value) -----------------------

RegularReal add(const RegularReal& x, const RegularReal& y);
RegularReal negate(const RegularReal& x);
RegularReal absolute(const RegularReal& x);

FundamentalReal add(const FundamentalReal& x, const FundamentalReal& y);
FundamentalReal negate(const FundamentalReal& x);
FundamentalReal absolute(const FundamentalReal& x);

ShrinkingReal add(const ShrinkingReal& x, const ShrinkingReal& y);
ShrinkingReal negate(const ShrinkingReal& x);
ShrinkingReal absolute(const ShrinkingReal& x);

// ---- observation -----------------------------------------------------------

// A rational within 2^-k of the value.
Rational approx(const RegularReal& x, std::uint64_t k);

// Equality at finite depth: |x_{n+1} - y_{n+1}| <= 2^-n for all n < depth.
bool eq_at(const RegularReal& x, const RegularReal& y, std::size_t depth);

enum class OrderKind { LessAt, GreaterAt, IndistinguishableAtCap };
struct Trichotomy {
  OrderKind kind;
  std::uint64_t witness;  // index of the separating gap; the cap when indistinguishable
};

// Scans n < cap for the first index with y_{n+1} - x_{n+1} > 2^-n (x < y) or
// the mirror image (x > y).
Trichotomy less_at(const RegularReal& x, const RegularReal& y, std::uint64_t cap);

// Comparisons on the other carriers go through the regular representation.
bool eq_at(const FundamentalReal& x, const FundamentalReal& y, std::size_t depth);
bool eq_at(const ShrinkingReal& x, const ShrinkingReal& y, std::size_t depth, std::uint64_t cap);

}  // namespace conreal
