#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace conreal {

// Arbitrary-precision natural number (used for node numbers and code values).
using Natural = mpz_class;

// Exact rational, always kept in canonical form: gcd(|num|, den) = 1, den > 0,
// zero is 0/1.  Thin wrapper over GMP so canonicalisation cannot be skipped.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design for literals
  Rational(long n, unsigned long d);
  Rational(const Natural& n, const Natural& d);
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  const mpq_class& raw() const { return v_; }
  Natural num() const { return v_.get_num(); }
  Natural den() const { return v_.get_den(); }

  // 2^e for any integer e (negative exponents give dyadic fractions).
  static Rational pow2(long e);
  // 3^-e for e >= 0.
  static Rational pow3_inv(unsigned long e);

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ / b.v_)); }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  int sign() const { return mpq_sgn(v_.get_mpq_t()); }

  // Canonical text form "p/q", with "/q" omitted when q = 1.
  std::string str() const;

 private:
  mpq_class v_;
};

Rational abs(const Rational& r);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

// Parses "p" or "p/q" (q > 0) into canonical form; throws ParseError.
Rational parse_rational(const std::string& text);

// Closed rational interval [lo, hi] with lo <= hi.
struct RatInterval {
  Rational lo;
  Rational hi;

  RatInterval(Rational l, Rational h);

  Rational length() const { return hi - lo; }
  bool operator==(const RatInterval& o) const { return lo == o.lo && hi == o.hi; }
};

// I lies within J (refinement order: J.lo <= I.lo and I.hi <= J.hi).
bool interval_within(const RatInterval& inner, const RatInterval& outer);
// I and J overlap or share an endpoint.
bool interval_touches(const RatInterval& a, const RatInterval& b);

// Injective encodings into the naturals (encoding v1; see decode docs below).
//   integers:  zig-zag  z >= 0 -> 2z, z < 0 -> -2z-1
//   pairs:     Cantor pairing  pair(a,b) = (a+b)(a+b+1)/2 + b
//   rational:  pair(zigzag(num), den-1) of the canonical form
//   interval:  pair(encode(lo), encode(hi))
// Every natural unpairs; decoding checks canonicity (resp. lo <= hi) and
// returns nullopt for naturals that are not codes.
Natural pair_encode(const Natural& a, const Natural& b);
void pair_decode(const Natural& n, Natural& a, Natural& b);
Natural encode_rational(const Rational& r);
std::optional<Rational> decode_rational(const Natural& n);
Natural encode_interval(const RatInterval& iv);
std::optional<RatInterval> decode_interval(const Natural& n);

}  // namespace conreal
