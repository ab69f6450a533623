#include "core/rational.hpp"

#include <cctype>

#include "core/errors.hpp"

namespace conreal {

Rational::Rational(long n, unsigned long d) : v_(n, d) {
  if (d == 0) throw ParseError("rational with zero denominator");
  v_.canonicalize();
}

Rational::Rational(const Natural& n, const Natural& d) : v_(n, d) {
  if (sgn(d) == 0) throw ParseError("rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::pow2(long e) {
  mpq_class q;
  if (e >= 0) {
    mpz_ui_pow_ui(q.get_num().get_mpz_t(), 2, static_cast<unsigned long>(e));
  } else {
    q.get_num() = 1;
    mpz_ui_pow_ui(q.get_den().get_mpz_t(), 2, static_cast<unsigned long>(-e));
  }
  return Rational(q);
}

Rational Rational::pow3_inv(unsigned long e) {
  mpq_class q;
  q.get_num() = 1;
  mpz_ui_pow_ui(q.get_den().get_mpz_t(), 3, e);
  return Rational(q);
}

std::string Rational::str() const { return v_.get_str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational");
  std::size_t slash = text.find('/');
  auto digits_ok = [](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  std::string num = slash == std::string::npos ? text : text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false))
    throw ParseError("malformed rational '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);  // mpz rejects an explicit plus sign
  Natural n(num), d(den);
  if (sgn(d) == 0) throw ParseError("rational with zero denominator '" + text + "'");
  return Rational(n, d);
}

RatInterval::RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
  if (hi < lo) throw std::invalid_argument("interval with hi < lo");
}

bool interval_within(const RatInterval& inner, const RatInterval& outer) {
  return outer.lo <= inner.lo && inner.hi <= outer.hi;
}

bool interval_touches(const RatInterval& a, const RatInterval& b) {
  return b.lo <= a.hi && a.lo <= b.hi;
}

namespace {

Natural zigzag(const Natural& z) {
  if (sgn(z) >= 0) return 2 * z;
  return -2 * z - 1;
}

Natural unzigzag(const Natural& n) {
  if (mpz_even_p(n.get_mpz_t())) return n / 2;
  return -((n + 1) / 2);
}

}  // namespace

Natural pair_encode(const Natural& a, const Natural& b) {
  Natural s = a + b;
  return s * (s + 1) / 2 + b;
}

void pair_decode(const Natural& n, Natural& a, Natural& b) {
  // s = floor((sqrt(8n+1)-1)/2) recovers the diagonal index.
  Natural t = 8 * n + 1;
  Natural r;
  mpz_sqrt(r.get_mpz_t(), t.get_mpz_t());
  Natural s = (r - 1) / 2;
  Natural tri = s * (s + 1) / 2;
  b = n - tri;
  a = s - b;
}

Natural encode_rational(const Rational& r) {
  return pair_encode(zigzag(r.num()), r.den() - 1);
}

std::optional<Rational> decode_rational(const Natural& n) {
  if (sgn(n) < 0) return std::nullopt;
  Natural a, b;
  pair_decode(n, a, b);
  Natural num = unzigzag(a), den = b + 1;
  Natural g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1) return std::nullopt;  // not in canonical form, so not a code
  return Rational(num, den);
}

Natural encode_interval(const RatInterval& iv) {
  return pair_encode(encode_rational(iv.lo), encode_rational(iv.hi));
}

std::optional<RatInterval> decode_interval(const Natural& n) {
  if (sgn(n) < 0) return std::nullopt;
  Natural a, b;
  pair_decode(n, a, b);
  auto lo = decode_rational(a);
  auto hi = decode_rational(b);
  if (!lo || !hi || *hi < *lo) return std::nullopt;
  return RatInterval(*lo, *hi);
}

}  // namespace conreal
