#include "core/cantor.hpp"

#include "core/spread.hpp"

namespace conreal {

namespace {

Rational cantor_partial_sum(const BinaryStream& beta, std::size_t n) {
  Rational sum(0);
  for (std::size_t i = 0; i < n; ++i) {
    if (beta.at(i)) sum += Rational(2) * Rational::pow3_inv(static_cast<unsigned long>(i) + 1);
  }
  return sum;
}

}  // namespace

RegularReal kappa(const BinaryStream& beta) {
  FundamentalReal partials([beta](std::size_t n) { return cantor_partial_sum(beta, n); },
                           [](std::uint64_t k) { return ternary_scale(k); });
  return regular_from_fundamental(partials);
}

RatInterval cantor_interval(const Word& s) {
  Rational sum(0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i]) sum += Rational(2) * Rational::pow3_inv(static_cast<unsigned long>(i) + 1);
  }
  return RatInterval(sum, sum + Rational::pow3_inv(static_cast<unsigned long>(s.size())));
}

std::uint64_t ternary_scale(std::uint64_t k) {
  // least n with 2^n >= 3^k
  Natural three_k;
  mpz_ui_pow_ui(three_k.get_mpz_t(), 3, static_cast<unsigned long>(k));
  Natural two_n = 1;
  std::uint64_t n = 0;
  while (two_n < three_k) {
    two_n *= 2;
    ++n;
  }
  return n;
}

std::uint64_t gamma_lookahead(std::uint64_t n) { return ternary_scale(n + 1); }

BinaryStream gamma(const TernaryStream& alpha) {
  return BinaryStream::from_step([alpha](std::size_t n, const std::vector<Digit>& bits) {
    std::uint64_t depth = gamma_lookahead(n);
    Rational upper = node_interval(alpha.prefix(depth)).hi;
    Word branch(bits.begin(), bits.end());
    branch.push_back(1);
    return upper < cantor_interval(branch).lo ? Digit{0} : Digit{1};
  });
}

Neighbors immediate_neighbors(const Word& s) {
  Neighbors out;
  // predecessor: rewrite the trailing block u*<1>*0^m to u*<0>*1^m
  for (std::size_t i = s.size(); i-- > 0;) {
    if (s[i] == 1) {
      Word p = s;
      p[i] = 0;
      for (std::size_t j = i + 1; j < p.size(); ++j) p[j] = 1;
      out.pred = std::move(p);
      break;
    }
  }
  // successor: rewrite the trailing block u*<0>*1^m to u*<1>*0^m
  for (std::size_t i = s.size(); i-- > 0;) {
    if (s[i] == 0) {
      Word t = s;
      t[i] = 1;
      for (std::size_t j = i + 1; j < t.size(); ++j) t[j] = 0;
      out.succ = std::move(t);
      break;
    }
  }
  return out;
}

}  // namespace conreal
