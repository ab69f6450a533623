#include "core/spread.hpp"

#include "core/errors.hpp"

namespace conreal {

Natural node_number(const Word& s) {
  Natural n = 1;
  for (Digit d : s) n = 2 * n + (static_cast<long>(d) - 1);
  return n;
}

RatInterval node_interval(const Word& s) {
  Natural n = node_number(s);
  Rational scale = Rational::pow2(-static_cast<long>(s.size()) - 1);
  return RatInterval(scale * Rational(n - 1, 1), scale * Rational(n + 1, 1));
}

Rational phi_term(const TernaryStream& alpha, std::size_t n) {
  return Rational::pow2(-static_cast<long>(n) - 1) * Rational(node_number(alpha.prefix(n)), 1);
}

RegularReal phi(const TernaryStream& alpha) {
  return RegularReal::from_terms([alpha](std::size_t n) { return phi_term(alpha, n); });
}

namespace {

// Clamped window around term n+3; its length is at most 2^-(n+2), which is
// exactly the overlap width of adjacent children one level down.
RatInterval approx_window(const RegularReal& x, std::size_t n) {
  Rational r = x.term(n + 3);
  Rational h = Rational::pow2(-static_cast<long>(n) - 3);
  Rational lo = max(r - h, Rational(0));
  Rational hi = min(r + h, Rational(1));
  if (hi < lo) throw NoCandidateChildError("approximation window empty; real outside [0,1]");
  return RatInterval(lo, hi);
}

}  // namespace

TernaryStream path_of_real(const RegularReal& x) {
  return TernaryStream::from_step([x](std::size_t n, const std::vector<Digit>& digits) {
    RatInterval window = approx_window(x, n);
    Word prefix(digits.begin(), digits.end());
    for (Digit i = 0; i < 3; ++i) {
      if (interval_within(window, node_interval(word_append(prefix, i)))) return i;
    }
    throw NoCandidateChildError("no child interval fits at depth " + std::to_string(n) +
                                "; real outside [0,1]");
  });
}

std::array<Digit, 3> rho_window(const std::array<Digit, 3>& w) {
  if (w == std::array<Digit, 3>{1, 2, 2}) return {2, 0, 2};
  if (w == std::array<Digit, 3>{1, 0, 0}) return {0, 2, 0};
  if (w == std::array<Digit, 3>{0, 2, 2}) return {1, 0, 2};
  if (w == std::array<Digit, 3>{2, 0, 0}) return {1, 2, 0};
  return w;
}

LazySeq<std::array<Digit, 3>> rho_states(const TernaryStream& alpha) {
  return LazySeq<std::array<Digit, 3>>(
      [alpha](std::size_t n, const std::vector<std::array<Digit, 3>>& prev) {
        if (n == 0) return rho_window({alpha.at(0), alpha.at(1), alpha.at(2)});
        // Slide the window by one: its first slot is the previous state's
        // middle digit, so step n covers input positions n, n+1, n+2.
        return rho_window({prev[n - 1][1], alpha.at(n + 1), alpha.at(n + 2)});
      });
}

TernaryStream rho(const TernaryStream& alpha) {
  LazySeq<std::array<Digit, 3>> states = rho_states(alpha);
  return TernaryStream::from_fn([states](std::size_t n) { return states.at(n)[0]; });
}

TernaryStream quotient_lift(const TernaryStream& alpha, std::size_t n, const RegularReal& x) {
  TernaryStream reduced = rho(alpha);
  RegularReal anchor = phi(reduced);

  // Distance precheck at precision n+7: if the true distance is below
  // 2^-(n+5), the approximants are within 2^-(n+5) + 2^-(n+6).
  long nl = static_cast<long>(n);
  Rational seen = abs(x.term(n + 7) - anchor.term(n + 7));
  if (!(seen < Rational::pow2(-nl - 5) + Rational::pow2(-nl - 6)))
    throw NoLiftFoundError("lift precondition fails: target too far from the rewritten value");

  TernaryStream beta = path_of_real(x);
  Word head = reduced.prefix(n);
  Natural target = node_number(beta.prefix(n + 4));

  // Enumerate the 3^4 bridging blocks in lexicographic order; the node
  // number of head*s must match the extracted path's at depth n+4.
  for (Digit a = 0; a < 3; ++a)
    for (Digit b = 0; b < 3; ++b)
      for (Digit c = 0; c < 3; ++c)
        for (Digit d = 0; d < 3; ++d) {
          Word block{a, b, c, d};
          if (node_number(word_concat(head, block)) == target) {
            Word prefix = word_concat(head, block);
            return TernaryStream::from_fn([prefix, beta](std::size_t i) {
              return i < prefix.size() ? prefix[i] : beta.at(i);
            });
          }
        }
  throw NoLiftFoundError("no bridging block matches the path's node number");
}

}  // namespace conreal
