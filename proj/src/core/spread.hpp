#pragma once

#include <array>
#include <cstdint>

#include "core/rational.hpp"
#include "core/reals.hpp"
#include "core/seq.hpp"
#include "core/streams.hpp"

namespace conreal {

// Node number of a ternary word: N(<>) = 1, N(s*<i>) = 2 N(s) + (i - 1).
// Words of length n get numbers in [1, 2^(n+1) - 1]; distinct words may share
// a number (the coding is deliberately redundant).
Natural node_number(const Word& s);

// Dyadic interval attached to a node:
// [2^-(|s|+1) (N(s)-1), 2^-(|s|+1) (N(s)+1)], of length 2^-|s|.
RatInterval node_interval(const Word& s);

// n-th approximant of the stream's value: 2^-(n+1) N(first n digits).
Rational phi_term(const TernaryStream& alpha, std::size_t n);

// The value of a ternary stream as a regular real (terms are phi_term).
RegularReal phi(const TernaryStream& alpha);

// Path extraction: digit n is the least child whose node interval contains
// the clamped approximation window
//   [max(r_{n+3} - 2^-(n+3), 0), min(r_{n+3} + 2^-(n+3), 1)].
// Total for every real in [0,1]; intensional (different regular sequences for
// the same real may extract different paths).  Throws NoCandidateChildError
// when no child fits, which only happens if x is not in the unit interval.
TernaryStream path_of_real(const RegularReal& x);

// One step of the digit rewriter: the four overlap-normalising patterns,
// identity otherwise.
std::array<Digit, 3> rho_window(const std::array<Digit, 3>& w);

// State windows of the rewriter: sigma_0 = rho(a0,a1,a2),
// sigma_{n+1} = rho((sigma_n)_1, a_{n+2}, a_{n+3}).
LazySeq<std::array<Digit, 3>> rho_states(const TernaryStream& alpha);

// Rewritten stream: digit n is (sigma_n)_0.  Value-preserving and
// prefix-faithful: node numbers of prefixes drift by at most 1.
TernaryStream rho(const TernaryStream& alpha);

// Given |x - phi(rho(alpha))| < 2^-(n+5), returns a stream gamma agreeing
// with rho(alpha) on the first n digits and representing x:
// gamma = rho(alpha) first n digits, a bridging block s of length 4 (least in
// lexicographic order), then the path of x from index n+4 on.  The distance
// precondition is pre-checked at precision n+7; failures and an empty
// candidate search both raise NoLiftFoundError.
TernaryStream quotient_lift(const TernaryStream& alpha, std::size_t n, const RegularReal& x);

}  // namespace conreal
