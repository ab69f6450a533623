#pragma once

#include <cstdint>
#include <optional>

#include "core/rational.hpp"
#include "core/reals.hpp"
#include "core/streams.hpp"

namespace conreal {

// Value of a binary stream as a middle-third Cantor point:
// sum of 2 b_i 3^-(i+1).  The partial sums converge with tail bound 3^-n, so
// they form a fundamental sequence with modulus ternary_scale; the result is
// its regularisation.
RegularReal kappa(const BinaryStream& beta);

// Cantor interval of a binary word: [sum, 3^-|s| + sum] with
// sum = sum of 2 s_i 3^-(i+1).
RatInterval cantor_interval(const Word& s);

// Least n with 2^-n <= 3^-k (binary depth matching ternary precision k).
std::uint64_t ternary_scale(std::uint64_t k);

// Cantor-path readout of a ternary stream.  Digit 0 is 0 iff the node
// interval at depth ternary_scale(1) lies strictly left of the right
// discontinuum branch; digit n+1 compares depth ternary_scale(n+2) against
// the candidate branch (bits so far)*<1>.  Total on all streams; on streams
// representing discontinuum points it recovers the binary expansion.
BinaryStream gamma(const TernaryStream& alpha);

// Digit n of gamma depends on exactly the first gamma_lookahead(n) digits of
// the input stream; exported so modulus constructions can reuse the bound.
std::uint64_t gamma_lookahead(std::uint64_t n);

// Neighbours of a binary word in the same-length left-to-right order:
// predecessor exists unless s = 0^n, successor unless s = 1^n, and they are
// obtained by flipping around the last 1 (resp. last 0).
struct Neighbors {
  std::optional<Word> pred;
  std::optional<Word> succ;
};
Neighbors immediate_neighbors(const Word& s);

}  // namespace conreal
