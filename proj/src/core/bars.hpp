#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/moduli.hpp"
#include "core/rational.hpp"
#include "core/reals.hpp"
#include "core/streams.hpp"

namespace conreal {

// Decidable monotone set of binary words (membership closed under extension).
// Bars built from a generator list keep it around for exact bound reporting.
class DecidableBar {
 public:
  static DecidableBar from_predicate(std::function<bool(const Word&)> member);
  // Membership = "some listed word is a prefix"; generators may be redundant.
  static DecidableBar from_prefixes(std::vector<Word> generators);
  // One binary word per line; a line spelled "ε" (or "e") is the empty word;
  // blank lines are skipped.  An empty file is the empty bar.
  static DecidableBar from_file(const std::string& path);

  bool member(const Word& s) const { return member_(s); }
  const std::optional<std::vector<Word>>& source_spec() const { return source_; }

 private:
  DecidableBar(std::function<bool(const Word&)> member, std::optional<std::vector<Word>> source)
      : member_(std::move(member)), source_(std::move(source)) {}
  std::function<bool(const Word&)> member_;
  std::optional<std::vector<Word>> source_;
};

// Continuous piecewise-linear map given by breakpoints with strictly
// increasing abscissae; evaluation interpolates, the domain is the breakpoint
// span.
class PiecewiseLinearMap {
 public:
  explicit PiecewiseLinearMap(std::vector<std::pair<Rational, Rational>> points);

  RatInterval domain() const;
  Rational eval(const Rational& x) const;  // x must lie in the domain
  Rational max_abs_slope() const;
  const std::vector<std::pair<Rational, Rational>>& points() const { return points_; }

 private:
  std::vector<std::pair<Rational, Rational>> points_;
};

// Least n < cap such that the first n digits lie in the bar.
std::uint64_t hitting_time(const DecidableBar& bar, const BinaryStream& beta, std::uint64_t cap);

// The plateau map attached to a stream: constant N (the hitting time of the
// stream's Cantor readout) on the Cantor interval of the hit word, extended
// linearly to the neighbouring Cantor intervals' hitting values on either
// side; absent neighbours truncate the domain at 0 resp. 1.
PiecewiseLinearMap build_plateau_map(const DecidableBar& bar, const TernaryStream& alpha,
                                     std::uint64_t cap);

// Value of the induced function along a stream: the plateau map evaluated on
// the stream's approximants, regularised through an explicit slope-aware
// convergence modulus.
RegularReal bar_fn_eval_ternary(const DecidableBar& bar, const TernaryStream& alpha,
                                std::uint64_t cap);

// Induced real function: evaluate along the extracted path.
RegularReal bar_fn_eval(const DecidableBar& bar, const RegularReal& x, std::uint64_t cap);

// Ternary-domain modulus family of the induced function:
// g_k(alpha) = max(N, omega(k) + 1) where N separates the lookahead node
// interval from the neighbouring Cantor intervals and omega is the
// slope-derived uniform modulus of the plateau map.  The trivial bar
// (empty word barred) short-circuits to the constant-0 family.
ModulusFamily bar_fn_modulus(const DecidableBar& bar, std::uint64_t cap);

// Checks the characteristic identity: the induced function evaluated at the
// Cantor point of beta equals (to depth prec) the hitting time of beta.
bool verify_hitting(const DecidableBar& bar, const BinaryStream& beta, std::uint64_t prec,
                    std::uint64_t cap);

// Least N with every length-N binary word barred (fan search).
std::uint64_t bar_uniform_bound(const DecidableBar& bar, std::uint64_t cap);

}  // namespace conreal
