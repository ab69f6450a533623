#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "core/moduli.hpp"
#include "core/rational.hpp"
#include "core/reals.hpp"
#include "core/streams.hpp"

namespace conreal {

// Code of a continuous function: a pure total map from ternary words to
// naturals.  Value 0 carries no information; value v+1 says "on this node the
// function lands in the interval encoded by v".  Expected laws:
//   C1  nonzero values decode to intervals,
//   C2  along every stream the information eventually gets arbitrarily fine,
//   C3  children refine: nonzero parents have nonzero children whose
//       intervals lie within the parent's,
//   C4  nodes with touching node intervals decode to touching intervals.
class Code {
 public:
  explicit Code(std::function<Natural(const Word&)> phi) : phi_(std::move(phi)) {}

  Natural phi(const Word& s) const { return phi_(s); }
  // Decoded payload of a nonzero value, or nullopt when the value is 0 or not
  // a valid interval code.  Split from phi() so callers can decode a value
  // they already hold without paying for a second phi evaluation.
  static std::optional<RatInterval> decode_value(const Natural& value);
  std::optional<RatInterval> payload(const Word& s) const { return decode_value(phi_(s)); }

 private:
  std::function<Natural(const Word&)> phi_;
};

// ---- builtin codes ----------------------------------------------------------

Code code_identity();
Code code_constant(const Rational& q);
// Code of x -> a x + b via exact interval images of the node intervals.
Code code_affine(const Rational& a, const Rational& b);
// Finite explicit table; unlisted words give 0.  Lines: "word value", word a
// ternary digit string or "ε" for the empty word.
Code code_from_table(std::vector<std::pair<Word, Natural>> entries);
Code code_from_file(const std::string& path);
// Identity code silenced on the all-zero words: satisfies C1/C3/C4 but the
// stream 0^omega never receives information, so no uniform witness exists.
Code code_zero_delayed_identity();

// ---- validation -------------------------------------------------------------

struct CodeViolation {
  std::string rule;  // "C1", "C3", "C4"
  Word witness;
  std::optional<Word> witness_other;
  std::string detail;
};

enum class ProgressStatus { Verified, Inconclusive };

struct CodeReport {
  std::uint32_t depth = 0;
  std::uint32_t kmax = 0;
  std::vector<CodeViolation> violations;
  // Index k: whether every length-depth word already has a k-fine prefix.
  std::vector<ProgressStatus> progress;
  bool clean() const { return violations.empty(); }
};

// Exhaustively checks C1/C3/C4 on all words up to the given depth and reports
// C2 progress for k <= kmax along all length-depth words.
CodeReport code_validate(const Code& code, std::uint32_t depth, std::uint32_t kmax);

// Least n < cap with phi of the length-n prefix nonzero and payload length
// <= 2^-k.
std::uint64_t code_locate(const Code& code, std::uint64_t k, const TernaryStream& alpha,
                          std::uint64_t cap);

// Shrinking value along a stream: interval k is the payload at the k-fine
// prefix.
ShrinkingReal code_eval_ternary(const Code& code, const TernaryStream& alpha, std::uint64_t cap);

// Induced real function: evaluate along the extracted path, then regularise.
RegularReal code_eval(const Code& code, const RegularReal& x, std::uint64_t cap);

// Ternary modulus family of the induced function:
// g_k(alpha) = code_locate(k, rewritten alpha) + 6.  Self-modulus and
// monotone in k.
ModulusFamily code_to_ternary_modulus(const Code& code, std::uint64_t cap);

// Code of a function with a ternary modulus family.  The family is first run
// through the self-modulus and monotonising transforms; a word s gets a value
// when some k <= |s| satisfies g_k(breve(s)) <= |s|, and then reports the
// k_s-level approximant of f at the pinned hat point, padded to radius
// 7 * 2^-k_s.
Code modulated_fn_to_code(const ModulatedRealFn& f, std::uint64_t cap);

// Uniform fineness witness: omega(k) = least depth at which every word has a
// k-fine prefix (fan search, counted against cap).  Values for k <= kmax are
// computed eagerly so cap failures surface here.
UniformModulus code_uc_witness(const Code& code, std::uint64_t kmax, std::uint64_t cap);

// Code of a uniformly continuous function given its uniform modulus: wraps
// the constant-in-the-point family k -> omega(k) and reuses the modulated
// pipeline.
Code uc_fn_to_code(const std::function<RegularReal(const RegularReal&)>& point_fn,
                   const UniformModulus& omega, std::uint64_t cap);

}  // namespace conreal
