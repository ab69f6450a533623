#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "core/rational.hpp"
#include "core/reals.hpp"
#include "core/streams.hpp"

namespace conreal {

// Domain a modulus family is indexed over: binary streams, ternary streams,
// or raw regular-sequence values probed intensionally (term by term).
enum class ModulusDomain { Binary, Ternary, Intensional };

// Family of pointwise continuity moduli g_k: value g_k(p) is a lookahead such
// that inputs agreeing with p to that depth (for streams) or within
// 2^-g_k(p) (for reals) produce outputs within 2^-k.
// Flags are contractual hints: self_modulus means each g_k is a modulus of
// its own continuity, monotone_in_k means g_k <= g_{k+1} pointwise.
class ModulusFamily {
 public:
  using BinaryEval = std::function<std::uint64_t(std::uint64_t, const BinaryStream&)>;
  using TernaryEval = std::function<std::uint64_t(std::uint64_t, const TernaryStream&)>;
  using RealEval = std::function<std::uint64_t(std::uint64_t, const RegularReal&)>;

  static ModulusFamily on_binary(BinaryEval eval, bool self_modulus = false, bool monotone_in_k = false);
  static ModulusFamily on_ternary(TernaryEval eval, bool self_modulus = false, bool monotone_in_k = false);
  static ModulusFamily on_real(RealEval eval, bool self_modulus = false, bool monotone_in_k = false);

  std::uint64_t eval(std::uint64_t k, const BinaryStream& p) const;
  std::uint64_t eval(std::uint64_t k, const TernaryStream& p) const;
  std::uint64_t eval(std::uint64_t k, const RegularReal& p) const;
  // Evaluates a stream-domain family on the constant-tail extension of a word.
  std::uint64_t eval_hat(std::uint64_t k, const Word& prefix) const;
  std::uint64_t eval_breve(std::uint64_t k, const Word& prefix) const;

  ModulusDomain domain() const { return domain_; }
  bool self_modulus() const { return self_modulus_; }
  bool monotone_in_k() const { return monotone_in_k_; }

 private:
  ModulusFamily(ModulusDomain d, BinaryEval b, TernaryEval t, RealEval r, bool sm, bool mono)
      : domain_(d), binary_(std::move(b)), ternary_(std::move(t)), real_(std::move(r)),
        self_modulus_(sm), monotone_in_k_(mono) {}
  ModulusDomain domain_;
  BinaryEval binary_;
  TernaryEval ternary_;
  RealEval real_;
  bool self_modulus_;
  bool monotone_in_k_;
};

// Uniform continuity modulus: a total map k -> lookahead, normalised to be
// monotone nondecreasing on construction (values are memoized).
class UniformModulus {
 public:
  explicit UniformModulus(std::function<std::uint64_t(std::uint64_t)> raw);
  std::uint64_t at(std::uint64_t k) const;

 private:
  LazySeq<std::uint64_t> table_;
};

// Real-valued function carried together with its modulus family (ternary or
// intensional domain).
struct ModulatedRealFn {
  std::function<RegularReal(const RegularReal&)> point_fn;
  ModulusFamily modulus;
};

// ---- transforms ------------------------------------------------------------

// Self-modulus transform: G_k(p) = least n <= cap with g_{k+1}(hat of the
// first n digits) < n.  Result is a self-modulus family on the same stream
// domain; rejects intensional families.
ModulusFamily self_modulus(const ModulusFamily& g, std::uint64_t cap);

// max over i <= k; makes the family monotone in k, preserving self-modulus.
ModulusFamily monotonize(const ModulusFamily& g);

// Least n <= bound such that f's value on hat-extensions of length-bound
// words depends only on the first n digits.  Exhaustive over the fan, so the
// number of length-bound words must stay under cap (nodes); otherwise
// CapExceeded.
std::uint64_t least_uc_modulus(const std::function<std::uint64_t(const BinaryStream&)>& f,
                               std::uint64_t bound, std::uint64_t cap);
std::uint64_t least_uc_modulus(const std::function<std::uint64_t(const TernaryStream&)>& f,
                               std::uint64_t bound, std::uint64_t cap);

// Breadth-first fan search: least N such that every length-N word over the
// alphabet has a prefix in the bar.  Counts visited tree nodes against cap.
std::uint64_t fan_uniform_depth(const std::function<bool(const Word&)>& bar, int arity,
                                std::uint64_t cap);

// Pointwise-to-uniform transform for a self-modulus family on a stream
// domain: for each k, a fan search over the settling bar
// (g_{k+1}(hat(s)) <= |s|) yields a uniform bound, the least uniform
// lookahead N_k is extracted from it, and
// omega(k) = max over length-N_k words s of g_{k+1}(hat(s)).
UniformModulus pointwise_to_uniform_modulus(const ModulusFamily& g, std::uint64_t cap);

// Transport between the ternary-stream domain and the intensional domain:
// ternary from intensional probes g at phi(alpha); intensional from ternary
// probes g at the extracted path.
ModulusFamily ternary_from_intensional(const ModulusFamily& g);
ModulusFamily intensional_from_ternary(const ModulusFamily& g);

// ---- sampled modulus verdicts ----------------------------------------------

struct ModulusViolation {
  std::size_t pair_index;
  std::uint64_t k;
  std::string detail;
};

struct ModulusReport {
  std::vector<ModulusViolation> violations;
  std::size_t triggered = 0;  // (pair, k) combinations whose distance gate held
  bool clean() const { return violations.empty(); }
};

// For every sample pair (x, y) and k <= kmax: when the approximants at
// precision max(prec, g_k(x)+2) are within 2^-g_k(x), the outputs' prec-level
// approximants must be within 2^-k + 2^-(prec-1).  A ternary-domain modulus
// is evaluated on the extracted path of x.
ModulusReport check_modulus(const ModulatedRealFn& f,
                            const std::vector<std::pair<RegularReal, RegularReal>>& pairs,
                            std::uint64_t kmax, std::uint64_t prec);

}  // namespace conreal
