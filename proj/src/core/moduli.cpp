#include "core/moduli.hpp"

#include <algorithm>
#include <stdexcept>

#include "core/errors.hpp"
#include "core/spread.hpp"

namespace conreal {

ModulusFamily ModulusFamily::on_binary(BinaryEval eval, bool self_modulus, bool monotone_in_k) {
  return ModulusFamily(ModulusDomain::Binary, std::move(eval), nullptr, nullptr, self_modulus,
                       monotone_in_k);
}

ModulusFamily ModulusFamily::on_ternary(TernaryEval eval, bool self_modulus, bool monotone_in_k) {
  return ModulusFamily(ModulusDomain::Ternary, nullptr, std::move(eval), nullptr, self_modulus,
                       monotone_in_k);
}

ModulusFamily ModulusFamily::on_real(RealEval eval, bool self_modulus, bool monotone_in_k) {
  return ModulusFamily(ModulusDomain::Intensional, nullptr, nullptr, std::move(eval), self_modulus,
                       monotone_in_k);
}

std::uint64_t ModulusFamily::eval(std::uint64_t k, const BinaryStream& p) const {
  if (domain_ != ModulusDomain::Binary) throw std::invalid_argument("modulus family is not binary-domain");
  return binary_(k, p);
}

std::uint64_t ModulusFamily::eval(std::uint64_t k, const TernaryStream& p) const {
  if (domain_ != ModulusDomain::Ternary) throw std::invalid_argument("modulus family is not ternary-domain");
  return ternary_(k, p);
}

std::uint64_t ModulusFamily::eval(std::uint64_t k, const RegularReal& p) const {
  if (domain_ != ModulusDomain::Intensional)
    throw std::invalid_argument("modulus family is not intensional-domain");
  return real_(k, p);
}

std::uint64_t ModulusFamily::eval_hat(std::uint64_t k, const Word& prefix) const {
  switch (domain_) {
    case ModulusDomain::Binary:
      return binary_(k, hat_binary(prefix));
    case ModulusDomain::Ternary:
      return ternary_(k, hat(prefix));
    default:
      throw std::invalid_argument("hat extension needs a stream-domain modulus family");
  }
}

std::uint64_t ModulusFamily::eval_breve(std::uint64_t k, const Word& prefix) const {
  switch (domain_) {
    case ModulusDomain::Binary:
      return binary_(k, breve_binary(prefix));
    case ModulusDomain::Ternary:
      return ternary_(k, breve(prefix));
    default:
      throw std::invalid_argument("breve extension needs a stream-domain modulus family");
  }
}

UniformModulus::UniformModulus(std::function<std::uint64_t(std::uint64_t)> raw)
    : table_([raw = std::move(raw)](std::size_t n, const std::vector<std::uint64_t>& prev) {
        std::uint64_t v = raw(n);
        return n == 0 ? v : std::max(v, prev[n - 1]);
      }) {}

std::uint64_t UniformModulus::at(std::uint64_t k) const { return table_.at(static_cast<std::size_t>(k)); }

namespace {

int domain_arity(const ModulusFamily& g) {
  switch (g.domain()) {
    case ModulusDomain::Binary:
      return 2;
    case ModulusDomain::Ternary:
      return 3;
    default:
      throw std::invalid_argument("operation needs a stream-domain modulus family");
  }
}

// Least n <= cap with g_{k+1} settling on the zero-extended prefix: once
// g_{k+1}(hat(first n digits)) < n, the hat point and the stream agree past
// that lookahead, so the value is pinned.
template <typename Stream>
std::uint64_t self_modulus_eval(const ModulusFamily& g, std::uint64_t cap, std::uint64_t k,
                                const Stream& p) {
  for (std::uint64_t n = 0; n <= cap; ++n) {
    if (g.eval_hat(k + 1, p.prefix(static_cast<std::size_t>(n))) < n) return n;
  }
  throw CapExceededError("self-modulus search found no settling depth", cap);
}

}  // namespace

ModulusFamily self_modulus(const ModulusFamily& g, std::uint64_t cap) {
  bool monotone = g.monotone_in_k();
  switch (g.domain()) {
    case ModulusDomain::Binary:
      return ModulusFamily::on_binary(
          [g, cap](std::uint64_t k, const BinaryStream& p) { return self_modulus_eval(g, cap, k, p); },
          /*self_modulus=*/true, monotone);
    case ModulusDomain::Ternary:
      return ModulusFamily::on_ternary(
          [g, cap](std::uint64_t k, const TernaryStream& p) { return self_modulus_eval(g, cap, k, p); },
          /*self_modulus=*/true, monotone);
    default:
      throw std::invalid_argument("self-modulus transform needs a stream-domain family");
  }
}

ModulusFamily monotonize(const ModulusFamily& g) {
  bool self = g.self_modulus();
  switch (g.domain()) {
    case ModulusDomain::Binary:
      return ModulusFamily::on_binary(
          [g](std::uint64_t k, const BinaryStream& p) {
            std::uint64_t best = 0;
            for (std::uint64_t i = 0; i <= k; ++i) best = std::max(best, g.eval(i, p));
            return best;
          },
          self, /*monotone_in_k=*/true);
    case ModulusDomain::Ternary:
      return ModulusFamily::on_ternary(
          [g](std::uint64_t k, const TernaryStream& p) {
            std::uint64_t best = 0;
            for (std::uint64_t i = 0; i <= k; ++i) best = std::max(best, g.eval(i, p));
            return best;
          },
          self, /*monotone_in_k=*/true);
    default:
      return ModulusFamily::on_real(
          [g](std::uint64_t k, const RegularReal& p) {
            std::uint64_t best = 0;
            for (std::uint64_t i = 0; i <= k; ++i) best = std::max(best, g.eval(i, p));
            return best;
          },
          self, /*monotone_in_k=*/true);
  }
  throw std::logic_error("unreachable");
}

namespace {

// Enumerates words of a fixed length in lexicographic order, applying fn.
template <typename Fn>
void for_each_word(int arity, std::uint64_t length, Fn&& fn) {
  Word w(static_cast<std::size_t>(length), 0);
  while (true) {
    fn(const_cast<const Word&>(w));
    std::size_t i = w.size();
    while (i > 0 && w[i - 1] == arity - 1) w[--i] = 0;
    if (i == 0) return;
    ++w[i - 1];
  }
}

std::uint64_t word_count(int arity, std::uint64_t length, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < length; ++i) {
    if (total > cap / static_cast<std::uint64_t>(arity) + 1) return cap + 1;
    total *= static_cast<std::uint64_t>(arity);
  }
  return total;
}

template <typename Stream, typename MakeHat>
std::uint64_t least_uc_modulus_impl(const std::function<std::uint64_t(const Stream&)>& f,
                                    std::uint64_t bound, std::uint64_t cap, int arity,
                                    MakeHat&& make_hat) {
  if (word_count(arity, bound, cap) > cap)
    throw CapExceededError("least-modulus scan over the fan is too wide", cap);
  std::vector<std::uint64_t> table;
  table.reserve(static_cast<std::size_t>(word_count(arity, bound, cap)));
  for_each_word(arity, bound, [&](const Word& w) { table.push_back(f(make_hat(w))); });
  for (std::uint64_t n = 0; n <= bound; ++n) {
    // Words sharing a length-n prefix sit in contiguous blocks of this size.
    std::size_t block = 1;
    for (std::uint64_t i = 0; i < bound - n; ++i) block *= static_cast<std::size_t>(arity);
    bool factors = true;
    for (std::size_t start = 0; factors && start < table.size(); start += block) {
      for (std::size_t j = start + 1; j < start + block; ++j) {
        if (table[j] != table[start]) {
          factors = false;
          break;
        }
      }
    }
    if (factors) return n;
  }
  return bound;  // unreachable: n = bound always factors
}

}  // namespace

std::uint64_t least_uc_modulus(const std::function<std::uint64_t(const BinaryStream&)>& f,
                               std::uint64_t bound, std::uint64_t cap) {
  return least_uc_modulus_impl<BinaryStream>(f, bound, cap, 2,
                                             [](const Word& w) { return hat_binary(w); });
}

std::uint64_t least_uc_modulus(const std::function<std::uint64_t(const TernaryStream&)>& f,
                               std::uint64_t bound, std::uint64_t cap) {
  return least_uc_modulus_impl<TernaryStream>(f, bound, cap, 3,
                                              [](const Word& w) { return hat(w); });
}

std::uint64_t fan_uniform_depth(const std::function<bool(const Word&)>& bar, int arity,
                                std::uint64_t cap) {
  std::uint64_t visited = 1;
  if (visited > cap) throw CapExceededError("fan search exhausted its node budget", cap);
  if (bar(Word{})) return 0;
  std::vector<Word> frontier{Word{}};
  std::uint64_t depth = 0;
  while (true) {
    ++depth;
    std::vector<Word> next;
    next.reserve(frontier.size() * static_cast<std::size_t>(arity));
    for (const Word& w : frontier) {
      for (int d = 0; d < arity; ++d) {
        if (++visited > cap)
          throw CapExceededError("fan search exhausted its node budget at depth " +
                                     std::to_string(depth),
                                 cap);
        Word child = word_append(w, static_cast<Digit>(d));
        if (!bar(child)) next.push_back(std::move(child));
      }
    }
    if (next.empty()) return depth;
    frontier = std::move(next);
  }
}

UniformModulus pointwise_to_uniform_modulus(const ModulusFamily& g, std::uint64_t cap) {
  if (!g.self_modulus())
    throw std::invalid_argument("pointwise-to-uniform transform needs a self-modulus family");
  int arity = domain_arity(g);
  return UniformModulus([g, cap, arity](std::uint64_t k) {
    // Settling bar: the hat point of the prefix already exhibits its own
    // lookahead, so the value of g_{k+1} is constant on the whole cylinder.
    auto bar = [&](const Word& s) { return g.eval_hat(k + 1, s) <= s.size(); };
    std::uint64_t uniform_bound = fan_uniform_depth(bar, arity, cap);
    std::uint64_t least;
    if (arity == 2) {
      least = least_uc_modulus(
          std::function<std::uint64_t(const BinaryStream&)>(
              [g, k](const BinaryStream& p) { return g.eval(k + 1, p); }),
          uniform_bound, cap);
    } else {
      least = least_uc_modulus(
          std::function<std::uint64_t(const TernaryStream&)>(
              [g, k](const TernaryStream& p) { return g.eval(k + 1, p); }),
          uniform_bound, cap);
    }
    std::uint64_t omega = 0;
    for_each_word(arity, least, [&](const Word& s) { omega = std::max(omega, g.eval_hat(k + 1, s)); });
    return omega;
  });
}

ModulusFamily ternary_from_intensional(const ModulusFamily& g) {
  if (g.domain() != ModulusDomain::Intensional)
    throw std::invalid_argument("expected an intensional-domain family");
  return ModulusFamily::on_ternary(
      [g](std::uint64_t k, const TernaryStream& alpha) { return g.eval(k, phi(alpha)); },
      /*self_modulus=*/false, g.monotone_in_k());
}

ModulusFamily intensional_from_ternary(const ModulusFamily& g) {
  if (g.domain() != ModulusDomain::Ternary)
    throw std::invalid_argument("expected a ternary-domain family");
  return ModulusFamily::on_real(
      [g](std::uint64_t k, const RegularReal& x) { return g.eval(k, path_of_real(x)); },
      /*self_modulus=*/false, g.monotone_in_k());
}

ModulusReport check_modulus(const ModulatedRealFn& f,
                            const std::vector<std::pair<RegularReal, RegularReal>>& pairs,
                            std::uint64_t kmax, std::uint64_t prec) {
  ModulusReport report;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const RegularReal& x = pairs[i].first;
    const RegularReal& y = pairs[i].second;
    RegularReal fx = f.point_fn(x);
    RegularReal fy = f.point_fn(y);
    std::optional<TernaryStream> path;
    if (f.modulus.domain() == ModulusDomain::Ternary) path = path_of_real(x);
    for (std::uint64_t k = 0; k <= kmax; ++k) {
      std::uint64_t g = path ? f.modulus.eval(k, *path) : f.modulus.eval(k, x);
      std::uint64_t q = std::max(prec, g + 2);
      Rational din = abs(x.term(q) - y.term(q));
      if (din > Rational::pow2(-static_cast<long>(g))) continue;
      ++report.triggered;
      Rational dout = abs(fx.term(prec) - fy.term(prec));
      Rational allowed = Rational::pow2(-static_cast<long>(k)) + Rational::pow2(1 - static_cast<long>(prec));
      if (dout > allowed) {
        report.violations.push_back(
            {i, k,
             "output gap " + dout.str() + " exceeds " + allowed.str() + " (modulus gave " +
                 std::to_string(g) + ")"});
      }
    }
  }
  return report;
}

}  // namespace conreal
