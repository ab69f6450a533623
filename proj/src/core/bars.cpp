#include "core/bars.hpp"

#include <algorithm>
#include <fstream>

#include "core/cantor.hpp"
#include "core/errors.hpp"
#include "core/spread.hpp"

namespace conreal {

DecidableBar DecidableBar::from_predicate(std::function<bool(const Word&)> member) {
  return DecidableBar(std::move(member), std::nullopt);
}

DecidableBar DecidableBar::from_prefixes(std::vector<Word> generators) {
  auto member = [generators](const Word& s) {
    for (const Word& g : generators) {
      if (word_is_prefix(g, s)) return true;
    }
    return false;
  };
  return DecidableBar(member, std::make_optional(std::move(generators)));
}

DecidableBar DecidableBar::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open bar file '" + path + "'");
  std::vector<Word> generators;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    line = line.substr(start);
    if (line == "\xCE\xB5" || line == "e") {  // "ε"
      generators.push_back(Word{});
      continue;
    }
    generators.push_back(parse_word(line, 2));
  }
  return from_prefixes(std::move(generators));
}

PiecewiseLinearMap::PiecewiseLinearMap(std::vector<std::pair<Rational, Rational>> points)
    : points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("piecewise-linear map needs breakpoints");
  for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
    if (!(points_[i].first < points_[i + 1].first))
      throw std::invalid_argument("breakpoint abscissae must strictly increase");
  }
}

RatInterval PiecewiseLinearMap::domain() const {
  return RatInterval(points_.front().first, points_.back().first);
}

Rational PiecewiseLinearMap::eval(const Rational& x) const {
  if (x < points_.front().first || points_.back().first < x)
    throw std::domain_error("evaluation outside the map's domain");
  for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
    const auto& [x0, y0] = points_[i];
    const auto& [x1, y1] = points_[i + 1];
    if (x <= x1) return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
  }
  return points_.back().second;
}

Rational PiecewiseLinearMap::max_abs_slope() const {
  Rational best(0);
  for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
    Rational slope = abs((points_[i + 1].second - points_[i].second) /
                         (points_[i + 1].first - points_[i].first));
    best = max(best, slope);
  }
  return best;
}

std::uint64_t hitting_time(const DecidableBar& bar, const BinaryStream& beta, std::uint64_t cap) {
  for (std::uint64_t n = 0; n < cap; ++n) {
    if (bar.member(beta.prefix(static_cast<std::size_t>(n)))) return n;
  }
  throw CapExceededError("stream not barred below the cap", cap);
}

namespace {

// Least exponent c >= 0 with 2^c >= max(slope, 1).
std::uint64_t slope_shift(const Rational& slope) {
  std::uint64_t c = 0;
  Rational p(1);
  while (p < slope) {
    p = p * Rational(2);
    ++c;
  }
  return c;
}

struct PlateauData {
  std::uint64_t hit;  // hitting time of the Cantor readout
  Word hit_word;      // the barred binary word
  PiecewiseLinearMap map;
};

PlateauData plateau_data(const DecidableBar& bar, const TernaryStream& alpha, std::uint64_t cap) {
  BinaryStream readout = gamma(alpha);
  std::uint64_t hit = hitting_time(bar, readout, cap);
  Word w = readout.prefix(static_cast<std::size_t>(hit));
  RatInterval plat = cantor_interval(w);
  Rational level(static_cast<long>(hit));

  std::vector<std::pair<Rational, Rational>> pts;
  Neighbors nb = immediate_neighbors(w);
  if (nb.pred) {
    std::uint64_t rise = hitting_time(bar, breve_binary(*nb.pred), cap);
    pts.emplace_back(cantor_interval(*nb.pred).hi, Rational(static_cast<long>(rise)));
  }
  pts.emplace_back(plat.lo, level);
  pts.emplace_back(plat.hi, level);
  if (nb.succ) {
    std::uint64_t fall = hitting_time(bar, hat_binary(*nb.succ), cap);
    pts.emplace_back(cantor_interval(*nb.succ).lo, Rational(static_cast<long>(fall)));
  }
  return PlateauData{hit, std::move(w), PiecewiseLinearMap(std::move(pts))};
}

}  // namespace

PiecewiseLinearMap build_plateau_map(const DecidableBar& bar, const TernaryStream& alpha,
                                     std::uint64_t cap) {
  return plateau_data(bar, alpha, cap).map;
}

RegularReal bar_fn_eval_ternary(const DecidableBar& bar, const TernaryStream& alpha,
                                std::uint64_t cap) {
  PlateauData data = plateau_data(bar, alpha, cap);
  std::uint64_t floor = ternary_scale(data.hit);
  std::uint64_t shift = slope_shift(data.map.max_abs_slope());
  auto map = std::make_shared<PiecewiseLinearMap>(std::move(data.map));
  // Terms below the domain-entry index are clamped so the sequence is total;
  // the convergence modulus stays above both the entry index and the
  // slope-dictated lookahead.
  FundamentalReal along(
      [map, alpha, floor](std::size_t n) {
        return map->eval(phi_term(alpha, std::max<std::size_t>(n, floor)));
      },
      [floor, shift](std::uint64_t k) { return std::max(floor, k + 1 + shift); });
  return regular_from_fundamental(along);
}

RegularReal bar_fn_eval(const DecidableBar& bar, const RegularReal& x, std::uint64_t cap) {
  return bar_fn_eval_ternary(bar, path_of_real(x), cap);
}

ModulusFamily bar_fn_modulus(const DecidableBar& bar, std::uint64_t cap) {
  if (bar.member(Word{})) {
    // Trivial bar: the induced function is constant 0, any lookahead works.
    return ModulusFamily::on_ternary([](std::uint64_t, const TernaryStream&) { return std::uint64_t{0}; },
                                     /*self_modulus=*/true, /*monotone_in_k=*/true);
  }
  return ModulusFamily::on_ternary(
      [bar, cap](std::uint64_t k, const TernaryStream& alpha) {
        PlateauData data = plateau_data(bar, alpha, cap);
        RatInterval look = node_interval(alpha.prefix(static_cast<std::size_t>(ternary_scale(data.hit))));
        Neighbors nb = immediate_neighbors(data.hit_word);

        std::uint64_t n = 0;
        auto separated = [&](std::uint64_t m) {
          Rational margin = Rational::pow2(-static_cast<long>(m));
          if (nb.pred && !(cantor_interval(*nb.pred).hi < look.lo - margin)) return false;
          if (nb.succ && !(look.hi + margin < cantor_interval(*nb.succ).lo)) return false;
          return true;
        };
        // The lookahead interval sits strictly between the neighbouring
        // Cantor intervals, so a separating margin exists; the cap only
        // guards against a broken readout.
        while (!separated(n)) {
          if (++n > cap) throw CapExceededError("no separating margin found", cap);
        }

        Rational slope = data.map.max_abs_slope();
        std::uint64_t omega = slope.sign() == 0 ? 0 : k + slope_shift(slope);
        return std::max(n, omega + 1);
      },
      /*self_modulus=*/false, /*monotone_in_k=*/true);
}

bool verify_hitting(const DecidableBar& bar, const BinaryStream& beta, std::uint64_t prec,
                    std::uint64_t cap) {
  std::uint64_t hit = hitting_time(bar, beta, cap);
  RegularReal value = bar_fn_eval(bar, kappa(beta), cap);
  return eq_at(value, RegularReal::constant(Rational(static_cast<long>(hit))),
               static_cast<std::size_t>(prec));
}

std::uint64_t bar_uniform_bound(const DecidableBar& bar, std::uint64_t cap) {
  return fan_uniform_depth([&bar](const Word& s) { return bar.member(s); }, 2, cap);
}

}  // namespace conreal
