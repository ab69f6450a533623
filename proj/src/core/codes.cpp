#include "core/codes.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "core/errors.hpp"
#include "core/spread.hpp"

namespace conreal {

std::optional<RatInterval> Code::decode_value(const Natural& value) {
  if (value == 0) return std::nullopt;
  return decode_interval(Natural(value - 1));
}

// ---- builtin codes ----------------------------------------------------------

Code code_identity() {
  return Code([](const Word& s) { return Natural(1 + encode_interval(node_interval(s))); });
}

Code code_constant(const Rational& q) {
  Natural value = 1 + encode_interval(RatInterval(q, q));
  return Code([value](const Word&) { return value; });
}

Code code_affine(const Rational& a, const Rational& b) {
  return Code([a, b](const Word& s) {
    RatInterval box = node_interval(s);
    Rational u = a * box.lo + b;
    Rational v = a * box.hi + b;
    if (v < u) std::swap(u, v);
    return Natural(1 + encode_interval(RatInterval(u, v)));
  });
}

Code code_from_table(std::vector<std::pair<Word, Natural>> entries) {
  auto table = std::make_shared<std::map<Word, Natural>>();
  for (auto& [word, value] : entries) (*table)[std::move(word)] = std::move(value);
  return Code([table](const Word& s) {
    auto it = table->find(s);
    return it == table->end() ? Natural(0) : it->second;
  });
}

Code code_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open code file: " + path);
  std::vector<std::pair<Word, Natural>> entries;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string word_text, value_text, extra;
    if (!(fields >> word_text >> value_text) || (fields >> extra)) {
      throw ParseError("code file " + path + " line " + std::to_string(lineno) +
                       ": expected \"word value\"");
    }
    Word word;
    if (word_text != "\xCE\xB5" && word_text != "e") word = parse_word(word_text, 3);
    if (value_text.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("code file " + path + " line " + std::to_string(lineno) +
                       ": value is not a natural number");
    }
    entries.emplace_back(std::move(word), Natural(value_text));
  }
  return code_from_table(std::move(entries));
}

Code code_zero_delayed_identity() {
  return Code([](const Word& s) {
    bool all_zero = std::all_of(s.begin(), s.end(), [](Digit d) { return d == 0; });
    if (all_zero) return Natural(0);
    return Natural(1 + encode_interval(node_interval(s)));
  });
}

// ---- validation -------------------------------------------------------------

namespace {

// Extremal payload endpoints seen among same-shape nodes.  Two words of equal
// length and equal node number span the same subinterval of [0, 1], so the
// touching rule only depends on (length, node number); it is enough to compare
// the largest lower endpoint against the smallest upper endpoint per shape.
struct ShapeStats {
  Rational max_lo;
  Word max_lo_word;
  Rational min_hi;
  Word min_hi_word;
  RatInterval box;

  ShapeStats(const RatInterval& payload, const Word& w, RatInterval node_box)
      : max_lo(payload.lo), max_lo_word(w), min_hi(payload.hi), min_hi_word(w),
        box(std::move(node_box)) {}

  void absorb(const RatInterval& payload, const Word& w) {
    if (payload.lo > max_lo) {
      max_lo = payload.lo;
      max_lo_word = w;
    }
    if (payload.hi < min_hi) {
      min_hi = payload.hi;
      min_hi_word = w;
    }
  }
};

using ShapeKey = std::pair<std::size_t, Natural>;

struct ValidateState {
  const Code* code;
  std::uint32_t depth;
  std::uint32_t kmax;
  std::vector<CodeViolation>* violations;
  std::map<ShapeKey, ShapeStats>* shapes;
  std::vector<bool>* covered;  // index k: every leaf so far had a k-fine prefix
};

void validate_walk(ValidateState& st, Word& word, bool parent_informative,
                   const std::optional<RatInterval>& parent_payload,
                   const std::optional<Rational>& finest_so_far) {
  Natural value = st.code->phi(word);
  std::optional<RatInterval> payload;
  if (value != 0) {
    payload = Code::decode_value(value);
    if (!payload) {
      st.violations->push_back({"C1", word, std::nullopt,
                                "value " + value.get_str() + " does not decode to an interval"});
    } else {
      ShapeKey key{word.size(), node_number(word)};
      auto it = st.shapes->find(key);
      if (it == st.shapes->end()) {
        st.shapes->emplace(key, ShapeStats(*payload, word, node_interval(word)));
      } else {
        it->second.absorb(*payload, word);
      }
      if (parent_payload && !interval_within(*payload, *parent_payload)) {
        Word parent(word.begin(), word.end() - 1);
        st.violations->push_back({"C3", word, parent, "child interval escapes its parent's"});
      }
    }
  } else if (parent_informative) {
    Word parent(word.begin(), word.end() - 1);
    st.violations->push_back({"C3", word, parent, "child of an informative node carries no information"});
  }

  std::optional<Rational> finest = finest_so_far;
  if (payload && (!finest || payload->length() < *finest)) finest = payload->length();

  if (word.size() == st.depth) {
    for (std::uint32_t k = 0; k <= st.kmax; ++k) {
      if (!finest || *finest > Rational::pow2(-static_cast<long>(k))) (*st.covered)[k] = false;
    }
    return;
  }
  for (Digit d = 0; d < 3; ++d) {
    word.push_back(d);
    validate_walk(st, word, value != 0, payload, finest);
    word.pop_back();
  }
}

}  // namespace

CodeReport code_validate(const Code& code, std::uint32_t depth, std::uint32_t kmax) {
  CodeReport report;
  report.depth = depth;
  report.kmax = kmax;

  std::map<ShapeKey, ShapeStats> shapes;
  std::vector<bool> covered(kmax + 1, true);
  ValidateState st{&code, depth, kmax, &report.violations, &shapes, &covered};
  Word word;
  validate_walk(st, word, false, std::nullopt, std::nullopt);

  // Touching rule across (and within) shapes.  Within a shape every pair of
  // payloads must overlap, which is exactly max_lo <= min_hi; across touching
  // shapes the extremal endpoints bound all pairwise combinations.
  for (auto a = shapes.begin(); a != shapes.end(); ++a) {
    for (auto b = a; b != shapes.end(); ++b) {
      if (!interval_touches(a->second.box, b->second.box)) continue;
      if (a->second.max_lo > b->second.min_hi) {
        report.violations.push_back({"C4", a->second.max_lo_word, b->second.min_hi_word,
                                     "payloads of touching nodes do not touch"});
      } else if (a != b && b->second.max_lo > a->second.min_hi) {
        report.violations.push_back({"C4", b->second.max_lo_word, a->second.min_hi_word,
                                     "payloads of touching nodes do not touch"});
      }
    }
  }

  report.progress.reserve(kmax + 1);
  for (std::uint32_t k = 0; k <= kmax; ++k) {
    report.progress.push_back(covered[k] ? ProgressStatus::Verified : ProgressStatus::Inconclusive);
  }
  return report;
}

// ---- evaluation -------------------------------------------------------------

std::uint64_t code_locate(const Code& code, std::uint64_t k, const TernaryStream& alpha,
                          std::uint64_t cap) {
  Rational bound = Rational::pow2(-static_cast<long>(k));
  Word prefix;
  for (std::uint64_t n = 0; n < cap; ++n) {
    auto payload = Code::decode_value(code.phi(prefix));
    if (payload && payload->length() <= bound) return n;
    prefix.push_back(alpha.at(n));
  }
  throw CapExceededError("no sufficiently fine code value along the stream", cap);
}

ShrinkingReal code_eval_ternary(const Code& code, const TernaryStream& alpha, std::uint64_t cap) {
  auto intervals = [code, alpha, cap](std::size_t n) {
    std::uint64_t h = code_locate(code, n, alpha, cap);
    auto payload = Code::decode_value(code.phi(alpha.prefix(h)));
    if (!payload) throw std::logic_error("code payload vanished between locate and read");
    return *payload;
  };
  return ShrinkingReal(intervals, [](std::uint64_t k) { return k; });
}

RegularReal code_eval(const Code& code, const RegularReal& x, std::uint64_t cap) {
  return regular_from_shrinking(code_eval_ternary(code, path_of_real(x), cap), cap);
}

ModulusFamily code_to_ternary_modulus(const Code& code, std::uint64_t cap) {
  auto eval = [code, cap](std::uint64_t k, const TernaryStream& alpha) {
    return code_locate(code, k, rho(alpha), cap) + 6;
  };
  return ModulusFamily::on_ternary(eval, /*self_modulus=*/true, /*monotone_in_k=*/true);
}

// ---- codes from moduli ------------------------------------------------------

Code modulated_fn_to_code(const ModulatedRealFn& f, std::uint64_t cap) {
  if (f.modulus.domain() != ModulusDomain::Ternary) {
    throw std::invalid_argument("modulated_fn_to_code needs a ternary modulus family");
  }
  ModulusFamily pinned = monotonize(self_modulus(f.modulus, cap));
  auto point_fn = f.point_fn;
  return Code([pinned, point_fn](const Word& s) -> Natural {
    // Largest k <= |s| whose pinned modulus is already determined by s; the
    // satisfying set is downward closed because the family is monotone in k.
    std::optional<std::uint64_t> level;
    std::uint64_t settle = 0;
    for (std::uint64_t k = s.size() + 1; k-- > 0;) {
      std::uint64_t g = pinned.eval_breve(k, s);
      if (g <= s.size()) {
        level = k;
        settle = g;
        break;
      }
    }
    if (!level) return Natural(0);
    Word determined(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(settle));
    Rational value = point_fn(phi(breve(determined))).term(*level);
    Rational radius = Rational(7) * Rational::pow2(-static_cast<long>(*level));
    return Natural(1 + encode_interval(RatInterval(value - radius, value + radius)));
  });
}

UniformModulus code_uc_witness(const Code& code, std::uint64_t kmax, std::uint64_t cap) {
  auto raw = [code, cap](std::uint64_t k) {
    Rational bound = Rational::pow2(-static_cast<long>(k));
    auto fine = [&code, &bound](const Word& s) {
      auto payload = Code::decode_value(code.phi(s));
      return payload && payload->length() <= bound;
    };
    return fan_uniform_depth(fine, 3, cap);
  };
  UniformModulus omega{raw};
  for (std::uint64_t k = 0; k <= kmax; ++k) omega.at(k);
  return omega;
}

Code uc_fn_to_code(const std::function<RegularReal(const RegularReal&)>& point_fn,
                   const UniformModulus& omega, std::uint64_t cap) {
  auto eval = [omega](std::uint64_t k, const TernaryStream&) { return omega.at(k); };
  ModulatedRealFn f{point_fn,
                    ModulusFamily::on_ternary(eval, /*self_modulus=*/true, /*monotone_in_k=*/true)};
  return modulated_fn_to_code(f, cap);
}

}  // namespace conreal
