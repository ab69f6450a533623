// Acceptance runner: exercises every advertised quantitative guarantee at
// desk scale and prints one pass/fail line per criterion.  The exit code is
// the number of failed criteria.
//
// Usage: acceptance <cli-binary> <golden-dir> <data-dir>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "core/bars.hpp"
#include "core/cantor.hpp"
#include "core/codes.hpp"
#include "core/errors.hpp"
#include "core/moduli.hpp"
#include "core/rational.hpp"
#include "core/reals.hpp"
#include "core/spread.hpp"
#include "core/streams.hpp"
#include "golden_runner.hpp"
#include "support.hpp"

using namespace conreal;
using namespace conreal::testing;

namespace {

struct Checker {
  int failures = 0;
  std::vector<std::string> notes;
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures;
    if (notes.size() < 4) notes.push_back(what);
  }
};

// Runs one criterion, enforcing its wall-clock budget as part of the verdict.
int run_criterion(int idx, const char* label, double budget_seconds,
                  const std::function<void(Checker&)>& body) {
  Checker c;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("unexpected exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.expect(secs < budget_seconds, "over the " + std::to_string(static_cast<int>(budget_seconds)) +
                                      "s time budget");
  std::printf("[%s] %2d. %s (%.1fs)\n", c.failures == 0 ? "PASS" : "FAIL", idx, label, secs);
  for (const auto& n : c.notes) std::printf("        - %s\n", n.c_str());
  std::fflush(stdout);
  return c.failures == 0 ? 0 : 1;
}

TernaryStream with_head(const Word& head, const TernaryStream& tail) {
  return TernaryStream::from_fn([head, tail](std::size_t j) {
    return j < head.size() ? head[j] : tail.at(j - head.size());
  });
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 4) {
    std::fprintf(stderr, "usage: %s <cli-binary> <golden-dir> <data-dir>\n", argv[0]);
    return 99;
  }
  const std::string cli = argv[1];
  const std::string golden_dir = argv[2];
  const std::string data_dir = argv[3];
  int failed = 0;

  failed += run_criterion(1, "representation round trips agree to depth 40", 10.0, [](Checker& c) {
    Rng rng(101);
    for (int i = 0; i < 200; ++i) {
      RegularReal x = random_unit_regular(rng);
      c.expect(eq_at(x, regular_from_fundamental(fundamental_from_regular(x)), 40),
               "fundamental round trip diverged at iteration " + std::to_string(i));
      c.expect(eq_at(x, regular_from_shrinking(shrinking_from_regular(x), kDefaultCap), 40),
               "shrinking round trip diverged at iteration " + std::to_string(i));
    }
  });

  failed += run_criterion(2, "extracted spread paths reproduce every unit real", 30.0, [](Checker& c) {
    Rng rng(202);
    for (int i = 0; i < 200; ++i) {
      RegularReal x = random_unit_regular(rng);
      c.expect(eq_at(x, phi(path_of_real(x)), 40),
               "path round trip diverged at iteration " + std::to_string(i));
    }
  });

  failed += run_criterion(3, "rewriter keeps node numbers, values, and the window law", 30.0,
                          [](Checker& c) {
    Rng rng(303);
    for (int i = 0; i < 200; ++i) {
      TernaryStream a = random_ternary(rng);
      TernaryStream r = rho(a);
      for (std::size_t n = 0; n <= 60; ++n) {
        Natural da = node_number(a.prefix(n + 1));
        Natural dr = node_number(r.prefix(n + 1));
        c.expect(abs(mpz_class(da - dr)) <= 1,
                 "node drift above 1 at stream " + std::to_string(i) + ", depth " + std::to_string(n));
      }
      c.expect(eq_at(phi(a), phi(r), 40), "value changed at stream " + std::to_string(i));
      for (std::size_t n = 0; n + 2 <= 60; ++n) {
        for (Digit d : {Digit{0}, Digit{2}}) {
          if (r.at(n) == d && r.at(n + 1) == d && r.at(n + 2) == d) {
            c.expect(a.prefix(n + 1) == Word(n + 1, d),
                     "fresh constant window at stream " + std::to_string(i) + ", depth " +
                         std::to_string(n));
          }
        }
      }
    }
  });

  failed += run_criterion(4, "quotient lifts hit the required prefix and value", 30.0, [](Checker& c) {
    Rng rng(404);
    int no_lift = 0;
    for (int i = 0; i < 100; ++i) {
      TernaryStream a = random_ternary(rng);
      std::size_t n = 1 + static_cast<std::size_t>(rng() % 6);
      TernaryStream reduced = rho(a);
      // The target shares the length-(n+6) prefix of the rewritten stream, so
      // it sits well within the lift's distance precondition.
      TernaryStream b = with_head(reduced.prefix(n + 6), random_ternary(rng));
      RegularReal x = phi(b);
      try {
        TernaryStream g = quotient_lift(a, n, x);
        c.expect(g.prefix(n) == reduced.prefix(n),
                 "lift missed the required prefix at iteration " + std::to_string(i));
        c.expect(eq_at(phi(g), x, 30),
                 "lift missed the target value at iteration " + std::to_string(i));
      } catch (const NoLiftFoundError&) {
        ++no_lift;
      }
    }
    c.expect(no_lift == 0, std::to_string(no_lift) + " lifts failed although the target was in range");
  });

  failed += run_criterion(5, "discontinuum readout inverts the embedding on 30 digits", 30.0,
                          [](Checker& c) {
    Rng rng(505);
    for (int i = 0; i < 200; ++i) {
      BinaryStream beta = random_binary(rng);
      BinaryStream back = gamma(path_of_real(kappa(beta)));
      c.expect(back.prefix(30) == beta.prefix(30), "digit mismatch at stream " + std::to_string(i));
    }
  });

  failed += run_criterion(6, "bar functions: hitting identity, modulus, uniform bounds", 120.0,
                          [](Checker& c) {
    Rng rng(606);
    std::vector<std::pair<DecidableBar, std::uint64_t>> bars;  // bar, expected uniform bound
    for (std::size_t d = 0; d <= 4; ++d) bars.emplace_back(uniform_bar(d), d);
    for (int i = 0; i < 20; ++i) {
      std::vector<Word> cut = random_cut(rng, 6);
      std::uint64_t deepest = 0;
      for (const Word& w : cut) deepest = std::max<std::uint64_t>(deepest, w.size());
      bars.emplace_back(DecidableBar::from_prefixes(cut), deepest);
    }
    // Nearby dyadic pairs: far enough apart to matter, close enough that every
    // modulus lookahead the bars produce is triggered.
    std::vector<std::pair<RegularReal, RegularReal>> pairs;
    for (int i = 0; i < 50; ++i) {
      Rational x = random_dyadic(rng, 20);
      pairs.emplace_back(RegularReal::constant(x), RegularReal::constant(x + Rational::pow2(-28)));
    }
    for (std::size_t bi = 0; bi < bars.size(); ++bi) {
      const DecidableBar& bar = bars[bi].first;
      for (int j = 0; j < 100; ++j) {
        c.expect(verify_hitting(bar, random_binary(rng), 25, kDefaultCap),
                 "hitting identity failed on bar " + std::to_string(bi));
      }
      ModulatedRealFn f{[&bar](const RegularReal& x) { return bar_fn_eval(bar, x, kDefaultCap); },
                        bar_fn_modulus(bar, kDefaultCap)};
      ModulusReport rep = check_modulus(f, pairs, 8, 30);
      c.expect(rep.clean(), "modulus violated on bar " + std::to_string(bi) +
                                (rep.violations.empty() ? "" : ": " + rep.violations[0].detail));
      c.expect(rep.triggered > 0, "modulus check never triggered on bar " + std::to_string(bi));
      c.expect(bar_uniform_bound(bar, kDefaultCap) == bars[bi].second,
               "uniform bound off on bar " + std::to_string(bi));
    }
    Rational mid =
        approx(bar_fn_eval(two_level_bar(), RegularReal::constant(Rational(1, 2)), kDefaultCap), 10);
    c.expect(mid.str() == "3/2", "midpoint value printed as " + mid.str());
  });

  failed += run_criterion(7, "function codes round-trip and validate cleanly", 120.0, [](Checker& c) {
    Rng rng(707);
    struct Fixture {
      const char* name;
      ModulatedRealFn fn;
    };
    std::vector<Fixture> fixtures;
    fixtures.push_back({"identity", identity_fn()});
    fixtures.push_back({"constant", constant_fn(Rational(1, 3))});
    fixtures.push_back({"affine", affine_fn(Rational(1, 2), Rational(1, 4))});
    fixtures.push_back({"distance-to-half", abs_half_fn()});
    for (const auto& fx : fixtures) {
      Code code = modulated_fn_to_code(fx.fn, kDefaultCap);
      for (int i = 0; i < 20; ++i) {
        RegularReal x = RegularReal::constant(random_dyadic(rng, 20));
        Rational got = approx(code_eval(code, x, kDefaultCap), 10);
        Rational want = approx(fx.fn.point_fn(x), 10);
        c.expect(abs(got - want) <= Rational::pow2(-8),
                 std::string(fx.name) + " drifted at sample " + std::to_string(i) + " by " +
                     abs(got - want).str());
      }
      CodeReport rep = code_validate(code, 8, 8);
      c.expect(rep.clean(), std::string(fx.name) + " code has " +
                                std::to_string(rep.violations.size()) + " violations");
    }
  });

  failed += run_criterion(8, "uniform-continuity witnesses; pointwise-only code refused", 60.0,
                          [](Checker& c) {
    Rng rng(808);
    struct Fixture {
      const char* name;
      Code code;
    };
    std::vector<Fixture> fixtures;
    fixtures.push_back({"identity", code_identity()});
    fixtures.push_back({"constant", code_constant(Rational(1, 3))});
    fixtures.push_back({"affine", code_affine(Rational(1, 2), Rational(1, 4))});
    fixtures.push_back(
        {"pipeline-constant",
         uc_fn_to_code([](const RegularReal&) { return RegularReal::constant(Rational(1, 3)); },
                       UniformModulus([](std::uint64_t) { return std::uint64_t{0}; }), kDefaultCap)});
    for (const auto& fx : fixtures) {
      UniformModulus omega = code_uc_witness(fx.code, 8, std::uint64_t{1} << 23);
      for (std::uint64_t k = 0; k <= 8; ++k) {
        c.expect(omega.at(k) <= k + 8, std::string(fx.name) + ": witness " +
                                           std::to_string(omega.at(k)) + " above k + 8 at k " +
                                           std::to_string(k));
      }
      // Sampled closeness: inputs sharing omega(k) path digits sit in one node
      // interval, so the induced values must agree to 2^-k (plus the slack of
      // reading both off at precision k + 2).
      for (std::uint64_t k = 0; k <= 8; ++k) {
        Word s(omega.at(k));
        for (int trial = 0; trial < 5; ++trial) {
          for (auto& d : s) d = static_cast<Digit>(rng() % 3);
          RegularReal f1 = code_eval(fx.code, phi(with_head(s, random_ternary(rng))), kDefaultCap);
          RegularReal f2 = code_eval(fx.code, phi(with_head(s, random_ternary(rng))), kDefaultCap);
          Rational gap = abs(f1.term(k + 2) - f2.term(k + 2));
          c.expect(gap <= Rational::pow2(-static_cast<long>(k)) +
                              Rational::pow2(-static_cast<long>(k) - 1),
                   std::string(fx.name) + ": sampled closeness failed at k " + std::to_string(k));
        }
      }
    }
    try {
      code_uc_witness(code_zero_delayed_identity(), 3, 2000);
      c.expect(false, "the never-informative branch produced a witness");
    } catch (const CapExceededError&) {
      // expected: along the all-zero branch the fineness search cannot close
    }
  });

  failed += run_criterion(9, "exhaustive small worlds: successor chains, node numbering", 60.0,
                          [](Checker& c) {
    for (std::size_t n = 0; n <= 12; ++n) {
      Word w(n, 0);
      c.expect(!immediate_neighbors(w).pred.has_value(),
               "the all-zero word has a predecessor at length " + std::to_string(n));
      std::uint64_t index = 0;
      while (true) {
        std::uint64_t value = 0;
        for (Digit d : w) value = value * 2 + d;
        c.expect(value == index, "chain order broken at length " + std::to_string(n));
        Neighbors nb = immediate_neighbors(w);
        if (index + 1 == std::uint64_t{1} << n) {
          c.expect(!nb.succ.has_value(),
                   "the all-one word has a successor at length " + std::to_string(n));
          break;
        }
        c.expect(nb.succ.has_value(), "chain stopped early at length " + std::to_string(n));
        if (!nb.succ) break;
        c.expect(immediate_neighbors(*nb.succ).pred == w,
                 "pred does not invert succ at length " + std::to_string(n));
        w = *nb.succ;
        ++index;
      }
    }
    // Node numbering under concatenation: N(a * c) = 2^|c| (N(a) - 1) + N(c),
    // exhaustively.  Every equal-number instance (same N(a) = N(b), any same-
    // length c, d) follows by subtracting two of these identities.
    std::vector<Word> as, cs;
    for (std::size_t len = 0; len <= 4; ++len)
      for (const Word& w : all_words(3, len)) as.push_back(w);
    for (std::size_t len = 0; len <= 6; ++len)
      for (const Word& w : all_words(3, len)) cs.push_back(w);
    for (const Word& a : as) {
      Natural base = node_number(a) - 1;
      for (const Word& w : cs) {
        Natural expected = (base << w.size()) + node_number(w);
        c.expect(node_number(word_concat(a, w)) == expected,
                 "numbering law failed at a = \"" + word_str(a) + "\", c = \"" + word_str(w) + "\"");
      }
    }
    // Spot the two-word form directly: same node number up front plus a fixed
    // offset behind stays a fixed offset.
    Rng rng(909);
    std::vector<std::vector<Word>> groups(32);
    for (const Word& a : as) groups[node_number(a).get_ui()].push_back(a);
    for (int i = 0; i < 500; ++i) {
      const auto& g = groups[1 + rng() % 31];
      const Word& a = g[rng() % g.size()];
      const Word& b = g[rng() % g.size()];
      std::size_t n = rng() % 7;
      Word cw(n), dw(n);
      for (auto& d : cw) d = static_cast<Digit>(rng() % 3);
      for (auto& d : dw) d = static_cast<Digit>(rng() % 3);
      mpz_class k = mpz_class(node_number(dw)) - node_number(cw);
      c.expect(mpz_class(node_number(word_concat(a, cw))) + k == node_number(word_concat(b, dw)),
               "two-word numbering instance failed");
    }
  });

  failed += run_criterion(10, "command-line transcripts replay byte for byte", 10.0, [&](Checker& c) {
    auto cases = load_golden_cases(golden_dir, data_dir);
    c.expect(cases.size() == 12,
             "expected 12 recorded invocations, found " + std::to_string(cases.size()));
    for (const auto& gc : cases) {
      CliResult got = run_cli(cli, gc.args);
      c.expect(got.exit_code == gc.exit_code, gc.name + ": exit " + std::to_string(got.exit_code) +
                                                  ", wanted " + std::to_string(gc.exit_code));
      c.expect(got.out == gc.expected, gc.name + ": output differs");
    }
  });

  std::printf("%d of 10 criteria passed\n", 10 - failed);
  return failed;
}
