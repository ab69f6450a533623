// Command-line surface over libconreal.  Every computation goes through the
// shared-library C interface; this file only parses arguments and prints.
//
// Exit codes: 0 success, 2 cap exceeded, 3 invalid input, 4 invariant
// violation (including failed verify/check verdicts).

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "conreal/conreal.h"

namespace {

int exit_code(conreal_status st) {
  switch (st) {
    case CONREAL_OK:
      return 0;
    case CONREAL_CAP_EXCEEDED:
      return 2;
    case CONREAL_INVALID:
      return 3;
    default:
      return 4;
  }
}

void check(conreal_status st) {
  if (st == CONREAL_OK) return;
  const char* prefix = "error";
  if (st == CONREAL_CAP_EXCEEDED) prefix = "cap exceeded";
  if (st == CONREAL_INVALID) prefix = "invalid input";
  std::fprintf(stderr, "%s: %s\n", prefix, conreal_last_error());
  std::exit(exit_code(st));
}

struct StrOut {
  char* p = nullptr;
  ~StrOut() { conreal_string_free(p); }
};

using RealPtr = std::unique_ptr<conreal_real, decltype(&conreal_real_free)>;
using TStreamPtr = std::unique_ptr<conreal_tstream, decltype(&conreal_tstream_free)>;
using BStreamPtr = std::unique_ptr<conreal_bstream, decltype(&conreal_bstream_free)>;
using BarPtr = std::unique_ptr<conreal_bar, decltype(&conreal_bar_free)>;
using CodePtr = std::unique_ptr<conreal_code, decltype(&conreal_code_free)>;

RealPtr parse_real(const std::string& spec) {
  conreal_real* raw = nullptr;
  check(conreal_real_parse(spec.c_str(), &raw));
  return {raw, &conreal_real_free};
}

TStreamPtr parse_tstream(const std::string& spec) {
  conreal_tstream* raw = nullptr;
  check(conreal_tstream_parse(spec.c_str(), &raw));
  return {raw, &conreal_tstream_free};
}

BStreamPtr parse_bstream(const std::string& spec) {
  conreal_bstream* raw = nullptr;
  check(conreal_bstream_parse(spec.c_str(), &raw));
  return {raw, &conreal_bstream_free};
}

BarPtr load_bar(const std::string& path) {
  conreal_bar* raw = nullptr;
  check(conreal_bar_load(path.c_str(), &raw));
  return {raw, &conreal_bar_free};
}

CodePtr parse_code(const std::string& spec) {
  conreal_code* raw = nullptr;
  check(conreal_code_parse(spec.c_str(), &raw));
  return {raw, &conreal_code_free};
}

void print_real(const conreal_real* x, std::uint64_t prec) {
  StrOut text;
  check(conreal_real_approx(x, prec, &text.p));
  std::printf("%s\n", text.p);
}

void print_tstream(const conreal_tstream* a, std::uint64_t digits) {
  StrOut text;
  check(conreal_tstream_digits(a, digits, &text.p));
  std::printf("%s\n", text.p);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact constructive reals: representations, spread coding, bars, function codes"};
  app.require_subcommand(1);

  std::uint64_t cap = CONREAL_DEFAULT_CAP;
  app.add_option("--cap", cap, "search budget for unbounded operations")
      ->envname("CONREAL_CAP")
      ->check(CLI::PositiveNumber);

  // ---- real ----
  auto* real = app.add_subcommand("real", "regular real numbers");
  real->require_subcommand(1);
  real->fallthrough();

  std::string approx_x;
  std::uint64_t approx_prec = 30;
  auto* real_approx = real->add_subcommand("approx", "print a rational within 2^-prec");
  real_approx->fallthrough();
  real_approx->add_option("--x", approx_x, "real spec")->required();
  real_approx->add_option("--prec", approx_prec, "output precision");
  real_approx->callback([&] {
    auto x = parse_real(approx_x);
    print_real(x.get(), approx_prec);
  });

  std::string convert_x, convert_via;
  std::uint64_t convert_prec = 30;
  auto* real_convert =
      real->add_subcommand("convert", "round trip through another representation");
  real_convert->fallthrough();
  real_convert->add_option("--x", convert_x, "real spec")->required();
  real_convert->add_option("--via", convert_via, "fundamental or shrinking")->required();
  real_convert->add_option("--prec", convert_prec, "output precision");
  real_convert->callback([&] {
    auto x = parse_real(convert_x);
    conreal_real* back = nullptr;
    check(conreal_real_roundtrip(x.get(), convert_via.c_str(), cap, &back));
    RealPtr owned{back, &conreal_real_free};
    print_real(owned.get(), convert_prec);
  });

  // ---- spread ----
  auto* spread = app.add_subcommand("spread", "ternary spread coding of [0, 1]");
  spread->require_subcommand(1);
  spread->fallthrough();

  std::string phi_path;
  std::uint64_t phi_prec = 30;
  auto* spread_phi = spread->add_subcommand("phi", "value of a ternary path");
  spread_phi->fallthrough();
  spread_phi->add_option("--path", phi_path, "ternary stream spec")->required();
  spread_phi->add_option("--prec", phi_prec, "output precision");
  spread_phi->callback([&] {
    auto a = parse_tstream(phi_path);
    conreal_real* x = nullptr;
    check(conreal_spread_phi(a.get(), &x));
    RealPtr owned{x, &conreal_real_free};
    print_real(owned.get(), phi_prec);
  });

  std::string extract_x;
  std::uint64_t extract_digits = 30;
  auto* spread_extract = spread->add_subcommand("extract", "path of a real in [0, 1]");
  spread_extract->fallthrough();
  spread_extract->add_option("--x", extract_x, "real spec")->required();
  spread_extract->add_option("--digits", extract_digits, "digits to print");
  spread_extract->callback([&] {
    auto x = parse_real(extract_x);
    conreal_tstream* a = nullptr;
    check(conreal_spread_path(x.get(), &a));
    TStreamPtr owned{a, &conreal_tstream_free};
    print_tstream(owned.get(), extract_digits);
  });

  std::string rho_alpha;
  std::uint64_t rho_digits = 30;
  auto* spread_rho = spread->add_subcommand("rho", "forbidden-window rewrite of a path");
  spread_rho->fallthrough();
  spread_rho->add_option("--alpha", rho_alpha, "ternary stream spec")->required();
  spread_rho->add_option("--digits", rho_digits, "digits to print");
  spread_rho->callback([&] {
    auto a = parse_tstream(rho_alpha);
    conreal_tstream* r = nullptr;
    check(conreal_spread_rho(a.get(), &r));
    TStreamPtr owned{r, &conreal_tstream_free};
    print_tstream(owned.get(), rho_digits);
  });

  std::string lift_alpha, lift_x;
  std::uint64_t lift_n = 0, lift_digits = 30;
  auto* spread_lift =
      spread->add_subcommand("lift", "path through a prescribed node with a prescribed value");
  spread_lift->fallthrough();
  spread_lift->add_option("--alpha", lift_alpha, "ternary stream spec")->required();
  spread_lift->add_option("--n", lift_n, "node depth")->required();
  spread_lift->add_option("--x", lift_x, "real spec (within 2^-(n+5) of the path value)")
      ->required();
  spread_lift->add_option("--digits", lift_digits, "digits to print");
  spread_lift->callback([&] {
    auto a = parse_tstream(lift_alpha);
    auto x = parse_real(lift_x);
    conreal_tstream* g = nullptr;
    check(conreal_spread_lift(a.get(), lift_n, x.get(), &g));
    TStreamPtr owned{g, &conreal_tstream_free};
    print_tstream(owned.get(), lift_digits);
  });

  // ---- cantor ----
  auto* cantor = app.add_subcommand("cantor", "middle-thirds discontinuum");
  cantor->require_subcommand(1);
  cantor->fallthrough();

  std::string kappa_beta;
  std::uint64_t kappa_prec = 30;
  auto* cantor_kappa = cantor->add_subcommand("kappa", "real with ternary digits 2*beta");
  cantor_kappa->fallthrough();
  cantor_kappa->add_option("--beta", kappa_beta, "binary stream spec")->required();
  cantor_kappa->add_option("--prec", kappa_prec, "output precision");
  cantor_kappa->callback([&] {
    auto b = parse_bstream(kappa_beta);
    conreal_real* x = nullptr;
    check(conreal_cantor_kappa(b.get(), &x));
    RealPtr owned{x, &conreal_real_free};
    print_real(owned.get(), kappa_prec);
  });

  std::string gamma_alpha;
  std::uint64_t gamma_digits = 30;
  auto* cantor_gamma = cantor->add_subcommand("gamma", "bit readout along a ternary path");
  cantor_gamma->fallthrough();
  cantor_gamma->add_option("--alpha", gamma_alpha, "ternary stream spec")->required();
  cantor_gamma->add_option("--digits", gamma_digits, "digits to print");
  cantor_gamma->callback([&] {
    auto a = parse_tstream(gamma_alpha);
    conreal_bstream* b = nullptr;
    check(conreal_cantor_gamma(a.get(), &b));
    BStreamPtr owned{b, &conreal_bstream_free};
    StrOut text;
    check(conreal_bstream_digits(owned.get(), gamma_digits, &text.p));
    std::printf("%s\n", text.p);
  });

  std::string interval_word;
  auto* cantor_interval = cantor->add_subcommand("interval", "cell endpoints at a binary word");
  cantor_interval->fallthrough();
  cantor_interval->add_option("--word", interval_word, "binary word (e for empty)")->required();
  cantor_interval->callback([&] {
    StrOut text;
    check(conreal_cantor_interval(interval_word.c_str(), &text.p));
    std::printf("%s\n", text.p);
  });

  // ---- bar ----
  auto* bar = app.add_subcommand("bar", "decidable bars and their induced functions");
  bar->require_subcommand(1);
  bar->fallthrough();

  std::string bareval_file, bareval_at;
  std::uint64_t bareval_prec = 30;
  auto* bar_eval = bar->add_subcommand("eval", "induced function at a point");
  bar_eval->fallthrough();
  bar_eval->add_option("--bar", bareval_file, "bar file")->required();
  bar_eval->add_option("--at", bareval_at, "real spec in [0, 1]")->required();
  bar_eval->add_option("--prec", bareval_prec, "output precision");
  bar_eval->callback([&] {
    auto b = load_bar(bareval_file);
    auto x = parse_real(bareval_at);
    StrOut text;
    check(conreal_bar_eval(b.get(), x.get(), bareval_prec, cap, &text.p));
    std::printf("%s\n", text.p);
  });

  std::string barbound_file;
  auto* bar_bound = bar->add_subcommand("bound", "depth by which every word is barred");
  bar_bound->fallthrough();
  bar_bound->add_option("--bar", barbound_file, "bar file")->required();
  bar_bound->callback([&] {
    auto b = load_bar(barbound_file);
    std::uint64_t depth = 0;
    check(conreal_bar_bound(b.get(), cap, &depth));
    std::printf("%llu\n", static_cast<unsigned long long>(depth));
  });

  std::string barhit_file, barhit_beta;
  auto* bar_hitting = bar->add_subcommand("hitting", "steps until a stream hits the bar");
  bar_hitting->fallthrough();
  bar_hitting->add_option("--bar", barhit_file, "bar file")->required();
  bar_hitting->add_option("--beta", barhit_beta, "binary stream spec")->required();
  bar_hitting->callback([&] {
    auto b = load_bar(barhit_file);
    auto beta = parse_bstream(barhit_beta);
    std::uint64_t hit = 0;
    check(conreal_bar_hitting(b.get(), beta.get(), cap, &hit));
    std::printf("%llu\n", static_cast<unsigned long long>(hit));
  });

  std::string barverify_file, barverify_beta;
  std::uint64_t barverify_prec = 30;
  auto* bar_verify =
      bar->add_subcommand("verify", "induced function agrees with the hitting time");
  bar_verify->fallthrough();
  bar_verify->add_option("--bar", barverify_file, "bar file")->required();
  bar_verify->add_option("--beta", barverify_beta, "binary stream spec")->required();
  bar_verify->add_option("--prec", barverify_prec, "comparison precision");
  bar_verify->callback([&] {
    auto b = load_bar(barverify_file);
    auto beta = parse_bstream(barverify_beta);
    int ok = 0;
    check(conreal_bar_verify(b.get(), beta.get(), barverify_prec, cap, &ok));
    if (!ok) {
      std::fprintf(stderr, "error: induced value disagrees with the hitting time\n");
      std::exit(4);
    }
    std::printf("verified\n");
  });

  // ---- code ----
  auto* code = app.add_subcommand("code", "codes of continuous functions");
  code->require_subcommand(1);
  code->fallthrough();

  std::string check_code;
  std::uint32_t check_depth = 6, check_kmax = 6;
  auto* code_check = code->add_subcommand("check", "structural validation to a depth");
  code_check->fallthrough();
  code_check->add_option("--code", check_code, "code spec")->required();
  code_check->add_option("--depth", check_depth, "word length to exhaust");
  code_check->add_option("--kmax", check_kmax, "fineness levels to track");
  code_check->callback([&] {
    auto c = parse_code(check_code);
    StrOut report;
    int clean = 0;
    check(conreal_code_check(c.get(), check_depth, check_kmax, &report.p, &clean));
    std::printf("%s", report.p);
    if (!clean) std::exit(4);
  });

  std::string codeeval_code, codeeval_at;
  std::uint64_t codeeval_prec = 30;
  auto* code_eval = code->add_subcommand("eval", "coded function at a point");
  code_eval->fallthrough();
  code_eval->add_option("--code", codeeval_code, "code spec")->required();
  code_eval->add_option("--at", codeeval_at, "real spec in [0, 1]")->required();
  code_eval->add_option("--prec", codeeval_prec, "output precision");
  code_eval->callback([&] {
    auto c = parse_code(codeeval_code);
    auto x = parse_real(codeeval_at);
    StrOut text;
    check(conreal_code_eval(c.get(), x.get(), codeeval_prec, cap, &text.p));
    std::printf("%s\n", text.p);
  });

  std::string locate_code, locate_alpha;
  std::uint64_t locate_k = 0;
  auto* code_locate = code->add_subcommand("locate", "prefix length with 2^-k fine information");
  code_locate->fallthrough();
  code_locate->add_option("--code", locate_code, "code spec")->required();
  code_locate->add_option("--alpha", locate_alpha, "ternary stream spec")->required();
  code_locate->add_option("--k", locate_k, "fineness level")->required();
  code_locate->callback([&] {
    auto c = parse_code(locate_code);
    auto a = parse_tstream(locate_alpha);
    std::uint64_t h = 0;
    check(conreal_code_locate(c.get(), locate_k, a.get(), cap, &h));
    std::printf("%llu\n", static_cast<unsigned long long>(h));
  });

  std::string ucmod_code;
  std::uint64_t ucmod_kmax = 6;
  auto* code_ucmod = code->add_subcommand("ucmod", "uniform fineness witness per level");
  code_ucmod->fallthrough();
  code_ucmod->add_option("--code", ucmod_code, "code spec")->required();
  code_ucmod->add_option("--kmax", ucmod_kmax, "levels to witness");
  code_ucmod->callback([&] {
    auto c = parse_code(ucmod_code);
    StrOut text;
    check(conreal_code_ucmod(c.get(), ucmod_kmax, cap, &text.p));
    std::printf("%s", text.p);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "invalid input: %s\n", e.what());
    return 3;
  }
  return 0;
}
