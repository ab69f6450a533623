#include "conreal/conreal.h"

#include <cstring>
#include <exception>
#include <new>
#include <sstream>
#include <stdexcept>
#include <string>

#include "core/bars.hpp"
#include "core/cantor.hpp"
#include "core/codes.hpp"
#include "core/errors.hpp"
#include "core/reals.hpp"
#include "core/specs.hpp"
#include "core/spread.hpp"
#include "core/streams.hpp"

struct conreal_real {
  conreal::RegularReal v;
};
struct conreal_tstream {
  conreal::TernaryStream v;
};
struct conreal_bstream {
  conreal::BinaryStream v;
};
struct conreal_bar {
  conreal::DecidableBar v;
};
struct conreal_code {
  conreal::Code v;
};

namespace {

thread_local std::string g_last_error;

// Runs the body and folds every failure into a status plus thread-local
// message.  Input-shaped problems (parse errors, precondition failures, the
// spread searches that report "this input has no candidate") map to INVALID;
// only genuine internal breakage maps to VIOLATION.
template <typename Fn>
conreal_status guarded(Fn&& body) {
  try {
    body();
    g_last_error.clear();
    return CONREAL_OK;
  } catch (const conreal::CapExceededError& e) {
    g_last_error = e.what();
    return CONREAL_CAP_EXCEEDED;
  } catch (const conreal::ParseError& e) {
    g_last_error = e.what();
    return CONREAL_INVALID;
  } catch (const conreal::NoLiftFoundError& e) {
    g_last_error = e.what();
    return CONREAL_INVALID;
  } catch (const conreal::NoCandidateChildError& e) {
    g_last_error = e.what();
    return CONREAL_INVALID;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return CONREAL_INVALID;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return CONREAL_INVALID;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return CONREAL_NOMEM;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CONREAL_VIOLATION;
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

conreal_status require(bool ok, const char* message) {
  if (ok) return CONREAL_OK;
  g_last_error = message;
  return CONREAL_INVALID;
}

}  // namespace

extern "C" {

const char* conreal_last_error(void) { return g_last_error.c_str(); }

void conreal_string_free(char* s) { delete[] s; }
void conreal_real_free(conreal_real* x) { delete x; }
void conreal_tstream_free(conreal_tstream* a) { delete a; }
void conreal_bstream_free(conreal_bstream* b) { delete b; }
void conreal_bar_free(conreal_bar* bar) { delete bar; }
void conreal_code_free(conreal_code* code) { delete code; }

conreal_status conreal_real_parse(const char* spec, conreal_real** out) {
  if (auto bad = require(spec && out, "null argument")) return bad;
  return guarded([&] { *out = new conreal_real{conreal::parse_real_spec(spec)}; });
}

conreal_status conreal_tstream_parse(const char* spec, conreal_tstream** out) {
  if (auto bad = require(spec && out, "null argument")) return bad;
  return guarded([&] { *out = new conreal_tstream{conreal::parse_ternary_spec(spec)}; });
}

conreal_status conreal_bstream_parse(const char* spec, conreal_bstream** out) {
  if (auto bad = require(spec && out, "null argument")) return bad;
  return guarded([&] { *out = new conreal_bstream{conreal::parse_binary_spec(spec)}; });
}

conreal_status conreal_bar_load(const char* path, conreal_bar** out) {
  if (auto bad = require(path && out, "null argument")) return bad;
  return guarded([&] { *out = new conreal_bar{conreal::DecidableBar::from_file(path)}; });
}

conreal_status conreal_code_parse(const char* spec, conreal_code** out) {
  if (auto bad = require(spec && out, "null argument")) return bad;
  return guarded([&] { *out = new conreal_code{conreal::parse_code_spec(spec)}; });
}

conreal_status conreal_real_approx(const conreal_real* x, uint64_t prec, char** out) {
  if (auto bad = require(x && out, "null argument")) return bad;
  return guarded([&] { *out = copy_string(conreal::approx(x->v, prec).str()); });
}

conreal_status conreal_real_roundtrip(const conreal_real* x, const char* via, uint64_t cap,
                                      conreal_real** out) {
  if (auto bad = require(x && via && out, "null argument")) return bad;
  return guarded([&] {
    std::string mode = via;
    if (mode == "fundamental") {
      *out = new conreal_real{
          conreal::regular_from_fundamental(conreal::fundamental_from_regular(x->v))};
    } else if (mode == "shrinking") {
      *out = new conreal_real{
          conreal::regular_from_shrinking(conreal::shrinking_from_regular(x->v), cap)};
    } else {
      throw std::invalid_argument("unknown representation \"" + mode +
                                  "\" (expected fundamental or shrinking)");
    }
  });
}

conreal_status conreal_tstream_digits(const conreal_tstream* a, uint64_t n, char** out) {
  if (auto bad = require(a && out, "null argument")) return bad;
  return guarded([&] { *out = copy_string(conreal::word_str(a->v.prefix(n))); });
}

conreal_status conreal_bstream_digits(const conreal_bstream* b, uint64_t n, char** out) {
  if (auto bad = require(b && out, "null argument")) return bad;
  return guarded([&] { *out = copy_string(conreal::word_str(b->v.prefix(n))); });
}

conreal_status conreal_spread_phi(const conreal_tstream* a, conreal_real** out) {
  if (auto bad = require(a && out, "null argument")) return bad;
  return guarded([&] { *out = new conreal_real{conreal::phi(a->v)}; });
}

conreal_status conreal_spread_path(const conreal_real* x, conreal_tstream** out) {
  if (auto bad = require(x && out, "null argument")) return bad;
  return guarded([&] { *out = new conreal_tstream{conreal::path_of_real(x->v)}; });
}

conreal_status conreal_spread_rho(const conreal_tstream* a, conreal_tstream** out) {
  if (auto bad = require(a && out, "null argument")) return bad;
  return guarded([&] { *out = new conreal_tstream{conreal::rho(a->v)}; });
}

conreal_status conreal_spread_lift(const conreal_tstream* a, uint64_t n, const conreal_real* x,
                                   conreal_tstream** out) {
  if (auto bad = require(a && x && out, "null argument")) return bad;
  return guarded([&] { *out = new conreal_tstream{conreal::quotient_lift(a->v, n, x->v)}; });
}

conreal_status conreal_cantor_kappa(const conreal_bstream* b, conreal_real** out) {
  if (auto bad = require(b && out, "null argument")) return bad;
  return guarded([&] { *out = new conreal_real{conreal::kappa(b->v)}; });
}

conreal_status conreal_cantor_gamma(const conreal_tstream* a, conreal_bstream** out) {
  if (auto bad = require(a && out, "null argument")) return bad;
  return guarded([&] { *out = new conreal_bstream{conreal::gamma(a->v)}; });
}

conreal_status conreal_cantor_interval(const char* bits, char** out) {
  if (auto bad = require(bits && out, "null argument")) return bad;
  return guarded([&] {
    conreal::Word word;
    std::string text = bits;
    if (!text.empty() && text != "e" && text != "\xCE\xB5") word = conreal::parse_word(text, 2);
    conreal::RatInterval cell = conreal::cantor_interval(word);
    *out = copy_string(cell.lo.str() + " " + cell.hi.str());
  });
}

conreal_status conreal_bar_eval(const conreal_bar* bar, const conreal_real* x, uint64_t prec,
                                uint64_t cap, char** out) {
  if (auto bad = require(bar && x && out, "null argument")) return bad;
  return guarded([&] {
    conreal::RegularReal fx = conreal::bar_fn_eval(bar->v, x->v, cap);
    *out = copy_string(conreal::approx(fx, prec).str());
  });
}

conreal_status conreal_bar_bound(const conreal_bar* bar, uint64_t cap, uint64_t* out) {
  if (auto bad = require(bar && out, "null argument")) return bad;
  return guarded([&] { *out = conreal::bar_uniform_bound(bar->v, cap); });
}

conreal_status conreal_bar_hitting(const conreal_bar* bar, const conreal_bstream* beta,
                                   uint64_t cap, uint64_t* out) {
  if (auto bad = require(bar && beta && out, "null argument")) return bad;
  return guarded([&] { *out = conreal::hitting_time(bar->v, beta->v, cap); });
}

conreal_status conreal_bar_verify(const conreal_bar* bar, const conreal_bstream* beta,
                                  uint64_t prec, uint64_t cap, int* ok) {
  if (auto bad = require(bar && beta && ok, "null argument")) return bad;
  return guarded([&] { *ok = conreal::verify_hitting(bar->v, beta->v, prec, cap) ? 1 : 0; });
}

conreal_status conreal_code_check(const conreal_code* code, uint32_t depth, uint32_t kmax,
                                  char** report, int* clean) {
  if (auto bad = require(code && report && clean, "null argument")) return bad;
  return guarded([&] {
    conreal::CodeReport r = conreal::code_validate(code->v, depth, kmax);
    std::ostringstream text;
    text << "violations: " << r.violations.size() << "\n";
    for (const auto& v : r.violations) {
      text << v.rule << " at \"" << conreal::word_str(v.witness) << "\"";
      if (v.witness_other) text << " vs \"" << conreal::word_str(*v.witness_other) << "\"";
      text << ": " << v.detail << "\n";
    }
    for (uint32_t k = 0; k < r.progress.size(); ++k) {
      text << "progress k=" << k << ": "
           << (r.progress[k] == conreal::ProgressStatus::Verified ? "verified" : "inconclusive")
           << "\n";
    }
    *report = copy_string(text.str());
    *clean = r.clean() ? 1 : 0;
  });
}

conreal_status conreal_code_eval(const conreal_code* code, const conreal_real* x, uint64_t prec,
                                 uint64_t cap, char** out) {
  if (auto bad = require(code && x && out, "null argument")) return bad;
  return guarded([&] {
    conreal::RegularReal fx = conreal::code_eval(code->v, x->v, cap);
    *out = copy_string(conreal::approx(fx, prec).str());
  });
}

conreal_status conreal_code_locate(const conreal_code* code, uint64_t k, const conreal_tstream* a,
                                   uint64_t cap, uint64_t* out) {
  if (auto bad = require(code && a && out, "null argument")) return bad;
  return guarded([&] { *out = conreal::code_locate(code->v, k, a->v, cap); });
}

conreal_status conreal_code_ucmod(const conreal_code* code, uint64_t kmax, uint64_t cap,
                                  char** out) {
  if (auto bad = require(code && out, "null argument")) return bad;
  return guarded([&] {
    conreal::UniformModulus omega = conreal::code_uc_witness(code->v, kmax, cap);
    std::ostringstream text;
    for (uint64_t k = 0; k <= kmax; ++k) text << k << ": " << omega.at(k) << "\n";
    *out = copy_string(text.str());
  });
}

}  // extern "C"
