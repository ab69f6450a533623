/* conreal: constructive real representations, ternary spread coding, bar
 * functions, and codes of continuous functions, behind a C surface.
 *
 * Conventions
 *   - Every fallible call returns a conreal_status; on anything other than
 *     CONREAL_OK the out-parameters are untouched and conreal_last_error()
 *     describes the failure (thread-local, valid until the next call on the
 *     same thread).
 *   - Objects returned through out-parameters are owned by the caller and
 *     released with the matching *_free; strings with conreal_string_free.
 *     All *_free functions accept NULL.
 *   - `cap` arguments bound unbounded searches (node or index counts); pass
 *     CONREAL_DEFAULT_CAP unless a command needs more headroom.
 *   - Rationals are canonical GMP text: "p/q", or "p" when the denominator
 *     is 1.
 *
 * Input spec strings
 *   streams  DIGITS, DIGITS~t, ~t, or "e" for the empty word; the word is
 *            followed by the constant tail t (default 0), so "102~2" is the
 *            stream 1,0,2,2,2,...
 *   reals    "p/q" | const:p/q | phi:STREAM | kappa:STREAM
 *   codes    builtin:identity | builtin:const:p/q | builtin:affine:a/b:c/d |
 *            builtin:zero-delayed | file:PATH
 */
#ifndef CONREAL_H
#define CONREAL_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define CONREAL_DEFAULT_CAP 65536u

typedef enum conreal_status {
  CONREAL_OK = 0,
  CONREAL_CAP_EXCEEDED = 2, /* a bounded search ran out of budget */
  CONREAL_INVALID = 3,      /* unparsable or precondition-violating input */
  CONREAL_VIOLATION = 4,    /* an internal invariant failed to hold */
  CONREAL_NOMEM = 5
} conreal_status;

typedef struct conreal_real conreal_real;       /* regular real number */
typedef struct conreal_tstream conreal_tstream; /* ternary digit stream */
typedef struct conreal_bstream conreal_bstream; /* binary digit stream */
typedef struct conreal_bar conreal_bar;         /* decidable bar on binary words */
typedef struct conreal_code conreal_code;       /* code of a continuous function */

/* Message for the most recent failing call on this thread ("" if none). */
const char* conreal_last_error(void);

void conreal_string_free(char* s);
void conreal_real_free(conreal_real* x);
void conreal_tstream_free(conreal_tstream* a);
void conreal_bstream_free(conreal_bstream* b);
void conreal_bar_free(conreal_bar* bar);
void conreal_code_free(conreal_code* code);

/* ---- parsing ---- */
conreal_status conreal_real_parse(const char* spec, conreal_real** out);
conreal_status conreal_tstream_parse(const char* spec, conreal_tstream** out);
conreal_status conreal_bstream_parse(const char* spec, conreal_bstream** out);
conreal_status conreal_bar_load(const char* path, conreal_bar** out);
conreal_status conreal_code_parse(const char* spec, conreal_code** out);

/* ---- real numbers ---- */
/* Rational within 2^-prec of x (the prec-th term of the regular sequence). */
conreal_status conreal_real_approx(const conreal_real* x, uint64_t prec, char** out);
/* Round trip through another representation; via is "fundamental" or
 * "shrinking".  The result denotes the same real. */
conreal_status conreal_real_roundtrip(const conreal_real* x, const char* via, uint64_t cap,
                                      conreal_real** out);

/* ---- streams ---- */
/* First n digits as a bare digit string. */
conreal_status conreal_tstream_digits(const conreal_tstream* a, uint64_t n, char** out);
conreal_status conreal_bstream_digits(const conreal_bstream* b, uint64_t n, char** out);

/* ---- ternary spread ---- */
/* Value of the spread coding at a path: phi(a) in [0, 1]. */
conreal_status conreal_spread_phi(const conreal_tstream* a, conreal_real** out);
/* A path whose spread value is x; requires x in [0, 1]. */
conreal_status conreal_spread_path(const conreal_real* x, conreal_tstream** out);
/* Forbidden-window rewriter (value-preserving normal form). */
conreal_status conreal_spread_rho(const conreal_tstream* a, conreal_tstream** out);
/* Path through the depth-n node of rho(a) whose value is x; x must be within
 * 2^-(n+5) of phi(rho(a)). */
conreal_status conreal_spread_lift(const conreal_tstream* a, uint64_t n, const conreal_real* x,
                                   conreal_tstream** out);

/* ---- discontinuum ---- */
/* Real with ternary expansion 2*b0, 2*b1, ... */
conreal_status conreal_cantor_kappa(const conreal_bstream* b, conreal_real** out);
/* Bit readout along a ternary path: inverse of kappa on discontinuum paths. */
conreal_status conreal_cantor_gamma(const conreal_tstream* a, conreal_bstream** out);
/* Endpoints of the discontinuum cell at a binary word, as "lo hi". */
conreal_status conreal_cantor_interval(const char* bits, char** out);

/* ---- bars and their induced functions ---- */
/* Approximant of the bar-induced function at x in [0, 1]. */
conreal_status conreal_bar_eval(const conreal_bar* bar, const conreal_real* x, uint64_t prec,
                                uint64_t cap, char** out);
/* Depth by which every binary word has hit the bar. */
conreal_status conreal_bar_bound(const conreal_bar* bar, uint64_t cap, uint64_t* out);
/* Steps until the bar contains a prefix of beta. */
conreal_status conreal_bar_hitting(const conreal_bar* bar, const conreal_bstream* beta,
                                   uint64_t cap, uint64_t* out);
/* Checks that the induced function read back at kappa(beta) agrees with the
 * hitting time to the given precision; *ok is 1 on agreement, 0 otherwise. */
conreal_status conreal_bar_verify(const conreal_bar* bar, const conreal_bstream* beta,
                                  uint64_t prec, uint64_t cap, int* ok);

/* ---- codes of continuous functions ---- */
/* Structural validation to the given depth; *clean is 1 when no violation
 * was found.  *report is a human-readable multi-line summary. */
conreal_status conreal_code_check(const conreal_code* code, uint32_t depth, uint32_t kmax,
                                  char** report, int* clean);
/* Approximant of the coded function at x in [0, 1]. */
conreal_status conreal_code_eval(const conreal_code* code, const conreal_real* x, uint64_t prec,
                                 uint64_t cap, char** out);
/* Least prefix length of a at which the code's value is 2^-k fine. */
conreal_status conreal_code_locate(const conreal_code* code, uint64_t k, const conreal_tstream* a,
                                   uint64_t cap, uint64_t* out);
/* Uniform fineness witness omega(k) for k <= kmax, one "k: omega" line per k. */
conreal_status conreal_code_ucmod(const conreal_code* code, uint64_t kmax, uint64_t cap,
                                  char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CONREAL_H */
