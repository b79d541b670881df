#ifndef G2COUNT_G2COUNT_H
#define G2COUNT_G2COUNT_H

/* C interface to the genus-2 point-counting library.
 *
 * Objects are opaque and owned by the caller once returned; release them
 * with the matching *_free function. Every computation returns a status and
 * a result handle holding a JSON document (also on failure, where it
 * carries the error class and message). Strings returned by accessors stay
 * valid until the owning handle is freed. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define G2C_API __declspec(dllexport)
#else
#define G2C_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum g2c_status {
  G2C_OK = 0,
  G2C_USAGE,
  G2C_PARSE,
  G2C_VALIDATION,
  G2C_BOUND_NOT_MET,
  G2C_EMPTY_RANGE,
  G2C_RAMIFIED,
  G2C_DENOMINATOR_VANISHES,
  G2C_GUARD_EXCEEDED,
  G2C_NON_GENERIC,
  G2C_NOT_RATIONAL,
  G2C_EXHAUSTED,
  G2C_INCONSISTENT,
  G2C_INTERNAL
} g2c_status;

typedef enum g2c_count_mode { G2C_COUNT_NAIVE = 0, G2C_COUNT_SIEGEL, G2C_COUNT_HILBERT } g2c_count_mode;

typedef struct g2c_curve g2c_curve;
typedef struct g2c_options g2c_options;
typedef struct g2c_result g2c_result;

/* A residue psi = value mod beta, beta = beta_a + beta_b w. beta_a = beta_b = 0
 * selects the canonical generator above ell (the one with positive w-part). */
typedef struct g2c_residue {
  int64_t ell;
  int64_t beta_a;
  int64_t beta_b;
  int64_t value;
} g2c_residue;

G2C_API const char* g2c_version(void);
G2C_API const char* g2c_status_name(g2c_status s);
/* 0 success, 2 usage, 3 skip exhaustion, 4 internal inconsistency. */
G2C_API int g2c_status_exit_code(g2c_status s);

/* "p=<prime>;P=[c0,...,c5 or c6]". On failure *out is NULL and, when err is
 * non-NULL, *err receives a result handle describing the problem. */
G2C_API g2c_status g2c_curve_parse(const char* text, g2c_curve** out, g2c_result** err);
G2C_API const char* g2c_curve_string(const g2c_curve* c);
G2C_API void g2c_curve_free(g2c_curve* c);

G2C_API g2c_options* g2c_options_new(void);
G2C_API void g2c_options_free(g2c_options* o);
G2C_API void g2c_options_set_primes(g2c_options* o, const int64_t* primes, size_t n);
G2C_API void g2c_options_set_max_prime(g2c_options* o, int64_t max_prime);
G2C_API void g2c_options_set_jobs(g2c_options* o, unsigned jobs);
G2C_API void g2c_options_set_seed(g2c_options* o, uint64_t seed);
G2C_API void g2c_options_set_ext_guard(g2c_options* o, int guard);
/* Largest field size scanned by exhaustive point counting (default 2^26). */
G2C_API void g2c_options_set_count_guard(g2c_options* o, uint64_t guard);
/* Directory of *.modeq files screening levels before the oracle; NULL clears. */
G2C_API void g2c_options_set_modeq_dir(g2c_options* o, const char* dir);
/* Real quadratic discriminant for Hilbert mode and RM classification. */
G2C_API void g2c_options_set_disc(g2c_options* o, int64_t disc);
G2C_API void g2c_options_set_bound(g2c_options* o, int64_t x);
G2C_API void g2c_options_set_epsilon(g2c_options* o, int64_t num, int64_t den);
/* Cross-check pipeline results against exhaustive counting. */
G2C_API void g2c_options_set_verify(g2c_options* o, int verify);

G2C_API g2c_status g2c_count(const g2c_curve* c, g2c_count_mode mode, const g2c_options* o, g2c_result** out);
G2C_API g2c_status g2c_classify(const g2c_curve* c, const g2c_options* o, g2c_result** out);
G2C_API g2c_status g2c_rm_reconstruct(int64_t disc, int64_t q, const g2c_residue* residues, size_t n,
                                      g2c_result** out);
G2C_API g2c_status g2c_torsion(const g2c_curve* c, int64_t ell, const g2c_options* o, g2c_result** out);
/* Checks the structural properties on the curve; G2C_INTERNAL if one fails. */
G2C_API g2c_status g2c_verify_props(const g2c_curve* c, const g2c_options* o, g2c_result** out);

G2C_API g2c_status g2c_result_status(const g2c_result* r);
G2C_API const char* g2c_result_json(const g2c_result* r);
/* Empty string on success. */
G2C_API const char* g2c_result_error(const g2c_result* r);
G2C_API void g2c_result_free(g2c_result* r);

#ifdef __cplusplus
}
#endif

#endif
