/*
 * C interface to the Weyl-module character engine.
 *
 * All computations return an opaque weyl_report carrying a JSON document
 * (see README for the schema) plus a pass/fail verdict for verification
 * suites. Functions return WEYL_OK on success; on any other status a
 * human-readable message is available from weyl_last_error() until the
 * next call on the same thread. Reports and option sets must be released
 * with their _free functions. Big integers are serialized as decimal
 * strings inside the JSON payload.
 */

#ifndef WEYL_WEYL_H
#define WEYL_WEYL_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum weyl_status {
  WEYL_OK = 0,
  WEYL_ERR_USAGE = 1,       /* invalid arguments or argument combination */
  WEYL_ERR_UNSUPPORTED = 2, /* configuration outside the engine's scope */
  WEYL_ERR_RESOURCE = 3,    /* a configured resource cap was reached */
  WEYL_ERR_INTERNAL = 4
} weyl_status;

typedef struct weyl_options weyl_options;
typedef struct weyl_report weyl_report;

unsigned weyl_abi_version(void);

/* ---- options ---------------------------------------------------------- */

weyl_options* weyl_options_new(void);
void weyl_options_free(weyl_options* opts);

/* Two distinct primes used for the modular rank crosscheck. */
weyl_status weyl_options_set_primes(weyl_options* opts, uint64_t p1, uint64_t p2);
/* Nonzero forces exact rational elimination everywhere. */
weyl_status weyl_options_set_exact(weyl_options* opts, int exact);
/* Safety cap on the total degree swept by the coinvariant model. */
weyl_status weyl_options_set_max_total_degree(weyl_options* opts, int cap);
/* Truncation order for point-multiset characters (defaults to n). */
weyl_status weyl_options_set_truncation(weyl_options* opts, int n);

/* ---- computations ------------------------------------------------------ */

/* Character of the local Weyl module at the origin of C^d, sl(r+1),
 * highest weight n omega_1. */
weyl_status weyl_character_origin(int n, int d, int r, const weyl_options* opts,
                                  weyl_report** out);

/* Character at a multiset of rational points on a line (d = 1), given as
 * parallel numerator/denominator arrays of length npoints. */
weyl_status weyl_character_points(const long long* num, const long long* den,
                                  size_t npoints, int r, const weyl_options* opts,
                                  weyl_report** out);

/* Verification suites: "catalan", "narayana", "higher-catalan",
 * "three-way", "tensor", "martini", "chevalley", "conjecture".
 * Pass -1 for any of n, d, r, m to use the suite's default. */
weyl_status weyl_verify(const char* suite, int n, int d, int r, int m,
                        const weyl_options* opts, weyl_report** out);

/* Closed-form tables: "catalan", "narayana", "higher-catalan", "hoggatt". */
weyl_status weyl_table(const char* kind, int n, int d, int r, const weyl_options* opts,
                       weyl_report** out);

/* ---- reports ----------------------------------------------------------- */

/* NUL-terminated JSON document; owned by the report. */
const char* weyl_report_json(const weyl_report* report);
/* 1 when every checked case passed (always 1 for characters, tables and
 * the open-conjecture suite), else 0. */
int weyl_report_passed(const weyl_report* report);
void weyl_report_free(weyl_report* report);

/* Message describing the most recent failure on this thread. */
const char* weyl_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* WEYL_WEYL_H */
