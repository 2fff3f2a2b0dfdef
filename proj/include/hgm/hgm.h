/* C interface to the hypergeometric-motive verification library.
 *
 * All entry points are thread-safe.  Every operation returns an integer
 * status: HGM_OK on success (the run may still contain failing rows; see
 * hgm_result_failures), or an HGM_ERR_* code with a thread-local message
 * available from hgm_last_error().
 */
#ifndef HGM_H
#define HGM_H

#ifdef __cplusplus
extern "C" {
#endif

/* Symbols exported from the shared library. */
#ifndef HGM_API
#if defined(__GNUC__) && __GNUC__ >= 4
#define HGM_API __attribute__((visibility("default")))
#else
#define HGM_API
#endif
#endif

#define HGM_OK 0
#define HGM_ERR_ARGUMENT 1    /* bad input: range, parse, precondition */
#define HGM_ERR_SKIP_PRIME 2  /* prime cannot carry the requested characters */
#define HGM_ERR_SKIP_SAMPLE 3 /* sample point degenerate for the relation */
#define HGM_ERR_UNSUPPORTED 4 /* outside implemented range */
#define HGM_ERR_DATA 5        /* catalog missing, corrupted, or wrong version */
#define HGM_ERR_CONVERGENCE 6 /* series failed to converge within the cap */
#define HGM_ERR_INTERNAL 7

/* Opaque handles. */
typedef struct hgm_options hgm_options;
typedef struct hgm_result hgm_result;

/* Library version, "major.minor.patch". */
HGM_API const char* hgm_version(void);

/* Message for the most recent failing call on this thread; "" when the last
 * call succeeded.  The pointer stays valid until the next call on the same
 * thread. */
HGM_API const char* hgm_last_error(void);

/* Options: create with defaults, adjust with string key/value pairs.
 *   backend   "exact" | "float"
 *   tol       relative tolerance for floating comparisons, e.g. "1e-9"
 *   seed      unsigned integer RNG seed
 *   primes    inclusive prime range "lo..hi" (a single "p" means "p..p")
 *   samples   evaluation points per prime
 *   threads   worker threads, "0" = one per hardware thread
 *   json      path to write the canonical JSON document to
 * Returns HGM_OK, or HGM_ERR_ARGUMENT for an unknown key or a bad value. */
HGM_API hgm_options* hgm_options_new(void);
HGM_API void hgm_options_free(hgm_options* opt);
HGM_API int hgm_options_set(hgm_options* opt, const char* key, const char* value);

/* Results.  failures counts failing rows (0 = full pass); text is a
 * human-readable block; json is the canonical JSON document.  Strings stay
 * valid until hgm_result_free. */
HGM_API int hgm_result_failures(const hgm_result* res);
HGM_API const char* hgm_result_text(const hgm_result* res);
HGM_API const char* hgm_result_json(const hgm_result* res);
HGM_API void hgm_result_free(hgm_result* res);

/* Operations.  On success *out is a fresh result the caller frees with
 * hgm_result_free; on error *out is NULL.  opt may be NULL for defaults.
 *
 * hgm_hsum            finite hypergeometric sum rows with oracle cross-check;
 *                     params "a,b;c,d", z a rational like "3" or "-7/5".
 * hgm_verify_kummer   index "1".."24" or "all"; abc "a,b,c" instantiation.
 * hgm_verify_cover    name: catalog id or "all"; assigns "a=1/3,q=5" or "".
 * hgm_group           closure of the 24 transformations (order, census).
 * hgm_special         closed forms at z = 1: `count` branch-selection rows
 *                     plus `jac_count` exact Jacobi-equality rows.
 * hgm_dioph           specialization chain for alpha^q + beta^q = gamma^pexp,
 *                     plus random_count generated solutions.
 * hgm_series          which "eq1" | "eq67"; a, b rationals; z complex like
 *                     "0.1+0i"; terms 0 = adaptive truncation.
 * hgm_monodromy       local classes of params and/or the ramification profile
 *                     of a map expression (either argument may be "").
 * hgm_suite           fixed-order run of everything with canned arguments.
 * hgm_calibrate       four-variant sign probe over both catalogs; writes a
 *                     calibration log to log_path when nonempty. */
HGM_API int hgm_hsum(const hgm_options* opt, const char* params, const char* z, hgm_result** out);
HGM_API int hgm_verify_kummer(const hgm_options* opt, const char* index, const char* abc,
                      hgm_result** out);
HGM_API int hgm_verify_cover(const hgm_options* opt, const char* name, const char* assigns,
                     hgm_result** out);
HGM_API int hgm_group(const hgm_options* opt, hgm_result** out);
HGM_API int hgm_special(const hgm_options* opt, int count, int jac_count, hgm_result** out);
HGM_API int hgm_dioph(const hgm_options* opt, const char* alpha, const char* beta, const char* gamma,
              long q, long pexp, int random_count, hgm_result** out);
HGM_API int hgm_series(const hgm_options* opt, const char* which, const char* a, const char* b,
               const char* z, long terms, hgm_result** out);
HGM_API int hgm_monodromy(const hgm_options* opt, const char* params, const char* map,
                  hgm_result** out);
HGM_API int hgm_suite(const hgm_options* opt, hgm_result** out);
HGM_API int hgm_calibrate(const hgm_options* opt, const char* log_path, hgm_result** out);

#ifdef __cplusplus
}
#endif

#endif /* HGM_H */
