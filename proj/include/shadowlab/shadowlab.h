/*
 * C interface to the shadowlab library. All objects are opaque handles;
 * every fallible call returns an sl_status and leaves a message retrievable
 * with sl_last_error() on the calling thread. Strings returned through
 * char** out-parameters are owned by the caller and released with
 * sl_free_string().
 */
#ifndef SHADOWLAB_H
#define SHADOWLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SHADOWLAB_BUILDING)
#    define SL_API __declspec(dllexport)
#  else
#    define SL_API __declspec(dllimport)
#  endif
#else
#  define SL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sl_status {
    SL_OK = 0,
    SL_INVALID_ARGUMENT = 1,
    SL_OUT_OF_RANGE = 2,
    SL_PARSE = 3,
    SL_BUDGET_EXCEEDED = 4,
    SL_UNKNOWN_CLAIM = 5,
    SL_IO = 6,
    SL_INTERNAL = 7
} sl_status;

typedef struct sl_family sl_family;

SL_API const char *sl_version(void);
SL_API const char *sl_status_name(sl_status status);
/* Message of the last failed call on this thread; "" if none. */
SL_API const char *sl_last_error(void);
SL_API void sl_free_string(char *s);

/* ---- families ---------------------------------------------------------- */

/* Text form: header "n=N k=K" (or "k=-"), then one member per line. */
SL_API sl_status sl_family_parse(const char *text, sl_family **out);
/* Member i is words[i], element e in bit e-1. k < 0 means untagged. */
SL_API sl_status sl_family_from_words(int n, const uint64_t *words, size_t count, int k, sl_family **out);
SL_API sl_status sl_family_to_text(const sl_family *f, char **out);
SL_API void sl_family_free(sl_family *f);
SL_API size_t sl_family_size(const sl_family *f);
SL_API int sl_family_ground_size(const sl_family *f);
/* Common member size, or -1 when the family is not uniform. */
SL_API int sl_family_uniformity(const sl_family *f);
/* Copies up to capacity member words in canonical order; returns the size. */
SL_API size_t sl_family_words(const sl_family *f, uint64_t *out, size_t capacity);

/* ---- constructions and operations ---------------------------------------- */

SL_API sl_status sl_construct(const char *name, const char *const *keys, const long long *values, size_t count,
                              sl_family **out);
SL_API sl_status sl_shadow(const sl_family *f, int level, sl_family **out);
/* metric: "gamma", "s" (param = s), "kk" (param = n) or "colex" (param = t). JSON {metric, value, witness}. */
SL_API sl_status sl_diversity(const sl_family *f, const char *metric, long long param, char **json_out);
SL_API sl_status sl_shift_ij(const sl_family *f, int i, int j, sl_family **out);
SL_API sl_status sl_daykin_shift(const sl_family *f, uint64_t u, uint64_t v, sl_family **out);
/* Trace JSON {"steps": [...]}; the colex variant adds "shadow_sizes". */
SL_API sl_status sl_shift_to_shifted(const sl_family *f, sl_family **out, char **trace_json);
SL_API sl_status sl_compress_to_colex(const sl_family *f, sl_family **out, char **trace_json);

/* Named bound. exact_out (optional) receives the decimal exact value, or NULL when none exists. */
SL_API sl_status sl_bound(const char *name, const char *const *keys, const double *values, size_t count,
                          double *value_out, char **exact_out);
SL_API sl_status sl_influence(const sl_family *f, int element, double *out);
SL_API sl_status sl_total_influence(const sl_family *f, double *out);

/* ---- verification ----------------------------------------------------------- */

/* JSON array of claim ids. */
SL_API sl_status sl_claim_ids(char **json_out);
/*
 * Runs a claim over an instance space ("kind:key=v,key=lo..hi"). seed != 0
 * overrides the seed of a random-sample space; jobs 0 uses every core;
 * budget 0 uses the default. passed_out receives 1 when no counterexample
 * was found.
 */
SL_API sl_status sl_verify(const char *claim, const char *space, uint64_t seed, unsigned jobs, uint64_t budget,
                           char **report_json, int *passed_out);
/* Threshold-pruned cross-intersecting search for real u, v. */
SL_API sl_status sl_verify_cross_pairs(int n, int a, int b, double u, double v, unsigned jobs, uint64_t budget,
                                       char **report_json, int *passed_out);
/* Re-checks counterexample `index` of a report; still_fails_out is 1 if it fails again. */
SL_API sl_status sl_replay(const char *report_json, size_t index, int *still_fails_out);

#ifdef __cplusplus
}
#endif

#endif
