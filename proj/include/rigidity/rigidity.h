/* C interface to the rigidity library.
 *
 * All objects are opaque handles. Every call that can fail returns a
 * rig_status; on failure rig_last_error() holds a one-line message for the
 * calling thread until its next failing call. Results carry the JSON payload
 * of the query (the same text the CLI embeds in its envelope).
 *
 * Weights are passed as arrays of nonnegative integers in the fundamental
 * weight basis, concatenated across the simple components. Node numbers are
 * 1-based.
 */
#ifndef RIGIDITY_RIGIDITY_H
#define RIGIDITY_RIGIDITY_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define RIG_API __attribute__((visibility("default")))
#else
#define RIG_API
#endif

typedef enum rig_status {
    RIG_OK = 0,
    RIG_E_ARGUMENT = 1, /* null pointer, bad rep spec, malformed option */
    RIG_E_DOMAIN = 2,   /* invalid diagram, weight or marking */
    RIG_E_RESOURCE = 3, /* a configured size cap was hit */
    RIG_E_INTERNAL = 4  /* a self-check failed; always a bug */
} rig_status;

typedef struct rig_session rig_session;
typedef struct rig_result rig_result;

RIG_API const char* rig_version(void);
RIG_API const char* rig_status_name(rig_status s);
RIG_API const char* rig_last_error(void);

RIG_API rig_status rig_session_create(rig_session** out);
RIG_API void rig_session_destroy(rig_session* s);
/* NULL or "" disables the weight-table cache. */
RIG_API rig_status rig_session_set_cache_dir(rig_session* s, const char* path);
RIG_API rig_status rig_session_set_weight_cap(rig_session* s, int64_t max_weight_entries);

RIG_API rig_status rig_root_system(rig_session* s, const char* diagram, rig_result** out);
/* Either lambda or marked may be omitted (NULL, 0). If both are given the
 * marking must equal the support of lambda. */
RIG_API rig_status rig_grading(rig_session* s, const char* diagram, const int64_t* lambda, size_t lambda_len,
                               const int64_t* marked, size_t marked_len, rig_result** out);
RIG_API rig_status rig_decompose(rig_session* s, const char* diagram, const int64_t* lambda, size_t lambda_len,
                                 rig_result** out);
RIG_API rig_status rig_h1(rig_session* s, const char* diagram, const int64_t* lambda, size_t lambda_len,
                          const int64_t* marked, size_t marked_len, rig_result** out);
RIG_API rig_status rig_certify(rig_session* s, const char* diagram, const int64_t* lambda, size_t lambda_len,
                               int64_t p, rig_result** out);
/* Either rep_spec or lambda selects the module; if both are given they must agree. */
RIG_API rig_status rig_oracle(rig_session* s, const char* diagram, const int64_t* lambda, size_t lambda_len,
                              const char* rep_spec, int64_t d_max, rig_result** out);
RIG_API rig_status rig_paper_tables(rig_session* s, rig_result** out);

RIG_API const char* rig_result_json(const rig_result* r);
/* 1 when every weight table the query needed came from the cache. */
RIG_API int rig_result_cache_hit(const rig_result* r);
/* 0 for a not-rigid verdict, a mismatch in rig_paper_tables or an oracle disagreement; 1 otherwise. */
RIG_API int rig_result_positive(const rig_result* r);
RIG_API size_t rig_result_warning_count(const rig_result* r);
RIG_API const char* rig_result_warning(const rig_result* r, size_t i);
RIG_API void rig_result_destroy(rig_result* r);

#ifdef __cplusplus
}
#endif

#endif /* RIGIDITY_RIGIDITY_H */
