/*
 * pkv — exact verification engine for a family of Ricci-flat pseudo-Kaehler
 * symmetric models: C API.
 *
 * All entry points return a pkv_status error code; results travel through
 * opaque handles (pkv_config, pkv_report) or caller-supplied buffers. Strings
 * returned through `char**` out-parameters are heap-allocated and must be
 * released with pkv_string_free; strings returned as `const char*` are
 * borrowed from the handle and remain valid until it is freed.
 */

#ifndef PKV_H
#define PKV_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PKV_API __declspec(dllexport)
#else
#define PKV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pkv_status {
    PKV_OK = 0,
    PKV_ERR_ARGUMENT = 1,   /* null handle or malformed argument */
    PKV_ERR_PARSE = 2,      /* config or report text did not parse */
    PKV_ERR_UNSUPPORTED = 3,/* operation not available for this model */
    PKV_ERR_NUMERIC = 4,    /* numeric routine failed (divergence, ...) */
    PKV_ERR_INTERNAL = 5
} pkv_status;

typedef enum pkv_check_status {
    PKV_CHECK_PASS = 0,
    PKV_CHECK_FAIL = 1,
    PKV_CHECK_SKIPPED = 2,
    PKV_CHECK_NOT_APPLICABLE = 3,
    PKV_CHECK_INDETERMINATE = 4
} pkv_check_status;

typedef enum pkv_membership {
    PKV_MEMBER_INTERIOR = 0,
    PKV_MEMBER_SPHERE_BOUNDARY = 1,
    PKV_MEMBER_ELLIPSOID_BOUNDARY = 2,
    PKV_MEMBER_OUTSIDE = 3
} pkv_membership;

typedef struct pkv_config pkv_config;
typedef struct pkv_report pkv_report;

PKV_API const char* pkv_version(void);

/* ---- configuration ------------------------------------------------------ */

PKV_API pkv_status pkv_config_create(pkv_config** out);
/* Parses the line-oriented `key=value` format (rows of sigma ';'-separated,
 * entries ','-separated). On PKV_ERR_PARSE the message is copied into err. */
PKV_API pkv_status pkv_config_parse(const char* text, pkv_config** out, char* err,
                                    size_t err_len);
PKV_API pkv_status pkv_config_set(pkv_config* cfg, const char* key, const char* value,
                                  char* err, size_t err_len);
PKV_API void pkv_config_free(pkv_config* cfg);

/* Real-chart dimension of the configured model. */
PKV_API pkv_status pkv_model_dim(const pkv_config* cfg, size_t* dim_out, char* err,
                                 size_t err_len);

/* ---- verification runs --------------------------------------------------- */

/* Runs the configured suites. Internal check errors become fail entries in
 * the report rather than error codes. */
PKV_API pkv_status pkv_run_suites(const pkv_config* cfg, pkv_report** out);

PKV_API size_t pkv_report_size(const pkv_report* rep);
PKV_API pkv_check_status pkv_report_check_status(const pkv_report* rep, size_t index);
PKV_API const char* pkv_report_check_name(const pkv_report* rep, size_t index);
PKV_API const char* pkv_report_check_anchor(const pkv_report* rep, size_t index);
PKV_API const char* pkv_report_check_witness(const pkv_report* rep, size_t index);
PKV_API int64_t pkv_report_check_ms(const pkv_report* rep, size_t index);
/* 0 iff no check failed. */
PKV_API int pkv_report_exit_code(const pkv_report* rep);

PKV_API pkv_status pkv_report_to_json(const pkv_report* rep, char** out);
PKV_API pkv_status pkv_report_to_text(const pkv_report* rep, char** out);
PKV_API pkv_status pkv_report_from_json(const char* json_text, pkv_report** out, char* err,
                                        size_t err_len);
PKV_API void pkv_report_free(pkv_report* rep);
PKV_API void pkv_string_free(char* s);

/* ---- geodesics ----------------------------------------------------------- */

/* Closed-form geodesic of the configured model with rational initial data
 * ("a/b" comma-separated lists), exported as CSV "t,x1,...,xd" at the given
 * sample times. PKV_ERR_UNSUPPORTED when no closed form exists. */
PKV_API pkv_status pkv_geodesic_csv(const pkv_config* cfg, const char* p_csv,
                                    const char* q_csv, const double* times, size_t n_times,
                                    char** out_csv, char* err, size_t err_len);

/* ---- compact quotient ---------------------------------------------------- */

/* Membership, canonical representative, and chart data of a point of the
 * punctured space under the deck map with parameters (a, b) taken from the
 * configuration. rep and sphere_point must hold dim doubles. */
PKV_API pkv_status pkv_quotient_query(const pkv_config* cfg, const double* x, size_t dim,
                                      int* membership, long* k, double* rep, double* angle,
                                      double* sphere_point, char* err, size_t err_len);

#ifdef __cplusplus
}
#endif

#endif /* PKV_H */
