/* C interface to the tangent-cone Betti toolkit. Every function returns a
 * tcb_status; on failure tcb_last_error() describes the problem for the
 * calling thread. Handles are opaque and owned by the caller, who releases
 * them with the matching destroy function. */
#ifndef TCBETTI_H
#define TCBETTI_H

#include <stddef.h>

#if defined(__GNUC__)
#define TCB_API __attribute__((visibility("default")))
#else
#define TCB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tcb_status {
  TCB_OK = 0,
  TCB_ERR_INVALID_PARAMS = 1,   /* alpha tuple fails validation */
  TCB_ERR_INVALID_ARGUMENT = 2, /* null pointer, bad config, ... */
  TCB_ERR_PARSE = 3,            /* see tcb_last_error_location */
  TCB_ERR_UNSUPPORTED = 4,      /* no formula / resolution for the case */
  TCB_ERR_COMPUTATION = 5,      /* an engine error (cutoff, degree cap, ...) */
  TCB_ERR_CANCELLED = 6,
  TCB_ERR_INTERNAL = 7
} tcb_status;

typedef enum tcb_format {
  TCB_FORMAT_TEXT = 0,
  TCB_FORMAT_JSON = 1,
  TCB_FORMAT_CSV = 2
} tcb_format;

typedef struct tcb_params {
  int alpha21;
  int alpha1;
  int alpha2;
  int alpha3;
  int alpha4;
} tcb_params;

typedef struct tcb_instance tcb_instance;
typedef struct tcb_report tcb_report;

TCB_API const char* tcb_status_string(tcb_status status);
/* Message of the last failure on this thread; "" if none. */
TCB_API const char* tcb_last_error(void);
/* 1-based line and column of the last parse failure; 0 when unknown. */
TCB_API void tcb_last_error_location(int* line, int* column);

/* ---- single instances ---- */

/* allow_common_factor != 0 accepts tuples whose n_i share a factor. */
TCB_API tcb_status tcb_instance_create(const tcb_params* params,
                                       int allow_common_factor,
                                       tcb_instance** out);
TCB_API void tcb_instance_destroy(tcb_instance* inst);

TCB_API tcb_status tcb_instance_generators(const tcb_instance* inst,
                                           long long out[4]);
/* *name stays valid while the instance lives. */
TCB_API tcb_status tcb_instance_case(const tcb_instance* inst,
                                     int* multiplicity_index,
                                     const char** name);
TCB_API tcb_status tcb_instance_formula_betti(const tcb_instance* inst,
                                              long long out[4]);
/* The next three compute lazily and cache. */
TCB_API tcb_status tcb_instance_cm(tcb_instance* inst, int* is_cm);
TCB_API tcb_status tcb_instance_oracle_betti(tcb_instance* inst,
                                             long long out[4]);
TCB_API tcb_status tcb_instance_resolution_betti(tcb_instance* inst,
                                                 long long out[4]);

/* ---- reports ---- */

TCB_API const char* tcb_report_text(const tcb_report* report);
/* 0 success, 3 verification mismatch. */
TCB_API int tcb_report_exit_code(const tcb_report* report);
TCB_API void tcb_report_destroy(tcb_report* report);

/* oracle / resolutions != 0 add the oracle Betti numbers and the
 * resolution audit. */
TCB_API tcb_status tcb_betti_report(const tcb_params* params, int oracle,
                                    int resolutions, tcb_format format,
                                    tcb_report** out);

/* expected_override: NULL for the built-in table, otherwise fixture text
 * with rows a21,a1,a2,a3,a4,n1,n2,n3,n4,b0,b1,b2,b3. */
TCB_API tcb_status tcb_table1_report(tcb_format format,
                                     const char* expected_override,
                                     tcb_report** out);

TCB_API tcb_status tcb_audit_report(const char* chain_text, tcb_format format,
                                    tcb_report** out);

/* ---- scans ---- */

typedef struct tcb_scan_config {
  int lo[5]; /* alpha21, alpha1, alpha2, alpha3, alpha4 */
  int hi[5];
  int run_oracle;
  int run_resolutions;
  int run_homogeneity;
  int jobs;
  int safety_cap; /* 0 means the default of 8 */
  tcb_format format;
} tcb_scan_config;

/* Fills every alpha_i in [2, max_alpha] and alpha21 in [1, max_alpha]. */
TCB_API void tcb_scan_config_default(tcb_scan_config* config, int max_alpha);

/* Receives the formatted dataset piece by piece, in tuple order. */
typedef void (*tcb_chunk_callback)(const char* chunk, size_t length,
                                   void* user);

/* Streams the dataset through `sink`; *summary receives the summary report
 * (text in the requested format). A nonzero *cancel stops new work; the
 * finished prefix is still written and the dataset is closed properly. */
TCB_API tcb_status tcb_scan_run(const tcb_scan_config* config,
                                tcb_chunk_callback sink, void* user,
                                const volatile int* cancel,
                                tcb_report** summary);

#ifdef __cplusplus
}
#endif

#endif
