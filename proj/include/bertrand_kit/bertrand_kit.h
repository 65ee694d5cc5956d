// Copyright 2026 The bertrand-kit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface of the bertrand-kit library. Every call returns a status
 * code; the message of the last failure on the calling thread is
 * available from bk_last_error(). Objects are opaque and released with
 * their matching *_free function. */
#ifndef BERTRAND_KIT_H
#define BERTRAND_KIT_H

#include <stddef.h>

#if defined(_WIN32)
#define BK_API __declspec(dllexport)
#else
#define BK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as the command-line exit codes. */
typedef enum bk_status {
    BK_OK = 0,
    BK_ERR_OTHER = 1,
    BK_ERR_PARSE = 2,
    BK_ERR_DOMAIN = 3,
    BK_ERR_SINGULAR = 4,
    BK_ERR_DEGENERATE_RATIO = 5,
    BK_ERR_NOT_A_PAIR = 6,
    BK_ERR_IDENTITY = 7,
    BK_ERR_DEGENERATE_SPHERE = 8
} bk_status;

typedef struct bk_curve bk_curve;
typedef struct bk_pair bk_pair;
typedef struct bk_result bk_result;

BK_API const char* bk_version(void);
/* Message of the last failure on this thread, "" if none. */
BK_API const char* bk_last_error(void);
/* Library error kind of the last failure ("Singular", ...), "" if none. */
BK_API const char* bk_last_error_kind(void);

/* Curves */
BK_API bk_status bk_curve_analytic(const char* x, const char* y, const char* z, double lo, double hi,
                                   const char* label, bk_curve** out);
BK_API bk_status bk_curve_sampled(const double* t, const double* xyz, size_t n, const char* label,
                                  bk_curve** out);
BK_API bk_status bk_curve_preset(const char* name, bk_curve** out);
BK_API bk_status bk_curve_load(const char* path, bk_curve** out);
BK_API bk_status bk_curve_from_json(const char* text, bk_curve** out);
/* Caller releases *text with bk_string_free. */
BK_API bk_status bk_curve_to_json(const bk_curve* c, char** text);
BK_API bk_status bk_curve_domain(const bk_curve* c, double* lo, double* hi);
BK_API void bk_curve_free(bk_curve* c);
BK_API void bk_string_free(char* s);

typedef struct bk_frenet {
    double t, speed;
    double T[3], N[3], B[3];
    double kappa, tau, dkappa_ds, dtau_ds, d2kappa_ds2;
    double Gamma;
} bk_frenet;

BK_API bk_status bk_curve_frenet(const bk_curve* c, double t, bk_frenet* out);

/* Derived curves */
BK_API bk_status bk_generate(const bk_curve* sphere, double a, double omega, int n, bk_curve** out,
                             double* lambda_nominal);
BK_API bk_status bk_construct_mate(const bk_curve* base, double lambda, int n, bk_curve** out);

/* Pairs */
BK_API bk_status bk_pair_detect(const bk_curve* base, const bk_curve* mate, int n, bk_pair** out);
BK_API bk_status bk_pair_info(const bk_pair* p, double* lambda, int* epsilon);
BK_API void bk_pair_free(bk_pair* p);

/* Commands. On success or identity failure *out receives the command's
 * output; release it with bk_result_free. */
typedef struct bk_frenet_args {
    const char* curve;
    int use_at;
    double at;
    int grid;
    int order;
    int mask;
    const char* csv; /* may be NULL */
} bk_frenet_args;

typedef struct bk_mate_args {
    const char* curve;
    int auto_lambda;
    double lambda;
    int n;
    const char* out;
} bk_mate_args;

typedef struct bk_indicatrix_args {
    const char* base;
    const char* mate;
    const char* kind;
    int n;
    const char* csv; /* may be NULL */
    const char* out; /* may be NULL */
} bk_indicatrix_args;

typedef struct bk_verify_args {
    const char* base;
    const char* mate;
    int n;
    const char* const* tol; /* "id=value" strings */
    size_t tol_count;
} bk_verify_args;

typedef struct bk_generate_args {
    const char* sphere;
    double a;
    int has_omega;
    double omega;
    int n;
    const char* out;
} bk_generate_args;

typedef struct bk_classify_args {
    const char* const* files;
    size_t file_count;
    int n;
    int arclength_aligned;
} bk_classify_args;

BK_API bk_status bk_cmd_frenet(const bk_frenet_args* a, bk_result** out);
BK_API bk_status bk_cmd_mate(const bk_mate_args* a, bk_result** out);
BK_API bk_status bk_cmd_indicatrix(const bk_indicatrix_args* a, bk_result** out);
BK_API bk_status bk_cmd_verify(const bk_verify_args* a, bk_result** out);
BK_API bk_status bk_cmd_generate(const bk_generate_args* a, bk_result** out);
BK_API bk_status bk_cmd_classify(const bk_classify_args* a, bk_result** out);

/* Text for stdout. */
BK_API const char* bk_result_stdout(const bk_result* r);
/* Diagnostic lines for stderr. */
BK_API size_t bk_result_diagnostic_count(const bk_result* r);
BK_API const char* bk_result_diagnostic(const bk_result* r, size_t i);
/* Files the command asks to be written. */
BK_API size_t bk_result_file_count(const bk_result* r);
BK_API const char* bk_result_file_path(const bk_result* r, size_t i);
BK_API const char* bk_result_file_data(const bk_result* r, size_t i, size_t* size);
/* Writes every file; BK_ERR_PARSE on I/O failure. */
BK_API bk_status bk_result_write_files(const bk_result* r);
BK_API void bk_result_free(bk_result* r);

#ifdef __cplusplus
}
#endif

#endif
