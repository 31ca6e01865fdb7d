#ifndef PADIM_PADIM_H
#define PADIM_PADIM_H

/* C interface to the p-adic dimension library. All objects are opaque
 * handles owned by the caller and released with the matching _free call.
 * Functions returning padim_status record a message on the context. */

#include <stddef.h>
#include <stdint.h>

#if defined(PADIM_BUILDING)
#define PADIM_API __attribute__((visibility("default")))
#else
#define PADIM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum padim_status {
  PADIM_OK = 0,
  PADIM_DOMAIN_ERROR = 1,
  PADIM_USAGE_ERROR = 2,
  PADIM_INTERNAL_ERROR = 3
} padim_status;

typedef enum padim_kind { PADIM_SYMMETRIC = 0, PADIM_EXTERIOR = 1 } padim_kind;
typedef enum padim_base { PADIM_BASE_PLUS = 0, PADIM_BASE_MINUS = 1 } padim_base;

typedef struct padim_context padim_context;
typedef struct padim_series padim_series;
typedef struct padim_padic padim_padic;

PADIM_API const char* padim_version(void);

PADIM_API padim_context* padim_context_new(void);
PADIM_API void padim_context_free(padim_context* ctx);
PADIM_API void padim_context_set_precision(padim_context* ctx, size_t digits);
PADIM_API void padim_context_set_size_cap(padim_context* ctx, size_t cap);

/* Error kind name ("NotABinomialPower", ...) and detail of the last failure;
 * empty strings after a success. */
PADIM_API const char* padim_last_error_kind(const padim_context* ctx);
PADIM_API const char* padim_last_error(const padim_context* ctx);
/* Offending index of the last failure, or -1. */
PADIM_API int64_t padim_last_error_index(const padim_context* ctx);

/* Runs a named operation on a JSON request. On every status except an
 * allocation failure, *response receives a JSON document to be released with
 * padim_string_free. */
PADIM_API padim_status padim_call(padim_context* ctx, const char* op, const char* request_json, char** response);
PADIM_API void padim_string_free(char* s);
/* Number of operation names, and the i-th name (static storage). */
PADIM_API size_t padim_operation_count(void);
PADIM_API const char* padim_operation_name(size_t i);

PADIM_API padim_status padim_padic_new(padim_context* ctx, uint32_t p, const uint32_t* digits, size_t precision,
                                        padim_padic** out);
PADIM_API padim_status padim_padic_from_int(padim_context* ctx, uint32_t p, size_t precision, int64_t value,
                                             padim_padic** out);
PADIM_API void padim_padic_free(padim_padic* t);
PADIM_API uint32_t padim_padic_prime(const padim_padic* t);
PADIM_API size_t padim_padic_precision(const padim_padic* t);
/* Digit i, or 0 beyond the precision. */
PADIM_API uint32_t padim_padic_digit(const padim_padic* t, size_t i);
/* Balanced representative; PADIM_DOMAIN_ERROR if it does not fit. */
PADIM_API padim_status padim_padic_to_int(padim_context* ctx, const padim_padic* t, int64_t* out);

PADIM_API padim_status padim_series_new(padim_context* ctx, uint32_t p, const uint32_t* coeffs, size_t trunc,
                                         padim_series** out);
/* 1 + z or 1 - z modulo z^trunc. */
PADIM_API padim_status padim_series_binomial_base(padim_context* ctx, uint32_t p, size_t trunc, padim_base base,
                                                   padim_series** out);
PADIM_API void padim_series_free(padim_series* s);
PADIM_API size_t padim_series_trunc(const padim_series* s);
/* Coefficient i, or 0 beyond the truncation. */
PADIM_API uint32_t padim_series_coeff(const padim_series* s, size_t i);
PADIM_API padim_status padim_series_pow(padim_context* ctx, const padim_series* f, const padim_padic* t,
                                         padim_series** out);
PADIM_API padim_status padim_series_extract(padim_context* ctx, const padim_series* f, padim_base base,
                                             padim_padic** out);

/* Dim+ of a symmetric sequence or Dim- of an exterior one. */
PADIM_API padim_status padim_dim(padim_context* ctx, uint32_t p, padim_kind kind, const uint32_t* values, size_t count,
                                  padim_padic** out);

#ifdef __cplusplus
}
#endif

#endif
