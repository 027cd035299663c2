/* ziso — exact isoperimetric optimization on integer Cayley graphs.
 *
 * C interface of the shared library: opaque handles, integer status codes,
 * results returned as JSON or CSV strings that the caller frees with
 * ziso_string_free. All functions are thread-safe on distinct handles;
 * ziso_last_error returns a thread-local detail message for the most recent
 * failure on the calling thread.
 */
#ifndef ZISO_H
#define ZISO_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define ZISO_OK 0
#define ZISO_ERR_INVALID_ARGUMENT 1 /* bad sizes, ranges, windows, null pointers */
#define ZISO_ERR_BAD_GENERATORS 2   /* empty list or 0 among the generators */
#define ZISO_ERR_NOT_GENERATING 3   /* gcd of |generators| is not 1 */
#define ZISO_ERR_INTERNAL 4

typedef struct ziso_generators ziso_generators;
typedef struct ziso_zset ziso_zset;

/* kind */
#define ZISO_KIND_EDGE 0
#define ZISO_KIND_VERTEX 1

/* 2-D norms */
#define ZISO_NORM_L1_EDGE 0
#define ZISO_NORM_LINF_VERTEX 1

/* window policies */
#define ZISO_WINDOW_DILATION 0 /* W(n) = n * (b_max + 1) */
#define ZISO_WINDOW_SLACK 1    /* W(n) = n + 2 * (b_max + 1) */
#define ZISO_WINDOW_FIXED 2

const char* ziso_version(void);
const char* ziso_status_name(int status);
const char* ziso_last_error(void);
void ziso_string_free(char* s);

int ziso_generators_create(const int64_t* elements, size_t count, ziso_generators** out);
void ziso_generators_destroy(ziso_generators* g);
int ziso_generators_info(const ziso_generators* g, int64_t* b_max, int64_t* b_plus,
                         int64_t* b_minus, int* symmetric, int* generates_z);
int64_t ziso_generators_gcd(const ziso_generators* g);

int ziso_zset_create(const int64_t* values, size_t count, ziso_zset** out);
void ziso_zset_destroy(ziso_zset* s);

/* Boundary of an explicit set; JSON per schema ziso.boundary.v1. */
int ziso_boundary_json(const ziso_generators* g, const ziso_zset* set, int kind,
                       char** out_json);

/* Complete minimizer family at size n within [0, window); ziso.family.v1. */
int ziso_search_json(const ziso_generators* g, int64_t n, int kind, int64_t window,
                     int workers, char** out_json);

/* Per-size scan over [n_from, n_to]; ziso.scan.v1 as JSON or CSV. */
int ziso_scan_json(const ziso_generators* g, int kind, int64_t n_from, int64_t n_to,
                   int window_policy, int64_t fixed_window, int workers, char** out_json);
int ziso_scan_csv(const ziso_generators* g, int kind, int64_t n_from, int64_t n_to,
                  int window_policy, int64_t fixed_window, int workers, char** out_csv);

/* Nesting verdict between the families at sizes n1 <= n2 (same window for
 * both searches); ziso.nest.v1. *nested is set to 1 or 0. */
int ziso_nest_json(const ziso_generators* g, int kind, int64_t n1, int64_t n2,
                   int64_t window, int workers, char** out_json, int* nested);

/* Expansion certificate with the certified interval-optimality thresholds;
 * empirical_n_max > 0 additionally scans sizes 1..empirical_n_max (slack
 * windows) for the empirical thresholds. ziso.certificate.v1. */
int ziso_certify_json(const ziso_generators* g, int64_t empirical_n_max, char** out_json);

/* Exhaustive 2-D family at size n within [0, window)^2; ziso.family2d.v1. */
int ziso_grid2d_search_json(int norm, int64_t n, int64_t window, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* ZISO_H */
