#ifndef NCQM_H
#define NCQM_H

/* C interface to the noncommutative-quantum-mechanics verification library.
 * All objects are opaque handles; every function that can fail returns a
 * status code from ncqm_status. Handles are not thread-safe individually,
 * but distinct handles may be used from distinct threads.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum ncqm_status {
  NCQM_OK = 0,
  NCQM_ERR_INVALID_ARGUMENT = 1,
  NCQM_ERR_IO = 2,
  NCQM_ERR_UNKNOWN_SUITE = 3,
  NCQM_ERR_INTERNAL = 4
};

const char* ncqm_status_string(int status);
const char* ncqm_version(void);
/* Message for the most recent failure on this thread (empty if none). */
const char* ncqm_last_error(void);

/* ----------------------------------------------------------- run config -- */

typedef struct ncqm_config ncqm_config;

ncqm_config* ncqm_config_create(void);
void ncqm_config_destroy(ncqm_config* cfg);
/* Keys: m, lambda, theta, alpha, beta, gamma, grid_n, grid_l, phase_n,
 * phase_l, seed, fast, out, dump_dir. Unknown keys are rejected. */
int ncqm_config_set(ncqm_config* cfg, const char* key, const char* value);
/* Plain-text file of key = value lines; '#' starts a comment. */
int ncqm_config_load_file(ncqm_config* cfg, const char* path);

/* -------------------------------------------------------------- suites -- */

int ncqm_suite_count(void);
const char* ncqm_suite_name(int index);

/* Runs one suite ("group", "matrix", "coadjoint", "rep", "generators",
 * "resolution", "quantize", "pov", "wigner" or "all") and writes the JSON
 * report to report_path (NULL writes it to stdout). checks/failed receive
 * the record counts when non-NULL. */
int ncqm_run_suite(const ncqm_config* cfg, const char* suite, const char* report_path,
                   int* checks, int* failed);

/* -------------------------------------------- grid function file format -- */

typedef struct ncqm_grid_fn ncqm_grid_fn;

/* Unit-norm Gaussian probe on an n x n grid over [-l, l)^2. */
ncqm_grid_fn* ncqm_grid_fn_gaussian(int n, double l, double cx, double cy, double width);
/* Binary format: int64 n, double l (little endian), then n*n row-major
 * complex doubles. */
ncqm_grid_fn* ncqm_grid_fn_load(const char* path);
int ncqm_grid_fn_save(const ncqm_grid_fn* f, const char* path);
int ncqm_grid_fn_size(const ncqm_grid_fn* f, int64_t* n, double* l);
/* Copies re/im interleaved values; capacity must be at least 2*n*n. */
int ncqm_grid_fn_copy_values(const ncqm_grid_fn* f, double* out, size_t capacity);
double ncqm_grid_fn_norm(const ncqm_grid_fn* f);
void ncqm_grid_fn_destroy(ncqm_grid_fn* f);

#ifdef __cplusplus
}
#endif

#endif /* NCQM_H */
