#ifndef LIEINDEX_H
#define LIEINDEX_H

/* C interface to the lieindex library. Objects are opaque handles; every
 * call that can fail returns a lieindex_status and leaves a message for
 * lieindex_last_error() in the calling thread. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lieindex_status {
  LIEINDEX_OK = 0,
  LIEINDEX_ERR_ARGUMENT = 1,    /* null handle or malformed argument */
  LIEINDEX_ERR_SPEC = 2,        /* unknown type, rank out of bounds, bad partition or suite */
  LIEINDEX_ERR_CROSS_CHECK = 3, /* internal consistency check failed */
  LIEINDEX_ERR_BUDGET = 4,      /* certification budget exceeded */
  LIEINDEX_ERR_IO = 5,
  LIEINDEX_ERR_INTERNAL = 6
} lieindex_status;

typedef struct lieindex_config lieindex_config;
typedef struct lieindex_result lieindex_result;

const char* lieindex_status_string(lieindex_status s);
/* Message of the last failed call in this thread; "" if none. */
const char* lieindex_last_error(void);

lieindex_config* lieindex_config_new(void);
void lieindex_config_free(lieindex_config* c);
lieindex_status lieindex_config_set_seed(lieindex_config* c, uint64_t seed);
lieindex_status lieindex_config_set_trials(lieindex_config* c, uint32_t trials);
lieindex_status lieindex_config_set_coeff_bound(lieindex_config* c, uint32_t bound);
lieindex_status lieindex_config_set_certify(lieindex_config* c, int on);
/* Suite selectors: a family letter or an algebra name such as "D4". */
lieindex_status lieindex_config_set_type(lieindex_config* c, const char* type);
lieindex_status lieindex_config_set_rank(lieindex_config* c, size_t rank);
lieindex_status lieindex_config_set_max_rank(lieindex_config* c, size_t max_rank);
lieindex_status lieindex_config_set_cache_dir(lieindex_config* c, const char* dir);
lieindex_status lieindex_config_set_jobs(lieindex_config* c, size_t jobs);

/* type: "A3", "D4" (matrix realization) or "G2" (Chevalley basis). */
lieindex_status lieindex_algebra_info(const char* type, const lieindex_config* c, lieindex_result** out);
/* selector: partition "5,3" or "search:<dim z>". */
lieindex_status lieindex_orbit(const char* type, const char* selector, const lieindex_config* c,
                               lieindex_result** out);
lieindex_status lieindex_verify(const char* suite, const lieindex_config* c, lieindex_result** out);

/* JSON text: one object for algebra_info and orbit, JSON lines for verify. */
const char* lieindex_result_json(const lieindex_result* r);
/* Human-readable table. */
const char* lieindex_result_table(const lieindex_result* r);
/* 0 when every asserted check holds, 1 on a failed check, 3 when a suite
 * item raised an internal error. */
int lieindex_result_exit_code(const lieindex_result* r);
void lieindex_result_free(lieindex_result* r);

/* Parity checks (dim - ind even) performed so far in this process. */
void lieindex_parity_stats(uint64_t* checked, uint64_t* violations);

#ifdef __cplusplus
}
#endif

#endif
