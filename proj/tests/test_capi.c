#include <stdio.h>
#include <string.h>

#include "lieindex/lieindex.h"

static int failures = 0;

#define EXPECT(cond)                                            \
  do {                                                          \
    if (!(cond)) {                                              \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                               \
    }                                                           \
  } while (0)

int main(void) {
  lieindex_config* cfg = lieindex_config_new();
  EXPECT(cfg != NULL);
  EXPECT(lieindex_config_set_seed(cfg, 20020801) == LIEINDEX_OK);
  EXPECT(lieindex_config_set_trials(cfg, 0) == LIEINDEX_ERR_SPEC);
  EXPECT(strlen(lieindex_last_error()) > 0);
  EXPECT(lieindex_config_set_trials(cfg, 3) == LIEINDEX_OK);
  EXPECT(lieindex_config_set_seed(NULL, 1) == LIEINDEX_ERR_ARGUMENT);

  lieindex_result* r = NULL;
  EXPECT(lieindex_algebra_info("A3", cfg, &r) == LIEINDEX_OK);
  EXPECT(r != NULL);
  EXPECT(strstr(lieindex_result_json(r), "\"exponents\":[1,2,3]") != NULL);
  EXPECT(lieindex_result_exit_code(r) == 0);
  lieindex_result_free(r);

  r = NULL;
  EXPECT(lieindex_algebra_info("Q7", cfg, &r) == LIEINDEX_ERR_SPEC);
  EXPECT(r == NULL);

  EXPECT(lieindex_orbit("D4", "5,3", cfg, &r) == LIEINDEX_OK);
  EXPECT(strstr(lieindex_result_json(r), "\"heart2\":false") != NULL);
  EXPECT(strstr(lieindex_result_table(r), "dim_z: 6") != NULL);
  lieindex_result_free(r);

  EXPECT(lieindex_orbit("A1", "3", cfg, &r) == LIEINDEX_ERR_SPEC);
  EXPECT(lieindex_orbit("A1", NULL, cfg, &r) == LIEINDEX_ERR_ARGUMENT);

  EXPECT(lieindex_config_set_type(cfg, "A") == LIEINDEX_OK);
  EXPECT(lieindex_config_set_max_rank(cfg, 2) == LIEINDEX_OK);
  EXPECT(lieindex_verify("reductive-index", cfg, &r) == LIEINDEX_OK);
  EXPECT(lieindex_result_exit_code(r) == 0);
  EXPECT(strncmp(lieindex_result_json(r), "{\"certify\":false", 16) == 0);
  lieindex_result_free(r);
  EXPECT(lieindex_verify("unknown", cfg, &r) == LIEINDEX_ERR_SPEC);

  uint64_t checked = 0, violations = 1;
  lieindex_parity_stats(&checked, &violations);
  EXPECT(checked > 0);
  EXPECT(violations == 0);

  lieindex_config_free(cfg);
  lieindex_result_free(NULL);
  if (failures == 0) printf("c api: all checks passed\n");
  return failures == 0 ? 0 : 1;
}
