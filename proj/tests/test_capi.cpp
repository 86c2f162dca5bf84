// Exercises the shared-library surface the way an external consumer would.

#include <cassert>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "ncqm.h"

#define REQUIRE(cond)                                                   \
  do {                                                                  \
    if (!(cond)) {                                                      \
      std::fprintf(stderr, "FAILED at %s:%d: %s\n", __FILE__, __LINE__, \
                   #cond);                                              \
      return 1;                                                         \
    }                                                                   \
  } while (0)

int main() {
  REQUIRE(std::strcmp(ncqm_status_string(NCQM_OK), "ok") == 0);
  REQUIRE(ncqm_version() != nullptr);
  REQUIRE(ncqm_suite_count() == 10);

  ncqm_config* cfg = ncqm_config_create();
  REQUIRE(cfg != nullptr);
  REQUIRE(ncqm_config_set(cfg, "seed", "42") == NCQM_OK);
  REQUIRE(ncqm_config_set(cfg, "no_such_key", "1") == NCQM_ERR_INVALID_ARGUMENT);
  REQUIRE(std::strlen(ncqm_last_error()) > 0);
  REQUIRE(ncqm_config_set(cfg, "m", "bogus") == NCQM_ERR_INVALID_ARGUMENT);

  int checks = 0, failed = 0;
  REQUIRE(ncqm_run_suite(cfg, "definitely_not_a_suite", "/tmp/x.json", &checks, &failed) ==
          NCQM_ERR_UNKNOWN_SUITE);

  const char* report = "/tmp/ncqm_capi_group.json";
  REQUIRE(ncqm_run_suite(cfg, "group", report, &checks, &failed) == NCQM_OK);
  REQUIRE(checks > 10);
  REQUIRE(failed == 0);
  std::FILE* f = std::fopen(report, "rb");
  REQUIRE(f != nullptr);
  std::fclose(f);
  std::remove(report);

  // a config error surfaces as an invalid-argument status
  REQUIRE(ncqm_config_set(cfg, "m", "-3") == NCQM_OK);  // value parses; range checked at run
  REQUIRE(ncqm_run_suite(cfg, "group", report, &checks, &failed) == NCQM_ERR_INVALID_ARGUMENT);
  ncqm_config_destroy(cfg);

  // grid function handles and the binary format
  ncqm_grid_fn* g = ncqm_grid_fn_gaussian(32, 5.0, 0.4, -0.2, 1.0);
  REQUIRE(g != nullptr);
  REQUIRE(std::abs(ncqm_grid_fn_norm(g) - 1.0) < 1e-12);
  int64_t n = 0;
  double l = 0.0;
  REQUIRE(ncqm_grid_fn_size(g, &n, &l) == NCQM_OK);
  REQUIRE(n == 32);
  REQUIRE(l == 5.0);

  const char* gpath = "/tmp/ncqm_capi_probe.grid";
  REQUIRE(ncqm_grid_fn_save(g, gpath) == NCQM_OK);
  ncqm_grid_fn* g2 = ncqm_grid_fn_load(gpath);
  REQUIRE(g2 != nullptr);
  std::vector<double> a(2 * 32 * 32), b(2 * 32 * 32);
  REQUIRE(ncqm_grid_fn_copy_values(g, a.data(), a.size()) == NCQM_OK);
  REQUIRE(ncqm_grid_fn_copy_values(g2, b.data(), b.size()) == NCQM_OK);
  REQUIRE(a == b);
  REQUIRE(ncqm_grid_fn_copy_values(g, a.data(), 4) == NCQM_ERR_INVALID_ARGUMENT);
  ncqm_grid_fn_destroy(g);
  ncqm_grid_fn_destroy(g2);
  std::remove(gpath);

  REQUIRE(ncqm_grid_fn_gaussian(100, 5.0, 0, 0, 1.0) == nullptr);  // not a power of two

  std::puts("capi: all checks passed");
  return 0;
}
