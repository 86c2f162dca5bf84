#include "ncqm.h"

#include <cstring>
#include <iostream>
#include <string>

#include "ncqm/config.hpp"
#include "ncqm/grid.hpp"
#include "ncqm/suites.hpp"

namespace {

thread_local std::string g_last_error;

int fail(int code, const std::string& msg) {
  g_last_error = msg;
  return code;
}

template <class Fn>
int guarded(const Fn& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    return fail(NCQM_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(NCQM_ERR_INTERNAL, e.what());
  }
}

}  // namespace

struct ncqm_config {
  ncqm::cfg::RunConfig cfg;
};

struct ncqm_grid_fn {
  ncqm::grid::GridFunction f;
};

extern "C" {

const char* ncqm_status_string(int status) {
  switch (status) {
    case NCQM_OK: return "ok";
    case NCQM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case NCQM_ERR_IO: return "i/o error";
    case NCQM_ERR_UNKNOWN_SUITE: return "unknown suite";
    default: return "internal error";
  }
}

const char* ncqm_version(void) { return "1.0.0"; }

const char* ncqm_last_error(void) { return g_last_error.c_str(); }

ncqm_config* ncqm_config_create(void) { return new ncqm_config{}; }

void ncqm_config_destroy(ncqm_config* cfg) { delete cfg; }

int ncqm_config_set(ncqm_config* cfg, const char* key, const char* value) {
  if (!cfg || !key || !value) return fail(NCQM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    ncqm::cfg::apply_key_value(cfg->cfg, key, value);
    return NCQM_OK;
  });
}

int ncqm_config_load_file(ncqm_config* cfg, const char* path) {
  if (!cfg || !path) return fail(NCQM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    cfg->cfg = ncqm::cfg::parse_config_file(path, cfg->cfg);
    return NCQM_OK;
  });
}

int ncqm_suite_count(void) { return static_cast<int>(ncqm::suite::suite_names().size()); }

const char* ncqm_suite_name(int index) {
  const auto& names = ncqm::suite::suite_names();
  if (index < 0 || index >= static_cast<int>(names.size())) return nullptr;
  return names[static_cast<size_t>(index)].c_str();
}

int ncqm_run_suite(const ncqm_config* cfg, const char* suite, const char* report_path,
                   int* checks, int* failed) {
  if (!cfg || !suite) return fail(NCQM_ERR_INVALID_ARGUMENT, "null argument");
  if (!ncqm::suite::is_suite_name(suite))
    return fail(NCQM_ERR_UNKNOWN_SUITE, std::string("unknown suite: ") + suite);
  return guarded([&]() -> int {
    ncqm::cfg::RunConfig rc = cfg->cfg;
    rc.finalize();
    const auto report = ncqm::suite::run_suite(suite, rc);
    if (report_path) {
      try {
        ncqm::suite::write_report_file(report, report_path);
      } catch (const std::exception& e) {
        return fail(NCQM_ERR_IO, e.what());
      }
    } else {
      ncqm::suite::write_report(report, std::cout);
    }
    if (checks) *checks = static_cast<int>(report.records.size());
    if (failed) *failed = report.failed();
    return NCQM_OK;
  });
}

ncqm_grid_fn* ncqm_grid_fn_gaussian(int n, double l, double cx, double cy, double width) {
  try {
    return new ncqm_grid_fn{
        ncqm::grid::gaussian(ncqm::grid::GridSpec(n, l), {cx, cy}, width)};
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return nullptr;
  }
}

ncqm_grid_fn* ncqm_grid_fn_load(const char* path) {
  if (!path) return nullptr;
  try {
    return new ncqm_grid_fn{ncqm::grid::load(path)};
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return nullptr;
  }
}

int ncqm_grid_fn_save(const ncqm_grid_fn* f, const char* path) {
  if (!f || !path) return fail(NCQM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() -> int {
    try {
      ncqm::grid::save(f->f, path);
    } catch (const std::exception& e) {
      return fail(NCQM_ERR_IO, e.what());
    }
    return NCQM_OK;
  });
}

int ncqm_grid_fn_size(const ncqm_grid_fn* f, int64_t* n, double* l) {
  if (!f) return fail(NCQM_ERR_INVALID_ARGUMENT, "null argument");
  if (n) *n = f->f.n();
  if (l) *l = f->f.spec().l;
  return NCQM_OK;
}

int ncqm_grid_fn_copy_values(const ncqm_grid_fn* f, double* out, size_t capacity) {
  if (!f || !out) return fail(NCQM_ERR_INVALID_ARGUMENT, "null argument");
  const size_t need = 2 * f->f.values().size();
  if (capacity < need) return fail(NCQM_ERR_INVALID_ARGUMENT, "buffer too small");
  std::memcpy(out, f->f.values().data(), need * sizeof(double));
  return NCQM_OK;
}

double ncqm_grid_fn_norm(const ncqm_grid_fn* f) { return f ? ncqm::grid::norm(f->f) : 0.0; }

void ncqm_grid_fn_destroy(ncqm_grid_fn* f) { delete f; }

}  // extern "C"
