// Command-line front end. Talks to the library exclusively through the
// public C interface.

#include <cstdio>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ncqm.h"

namespace {

struct ConfigDeleter {
  void operator()(ncqm_config* c) const { ncqm_config_destroy(c); }
};
using ConfigPtr = std::unique_ptr<ncqm_config, ConfigDeleter>;

int set_or_die(ncqm_config* cfg, const char* key, const std::string& value) {
  const int rc = ncqm_config_set(cfg, key, value.c_str());
  if (rc != NCQM_OK) std::fprintf(stderr, "ncqm: %s\n", ncqm_last_error());
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification suites for the noncommutative plane"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run a verification suite");
  std::string suite;
  run->add_option("suite", suite, "suite name (see below) or 'all'")->required();
  std::string config_file;
  run->add_option("--config", config_file, "key = value configuration file");
  std::optional<double> m, theta, lambda, alpha, beta, gamma, grid_l, phase_l;
  std::optional<int> grid_n, phase_n;
  std::optional<long long> seed;
  run->add_option("--m", m, "mass parameter");
  run->add_option("--theta", theta, "position noncommutativity (sets lambda = theta m^2)");
  run->add_option("--lambda", lambda, "second extension parameter");
  run->add_option("--alpha", alpha, "first translation extension constant");
  run->add_option("--beta", beta, "second translation extension constant");
  run->add_option("--gamma", gamma, "third translation extension constant");
  run->add_option("--grid-n", grid_n, "grid points per axis (power of two)");
  run->add_option("--grid-l", grid_l, "grid half extent");
  run->add_option("--phase-n", phase_n, "phase-space quadrature nodes per axis");
  run->add_option("--phase-l", phase_l, "phase-space quadrature half extent");
  run->add_option("--seed", seed, "seed for randomized checks");
  bool fast = false;
  run->add_flag("--fast", fast, "use the FFT correlation path for the quadratures");
  std::string out, dump_dir;
  run->add_option("--out", out, "write the JSON report here instead of stdout");
  run->add_option("--dump-states", dump_dir, "dump probe/state grid files into this directory");

  std::string names = "suites:";
  for (int i = 0; i < ncqm_suite_count(); ++i) names += std::string(" ") + ncqm_suite_name(i);
  run->footer(names);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  ConfigPtr cfg(ncqm_config_create());
  if (!config_file.empty()) {
    if (ncqm_config_load_file(cfg.get(), config_file.c_str()) != NCQM_OK) {
      std::fprintf(stderr, "ncqm: %s\n", ncqm_last_error());
      return 2;
    }
  }
  // flags override the file
  auto setd = [&](const char* key, const std::optional<double>& v) {
    return !v || set_or_die(cfg.get(), key, std::to_string(*v)) == NCQM_OK;
  };
  if (!setd("m", m) || !setd("theta", theta) || !setd("lambda", lambda) ||
      !setd("alpha", alpha) || !setd("beta", beta) || !setd("gamma", gamma) ||
      !setd("grid_l", grid_l) || !setd("phase_l", phase_l))
    return 2;
  if (grid_n && set_or_die(cfg.get(), "grid_n", std::to_string(*grid_n)) != NCQM_OK) return 2;
  if (phase_n && set_or_die(cfg.get(), "phase_n", std::to_string(*phase_n)) != NCQM_OK) return 2;
  if (seed && set_or_die(cfg.get(), "seed", std::to_string(*seed)) != NCQM_OK) return 2;
  if (fast && set_or_die(cfg.get(), "fast", "true") != NCQM_OK) return 2;
  if (!dump_dir.empty() && set_or_die(cfg.get(), "dump_dir", dump_dir) != NCQM_OK) return 2;

  int checks = 0, failed = 0;
  const int rc =
      ncqm_run_suite(cfg.get(), suite.c_str(), out.empty() ? nullptr : out.c_str(), &checks, &failed);
  if (rc != NCQM_OK) {
    std::fprintf(stderr, "ncqm: %s\n", ncqm_last_error());
    return 2;
  }
  std::fprintf(stderr, "ncqm: suite '%s': %d checks, %d failed\n", suite.c_str(), checks, failed);
  return failed == 0 ? 0 : 1;
}
