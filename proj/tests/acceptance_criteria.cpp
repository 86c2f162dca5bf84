// End-to-end acceptance run. Drives the shared library through the public C
// interface with the default configuration, collects every criterion-tagged
// check from the JSON reports, and prints one verdict line per criterion.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "ncqm.h"

namespace {

struct CriterionState {
  int checks = 0;
  int failed = 0;
  double runtime_limit = 0.0;  // seconds; 0 = no limit
  double runtime = 0.0;
  bool runtime_ok = true;
};

const char* kTitles[13] = {"",
                           "group laws",
                           "cocycle axioms and inequivalence witnesses",
                           "matrix model and structure constants",
                           "master-equation factorization",
                           "coadjoint action and orbit geometry",
                           "grid representations",
                           "generator bracket tables",
                           "resolution of the identity",
                           "coherent-state quantization",
                           "commutative limit",
                           "phase-space region operators",
                           "operator-space bridge"};

}  // namespace

int main() {
  const char* suites[] = {"group",      "matrix",   "coadjoint", "rep", "generators",
                          "resolution", "quantize", "pov",       "wigner"};
  // criterion -> suite whose wall time it bounds
  std::map<int, std::pair<std::string, double>> runtime_clauses = {
      {1, {"group", 2.0}}, {6, {"rep", 30.0}}, {8, {"resolution", 60.0}},
      {9, {"quantize", 600.0}}};

  std::map<int, CriterionState> criteria;
  for (int c = 1; c <= 12; ++c) criteria[c] = CriterionState{};

  ncqm_config* cfg = ncqm_config_create();
  const auto dir = std::filesystem::temp_directory_path() / "ncqm_acceptance";
  std::filesystem::create_directories(dir);

  std::map<std::string, double> suite_seconds;
  for (const char* suite : suites) {
    const std::string path = (dir / (std::string(suite) + ".json")).string();
    const auto start = std::chrono::steady_clock::now();
    int checks = 0, failed = 0;
    const int rc = ncqm_run_suite(cfg, suite, path.c_str(), &checks, &failed);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    suite_seconds[suite] = secs;
    if (rc != NCQM_OK) {
      std::fprintf(stderr, "suite %s failed to run: %s\n", suite, ncqm_last_error());
      ncqm_config_destroy(cfg);
      return 2;
    }
    std::printf("suite %-11s %3d checks, %d failed, %.1f s\n", suite, checks, failed, secs);

    std::ifstream in(path);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const auto j = nlohmann::json::parse(line);
      const int crit = j.value("criterion", 0);
      if (crit < 1 || crit > 12) continue;
      auto& st = criteria[crit];
      st.checks += 1;
      if (!j.value("pass", false)) st.failed += 1;
    }
  }
  ncqm_config_destroy(cfg);

  for (auto& [crit, clause] : runtime_clauses) {
    auto& st = criteria[crit];
    st.runtime_limit = clause.second;
    st.runtime = suite_seconds[clause.first];
    st.runtime_ok = st.runtime < st.runtime_limit;
  }

  std::puts("");
  bool all_ok = true;
  for (int c = 1; c <= 12; ++c) {
    const auto& st = criteria[c];
    const bool ok = st.failed == 0 && st.checks > 0 && st.runtime_ok;
    all_ok = all_ok && ok;
    std::printf("criterion %2d  %-44s %s  (%d checks", c, kTitles[c], ok ? "PASS" : "FAIL",
                st.checks);
    if (st.failed) std::printf(", %d failed", st.failed);
    if (st.runtime_limit > 0.0)
      std::printf("; %.1f s %s %.0f s", st.runtime, st.runtime_ok ? "<" : ">=",
                  st.runtime_limit);
    std::printf(")\n");
  }
  std::printf("\nacceptance: %s\n", all_ok ? "ALL CRITERIA PASS" : "FAILURES PRESENT");
  return all_ok ? 0 : 1;
}
