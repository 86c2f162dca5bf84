#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ncqm/config.hpp"

namespace ncqm::suite {

/// One verification record. Pass rule: |measured - expected| <= tolerance,
/// or measured >= tolerance when ge is set (threshold checks).
struct CheckRecord {
  std::string id;
  std::string ref;       // short description of what the check pins down, or "plumbing"
  int criterion = 0;     // acceptance criterion number, 0 when not part of one
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  bool ge = false;
  bool pass = false;
  std::string note;
};

struct Report {
  std::string suite;
  cfg::RunConfig config;
  std::vector<CheckRecord> records;
  /// Pre-serialized JSON detail lines (per-probe operator measurements).
  std::vector<std::string> detail_records;
  double elapsed_seconds = 0.0;  // header-only; excluded from determinism

  int failed() const;
  bool all_pass() const { return failed() == 0; }
};

const std::vector<std::string>& suite_names();  // includes "all"
bool is_suite_name(const std::string& name);

/// Runs one suite (or every suite for "all") with the given configuration.
/// The configuration must be finalized.
Report run_suite(const std::string& name, const cfg::RunConfig& cfg);

/// Line-delimited JSON: one header object, then one object per record.
/// Only the header's timestamp and elapsed_seconds fields vary across
/// identical runs.
void write_report(const Report& report, std::ostream& os);
void write_report_file(const Report& report, const std::string& path);

}  // namespace ncqm::suite
