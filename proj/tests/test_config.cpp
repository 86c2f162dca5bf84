#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "ncqm/config.hpp"
#include "ncqm/suites.hpp"

using namespace ncqm;

TEST_CASE("defaults and validation") {
  cfg::RunConfig c;
  c.finalize();
  CHECK(c.m == 1.0);
  CHECK(c.lambda == 0.5);
  CHECK(c.grid_n == 128);
  CHECK(c.phase_n == 24);

  cfg::RunConfig bad;
  cfg::apply_key_value(bad, "m", "-1");
  CHECK_THROWS_WITH_AS(bad.finalize(), "config: m must be positive", std::invalid_argument);

  cfg::RunConfig badn;
  cfg::apply_key_value(badn, "grid_n", "100");
  CHECK_THROWS_AS(badn.finalize(), std::invalid_argument);

  CHECK_THROWS_AS(cfg::apply_key_value(bad, "no_such_key", "1"), std::invalid_argument);
  CHECK_THROWS_AS(cfg::apply_key_value(bad, "m", "abc"), std::invalid_argument);
  CHECK_THROWS_AS(cfg::apply_key_value(bad, "m", "1.5junk"), std::invalid_argument);
}

TEST_CASE("theta sets lambda through the mass") {
  cfg::RunConfig c;
  cfg::apply_key_value(c, "theta", "0.3");
  cfg::apply_key_value(c, "m", "2");
  c.finalize();
  CHECK(c.lambda == doctest::Approx(1.2).epsilon(1e-15));

  cfg::RunConfig both;
  cfg::apply_key_value(both, "theta", "0.3");
  cfg::apply_key_value(both, "lambda", "0.5");
  CHECK_THROWS_AS(both.finalize(), std::invalid_argument);
}

TEST_CASE("config files parse key = value lines with comments") {
  const auto path = std::filesystem::temp_directory_path() / "ncqm_cfg_test.cfg";
  {
    std::ofstream out(path);
    out << "# sample configuration\n"
        << "m = 2.0\n"
        << "lambda = 1.0   # overridden comment\n"
        << "grid_n = 64\n"
        << "fast = true\n";
  }
  auto c = cfg::parse_config_file(path.string());
  CHECK(c.m == 2.0);
  CHECK(c.lambda == 1.0);
  CHECK(c.grid_n == 64);
  CHECK(c.fast);
  // later assignments override the file, mirroring flag handling
  cfg::apply_key_value(c, "grid_n", "32");
  CHECK(c.grid_n == 32);
  std::filesystem::remove(path);

  CHECK_THROWS_AS(cfg::parse_config_file("/nonexistent.cfg"), std::invalid_argument);
}

TEST_CASE("reports are deterministic apart from the header timing") {
  cfg::RunConfig c;
  c.finalize();
  const auto r1 = suite::run_suite("group", c);
  const auto r2 = suite::run_suite("group", c);
  std::ostringstream s1, s2;
  suite::write_report(r1, s1);
  suite::write_report(r2, s2);
  auto strip_header = [](const std::string& text) {
    return text.substr(text.find('\n') + 1);
  };
  CHECK(strip_header(s1.str()) == strip_header(s2.str()));
  CHECK(r1.all_pass());
}

TEST_CASE("unknown suites are rejected") {
  cfg::RunConfig c;
  c.finalize();
  CHECK_THROWS_AS(suite::run_suite("bogus", c), std::invalid_argument);
  CHECK(suite::is_suite_name("all"));
  CHECK(suite::is_suite_name("quantize"));
  CHECK(!suite::is_suite_name("quantise"));
}
