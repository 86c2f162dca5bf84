#include "ncqm/config.hpp"

#include <fstream>
#include <stdexcept>

namespace ncqm::cfg {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  size_t pos = 0;
  double v;
  try {
    v = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad numeric value for " + key + ": '" + value + "'");
  }
  if (pos != value.size())
    throw std::invalid_argument("config: trailing junk in value for " + key);
  return v;
}

long long parse_int(const std::string& key, const std::string& value) {
  size_t pos = 0;
  long long v;
  try {
    v = std::stoll(value, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad integer value for " + key + ": '" + value + "'");
  }
  if (pos != value.size())
    throw std::invalid_argument("config: trailing junk in value for " + key);
  return v;
}

}  // namespace

void RunConfig::finalize() {
  if (theta_override) {
    if (lambda_explicit)
      throw std::invalid_argument("config: set either lambda or theta, not both");
    lambda = *theta_override * m * m;
  }
  if (!(m > 0.0)) throw std::invalid_argument("config: m must be positive");
  if (grid_n < 8 || (grid_n & (grid_n - 1)) != 0)
    throw std::invalid_argument("config: grid_n must be a power of two >= 8");
  if (!(grid_l > 0.0)) throw std::invalid_argument("config: grid_l must be positive");
  if (phase_n < 2) throw std::invalid_argument("config: phase_n must be >= 2");
  if (!(phase_l > 0.0)) throw std::invalid_argument("config: phase_l must be positive");
}

void apply_key_value(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "m") {
    cfg.m = parse_double(key, value);
  } else if (key == "lambda") {
    cfg.lambda = parse_double(key, value);
    cfg.lambda_explicit = true;
  } else if (key == "theta") {
    cfg.theta_override = parse_double(key, value);
  } else if (key == "alpha") {
    cfg.alpha = parse_double(key, value);
  } else if (key == "beta") {
    cfg.beta = parse_double(key, value);
  } else if (key == "gamma") {
    cfg.gamma = parse_double(key, value);
  } else if (key == "grid_n") {
    cfg.grid_n = static_cast<int>(parse_int(key, value));
  } else if (key == "grid_l") {
    cfg.grid_l = parse_double(key, value);
  } else if (key == "phase_n") {
    cfg.phase_n = static_cast<int>(parse_int(key, value));
  } else if (key == "phase_l") {
    cfg.phase_l = parse_double(key, value);
  } else if (key == "seed") {
    cfg.seed = static_cast<std::uint64_t>(parse_int(key, value));
  } else if (key == "fast") {
    if (value == "true" || value == "1")
      cfg.fast = true;
    else if (value == "false" || value == "0")
      cfg.fast = false;
    else
      throw std::invalid_argument("config: fast must be true/false");
  } else if (key == "out") {
    cfg.out = value;
  } else if (key == "dump_dir") {
    cfg.dump_dir = value;
  } else {
    throw std::invalid_argument("config: unknown key '" + key + "'");
  }
}

RunConfig parse_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                  " is not a key = value assignment");
    apply_key_value(base, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return base;
}

}  // namespace ncqm::cfg
