#pragma once

#include "gaugering/momentum_sector.hpp"

#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gaugering::io {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// count evenly spaced values from start to stop inclusive.
struct KappaGrid {
  double start = 0.0;
  double stop = 2 * std::numbers::pi;
  int count = 101;

  std::vector<double> values() const;
  friend bool operator==(const KappaGrid&, const KappaGrid&) = default;
};

struct RunConfig {
  int q = 1;
  KappaGrid kappa;
  int p_min = -6;
  int p_max = 6;
  SectorSet sectors = SectorSet::even;
  int n_basis = 0;  ///< 0: max(129, 8q + 1)
  int n_grid = 256;

  struct Measurement {
    int n = 1;  ///< 0: perfect measurement
    double theta0 = 0.0;
    friend bool operator==(const Measurement&, const Measurement&) = default;
  } measurement;

  struct Evolve {
    double t_max = 2 * std::numbers::pi;
    int frames = 101;
    friend bool operator==(const Evolve&, const Evolve&) = default;
  } evolve;

  struct Partition {
    int n_bins = 64;
    friend bool operator==(const Partition&, const Partition&) = default;
  } partition;

  struct Output {
    std::string directory = ".";
    std::string format = "csv";
    friend bool operator==(const Output&, const Output&) = default;
  } output;

  int basis_size() const;
  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Sets one dotted key, e.g. "measurement.n" = "50". Throws ConfigError.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

/// Parses "key = value" lines; '#' starts a comment.
RunConfig parse_config(std::string_view text, RunConfig base = {});
RunConfig load_config(const std::string& path, RunConfig base = {});

/// Ordered (key, value) pairs; values use 17 significant digits.
std::vector<std::pair<std::string, std::string>> config_entries(const RunConfig& config);
std::string serialize_config(const RunConfig& config);

/// Throws ConfigError when a field is out of range.
void validate_config(const RunConfig& config);

std::string format_double(double value);
double parse_double(std::string_view text);

}  // namespace gaugering::io
