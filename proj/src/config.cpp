#include "gaugering/io/config.hpp"

#include "gaugering/cosine_power.hpp"
#include "gaugering/plane_wave_basis.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace gaugering::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int parse_int(std::string_view text, std::string_view key) {
  text = trim(text);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ConfigError("invalid integer for " + std::string(key) + ": '" + std::string(text) + "'");
  return value;
}

double parse_number(std::string_view text, std::string_view key) {
  try {
    return parse_double(text);
  } catch (const ConfigError&) {
    throw ConfigError("invalid number for " + std::string(key) + ": '" + std::string(trim(text)) + "'");
  }
}

}  // namespace

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

// Accepts plain numbers and multiples of pi: "pi", "2pi", "-0.5*pi".
double parse_double(std::string_view text) {
  text = trim(text);
  double factor = 1.0;
  if (text.size() >= 2 && text.substr(text.size() - 2) == "pi") {
    factor = std::numbers::pi;
    text = trim(text.substr(0, text.size() - 2));
    if (!text.empty() && text.back() == '*') text = trim(text.substr(0, text.size() - 1));
    if (text.empty() || text == "+") return factor;
    if (text == "-") return -factor;
  }
  if (text.empty()) throw ConfigError("empty number");
  const std::string s(text);
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v))
    throw ConfigError("invalid number '" + s + "'");
  return v * factor;
}

std::vector<double> KappaGrid::values() const {
  std::vector<double> out;
  if (count <= 0) return out;
  if (count == 1) return {start};
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(start + (stop - start) * double(i) / double(count - 1));
  return out;
}

int RunConfig::basis_size() const { return n_basis > 0 ? n_basis : default_basis_size(q); }

void apply_setting(RunConfig& c, std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (key == "q") c.q = parse_int(value, key);
  else if (key == "kappa") {
    c.kappa.start = c.kappa.stop = parse_number(value, key);
    c.kappa.count = 1;
  }
  else if (key == "kappa.start") c.kappa.start = parse_number(value, key);
  else if (key == "kappa.stop") c.kappa.stop = parse_number(value, key);
  else if (key == "kappa.count") c.kappa.count = parse_int(value, key);
  else if (key == "p_range.min") c.p_min = parse_int(value, key);
  else if (key == "p_range.max") c.p_max = parse_int(value, key);
  else if (key == "p_range.sectors") {
    if (value == "even") c.sectors = SectorSet::even;
    else if (value == "all") c.sectors = SectorSet::all;
    else throw ConfigError("p_range.sectors must be 'even' or 'all'");
  }
  else if (key == "n_basis") c.n_basis = parse_int(value, key);
  else if (key == "n_grid") c.n_grid = parse_int(value, key);
  else if (key == "measurement.n") c.measurement.n = parse_int(value, key);
  else if (key == "measurement.theta0") c.measurement.theta0 = parse_number(value, key);
  else if (key == "evolve.t_max") c.evolve.t_max = parse_number(value, key);
  else if (key == "evolve.frames") c.evolve.frames = parse_int(value, key);
  else if (key == "partition.n_bins") c.partition.n_bins = parse_int(value, key);
  else if (key == "output.directory") c.output.directory = std::string(value);
  else if (key == "output.format") c.output.format = std::string(value);
  else throw ConfigError("unknown configuration key '" + std::string(key) + "'");
}

RunConfig parse_config(std::string_view text, RunConfig base) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    apply_setting(base, line.substr(0, eq), line.substr(eq + 1));
  }
  return base;
}

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), std::move(base));
}

std::vector<std::pair<std::string, std::string>> config_entries(const RunConfig& c) {
  return {
      {"q", std::to_string(c.q)},
      {"kappa.start", format_double(c.kappa.start)},
      {"kappa.stop", format_double(c.kappa.stop)},
      {"kappa.count", std::to_string(c.kappa.count)},
      {"p_range.min", std::to_string(c.p_min)},
      {"p_range.max", std::to_string(c.p_max)},
      {"p_range.sectors", c.sectors == SectorSet::even ? "even" : "all"},
      {"n_basis", std::to_string(c.n_basis)},
      {"n_grid", std::to_string(c.n_grid)},
      {"measurement.n", std::to_string(c.measurement.n)},
      {"measurement.theta0", format_double(c.measurement.theta0)},
      {"evolve.t_max", format_double(c.evolve.t_max)},
      {"evolve.frames", std::to_string(c.evolve.frames)},
      {"partition.n_bins", std::to_string(c.partition.n_bins)},
      {"output.directory", c.output.directory},
      {"output.format", c.output.format},
  };
}

std::string serialize_config(const RunConfig& c) {
  std::string out;
  for (const auto& [k, v] : config_entries(c)) out += k + " = " + v + "\n";
  return out;
}

void validate_config(const RunConfig& c) {
  if (c.q < 1) throw ConfigError("q must be >= 1");
  if (c.q > max_cosine_power_exponent<double>())
    throw ConfigError("q exceeds the representable limit " + std::to_string(max_cosine_power_exponent<double>()));
  if (c.kappa.count < 1) throw ConfigError("kappa grid is empty");
  if (c.p_min > c.p_max) throw ConfigError("p_range.min exceeds p_range.max");
  if (c.n_basis < 0) throw ConfigError("n_basis must be >= 0");
  if (c.n_basis > 0 && c.n_basis < 4 * c.q + 1) throw ConfigError("n_basis must be at least 4q + 1");
  if (c.n_grid < 64 || (c.n_grid & (c.n_grid - 1)) != 0) throw ConfigError("n_grid must be a power of two >= 64");
  if (c.measurement.n < 0) throw ConfigError("measurement.n must be >= 0");
  if (c.measurement.n > max_cosine_power_exponent<double>())
    throw ConfigError("measurement.n exceeds the representable limit " +
                      std::to_string(max_cosine_power_exponent<double>()));
  if (c.evolve.frames < 2) throw ConfigError("evolve.frames must be >= 2");
  if (c.evolve.t_max < 0) throw ConfigError("evolve.t_max must be >= 0");
  if (c.partition.n_bins < 1) throw ConfigError("partition.n_bins must be >= 1");
  if (c.output.format != "csv" && c.output.format != "json") throw ConfigError("output.format must be csv or json");
}

}  // namespace gaugering::io
