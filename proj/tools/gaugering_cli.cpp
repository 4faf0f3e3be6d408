#include "gaugering/io/commands.hpp"
#include "gaugering/io/config.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace io = gaugering::io;

int main(int argc, char** argv) {
  CLI::App app{"Two particles on a ring coupled through a long-range gauge potential"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> settings;
  std::optional<int> q;
  std::optional<std::string> kappa, out_dir, format;
  io::CommandOptions options;
  std::string state_path, input_path;

  const std::vector<std::pair<std::string, std::string>> commands{
      {"spectrum", "lowest energy per momentum sector across a kappa grid"},
      {"ground", "ground state at one kappa: relative profile and state file"},
      {"density2d", "two-body density |Psi(theta1, theta2)|^2 on a grid"},
      {"measure", "conditional state of particle 2 after detecting particle 1"},
      {"evolve", "free evolution of a measured wavefunction"},
      {"uncertainty", "binned phasor statistics of ground states across kappa"},
      {"potential", "effective potential profile and its wells"},
      {"validate", "run the built-in analytic checks"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("-c,--config", config_path, "key = value configuration file");
    sub->add_option("-s,--set", settings, "override a configuration key, e.g. measurement.n=50");
    sub->add_option("--q", q, "range exponent q");
    sub->add_option("--kappa", kappa, "single coupling value (accepts multiples of pi, e.g. 2pi)");
    sub->add_option("-o,--out", out_dir, "output directory");
    sub->add_option("--format", format, "csv or json");
    sub->add_flag("--gnuplot", options.gnuplot, "also write companion gnuplot scripts");
    if (name == "density2d" || name == "measure")
      sub->add_option("--state", state_path, "relative state JSON written by `ground`");
    if (name == "evolve") sub->add_option("-i,--input", input_path, "wavefunction JSON written by `measure`");
    if (name == "potential") sub->add_option("--p", options.potential_p, "centre-of-mass momentum sector");
    if (name == "validate")
      sub->add_option("--perturb-hamiltonian", options.hamiltonian_perturbation)->group("");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : io::kExitInvalidConfig;
  }

  io::RunConfig config;
  if (!config_path.empty() && !std::filesystem::exists(config_path)) {
    std::cerr << "missing input: config file '" << config_path << "' not found\n";
    return io::kExitMissingInput;
  }
  try {
    if (!config_path.empty()) config = io::load_config(config_path);
    for (const auto& s : settings) {
      const auto eq = s.find('=');
      if (eq == std::string::npos) throw io::ConfigError("--set expects key=value, got '" + s + "'");
      io::apply_setting(config, s.substr(0, eq), s.substr(eq + 1));
    }
    if (q) config.q = *q;
    if (kappa) io::apply_setting(config, "kappa", *kappa);
    if (out_dir) config.output.directory = *out_dir;
    if (format) config.output.format = *format;
  } catch (const io::ConfigError& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return io::kExitInvalidConfig;
  }
  if (!state_path.empty()) options.state_path = state_path;
  if (!input_path.empty()) options.input_path = input_path;

  const std::string name = app.get_subcommands().front()->get_name();
  return io::run_command(name, config, options, std::cout, std::cerr);
}
