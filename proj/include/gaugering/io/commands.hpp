#pragma once

#include "gaugering/io/config.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace gaugering::io {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitInvalidConfig = 2,
  kExitInconclusive = 3,
  kExitMissingInput = 4,
  kExitVersionMismatch = 5,
};

struct CommandOptions {
  std::optional<std::string> state_path;  ///< relative-state JSON written by `ground`
  std::optional<std::string> input_path;  ///< wavefunction JSON for `evolve`
  int potential_p = 0;                    ///< sector for `potential`
  bool gnuplot = false;
  double hamiltonian_perturbation = 0.0;  ///< `validate` test hook
};

// Each command writes its files under config.output.directory, prints a short
// summary to `out`, and returns an exit code. Errors propagate as exceptions;
// run_command maps them to exit codes.
int cmd_spectrum(const RunConfig& config, const CommandOptions& options, std::ostream& out);
int cmd_ground(const RunConfig& config, const CommandOptions& options, std::ostream& out);
int cmd_density2d(const RunConfig& config, const CommandOptions& options, std::ostream& out);
int cmd_measure(const RunConfig& config, const CommandOptions& options, std::ostream& out);
int cmd_evolve(const RunConfig& config, const CommandOptions& options, std::ostream& out);
int cmd_uncertainty(const RunConfig& config, const CommandOptions& options, std::ostream& out);
int cmd_potential(const RunConfig& config, const CommandOptions& options, std::ostream& out);
int cmd_validate(const RunConfig& config, const CommandOptions& options, std::ostream& out);

/// Dispatches by name, validates the config, maps exceptions to exit codes
/// and reports them on `err`.
int run_command(const std::string& name, const RunConfig& config, const CommandOptions& options, std::ostream& out,
                std::ostream& err);

}  // namespace gaugering::io
