#pragma once

#include "gaugering/eigensolver.hpp"
#include "gaugering/ring_wavefunction.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gaugering::io {

class MissingInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FormatVersionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Metadata = std::vector<std::pair<std::string, std::string>>;

/// {version, grid: {n, theta0, dtheta}, amplitudes: [[re, im], ...], metadata}
std::string wavefunction_to_json(const RingWavefunction<double>& psi, const Metadata& metadata = {});
RingWavefunction<double> wavefunction_from_json(const std::string& text);

/// {version, kind, q, kappa, p, energy, wavenumbers, amplitudes, metadata}
std::string relative_state_to_json(const RelativeEigenstate<double>& state, const Metadata& metadata = {});
RelativeEigenstate<double> relative_state_from_json(const std::string& text);

/// Reads a whole file; throws MissingInputError.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace gaugering::io
