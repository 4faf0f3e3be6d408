#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gaugering::io {

struct ValidationCheck {
  std::string name;
  bool passed;
  double measured;   ///< error or quantity that was compared
  double threshold;
};

struct ValidationOptions {
  /// Added to the k = 0 diagonal entry of the p = 0 Hamiltonian in the kappa = pi
  /// degeneracy check. Test hook; zero in normal runs.
  double hamiltonian_perturbation = 0.0;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool passed() const;
};

/// Analytic identities across all modules: normalizations, degeneracy at
/// kappa = pi, short-range trend, free-propagation oracle, phasor identities.
ValidationReport run_validation(const ValidationOptions& options = {});

void print_report(std::ostream& out, const ValidationReport& report);

}  // namespace gaugering::io
