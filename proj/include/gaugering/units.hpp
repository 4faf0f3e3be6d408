#pragma once

#include <string_view>

namespace gaugering {

// Every number in this library is dimensionless. Lengths are measured in
// units of the ring radius R. The two-body problem uses the time unit
// 2 m R^2 / hbar, in which the relative Hamiltonian is -d^2/dx^2 + V_eff.
// Single-particle propagation after a measurement uses m R^2 / hbar, in
// which i d/dt psi = -(1/2) d^2/dtheta^2 psi. One single-particle time unit
// equals half a two-body time unit.
struct ModelUnits {
  static constexpr std::string_view length_unit = "R";
  static constexpr std::string_view time_unit_two_body = "2 m R^2 / hbar";
  static constexpr std::string_view time_unit_single = "m R^2 / hbar";

  static constexpr double single_time_per_two_body_time = 2.0;
};

}  // namespace gaugering
