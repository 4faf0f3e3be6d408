#pragma once

#include <Eigen/Core>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gaugering {

template <typename Scalar>
inline constexpr Scalar kPi = std::numbers::pi_v<Scalar>;

template <typename Scalar>
inline constexpr Scalar kTwoPi = 2 * std::numbers::pi_v<Scalar>;

inline bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

/// Left-closed uniform grid x_j = -pi + 2 pi j / n on [-pi, pi).
template <typename Scalar = double>
Eigen::Array<Scalar, Eigen::Dynamic, 1> uniform_grid(Eigen::Index n) {
  if (n <= 0) throw std::invalid_argument("uniform_grid: size must be positive");
  Eigen::Array<Scalar, Eigen::Dynamic, 1> x(n);
  for (Eigen::Index j = 0; j < n; ++j)
    x[j] = -kPi<Scalar> + kTwoPi<Scalar> * Scalar(j) / Scalar(n);
  return x;
}

/// Maps an angle into [-pi, pi).
template <typename Scalar>
Scalar wrap_angle(Scalar x) {
  Scalar y = std::fmod(x + kPi<Scalar>, kTwoPi<Scalar>);
  if (y < 0) y += kTwoPi<Scalar>;
  return y - kPi<Scalar>;
}

/// Trapezoidal rule for a 2 pi periodic function on the uniform grid.
/// Exact for trigonometric polynomials of degree < n.
template <typename Scalar = double, typename F>
Scalar periodic_trapezoid(F&& f, Eigen::Index n) {
  const auto x = uniform_grid<Scalar>(n);
  Scalar sum = 0;
  for (Eigen::Index j = 0; j < n; ++j) sum += f(x[j]);
  return sum * kTwoPi<Scalar> / Scalar(n);
}

}  // namespace gaugering
