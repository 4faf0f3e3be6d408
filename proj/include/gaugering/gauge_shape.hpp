#pragma once

#include "gaugering/cosine_power.hpp"

#include <Eigen/Core>

namespace gaugering {

/// Long-range gauge profile kappa * delta(x), delta(x) = Q cos^{2q}(x/2).
template <typename Scalar = double>
class GaugeShape {
 public:
  GaugeShape(int range_exponent, Scalar kappa) : profile_(range_exponent), kappa_(kappa) {}

  int range_exponent() const { return profile_.exponent(); }
  Scalar kappa() const { return kappa_; }
  Scalar normalization() const { return profile_.normalization(); }

  /// delta(x), unit integral over [-pi, pi).
  Scalar delta(Scalar x) const { return profile_(x); }

  /// Fourier coefficient of delta for e^{imx}.
  Scalar delta_coefficient(int m) const { return profile_.coefficient(m); }
  const Eigen::Array<Scalar, Eigen::Dynamic, 1>& delta_coefficients() const {
    return profile_.coefficients();
  }

  const CosinePowerProfile<Scalar>& profile() const { return profile_; }

 private:
  CosinePowerProfile<Scalar> profile_;
  Scalar kappa_;
};

/// Coefficients c_0..c_q of delta(x) = sum_m c_m e^{imx}; c_{-m} = c_m.
template <typename Scalar = double>
Eigen::Array<Scalar, Eigen::Dynamic, 1> gauge_fourier_coefficients(int q) {
  return cosine_power_coefficients<Scalar>(q);
}

}  // namespace gaugering
