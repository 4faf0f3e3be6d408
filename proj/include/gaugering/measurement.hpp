#pragma once

#include "gaugering/cosine_power.hpp"
#include "gaugering/ring_wavefunction.hpp"
#include "gaugering/two_body_state.hpp"

#include <cstdlib>
#include <stdexcept>

namespace gaugering {

/// Detector response G_n(theta - center) = N_n cos^{2n}((theta - center)/2).
template <typename Scalar = double>
class MeasurementKernel {
 public:
  MeasurementKernel(int sharpness, Scalar center) : profile_(sharpness), center_(center) {}

  int sharpness() const { return profile_.exponent(); }
  Scalar center() const { return center_; }
  Scalar operator()(Scalar theta) const { return profile_(theta - center_); }
  /// Fourier coefficient g_m of G_n about its own centre.
  Scalar coefficient(int m) const { return profile_.coefficient(m); }
  const CosinePowerProfile<Scalar>& profile() const { return profile_; }

 private:
  CosinePowerProfile<Scalar> profile_;
  Scalar center_;
};

template <typename Scalar = double>
struct MeasurementOutcome {
  RingWavefunction<Scalar> wavefunction;  ///< unit norm
  Scalar detection_norm;                  ///< L2 norm before renormalization
};

namespace detail {

template <typename Scalar>
MeasurementOutcome<Scalar> renormalized(RingWavefunction<Scalar> psi, const char* who) {
  const Scalar norm = psi.norm();
  if (!(norm >= Scalar(1e-12)))
    throw NormCollapseError(std::string(who) + ": conditional state has vanishing norm", double(norm));
  psi.normalize();
  return {std::move(psi), norm};
}

}  // namespace detail

/// Sharp detection of particle 1 at theta1 = center: psi(theta2) = Psi(center, theta2).
template <typename Scalar>
MeasurementOutcome<Scalar> measure_perfect(const TwoBodyState<Scalar>& state, Scalar center, Eigen::Index n) {
  typename RingWavefunction<Scalar>::Values values(n);
  const auto theta = uniform_grid<Scalar>(n);
  for (Eigen::Index j = 0; j < n; ++j) values[j] = state(center, theta[j]);
  return detail::renormalized(RingWavefunction<Scalar>(std::move(values)), "measure_perfect");
}

/// psi(theta2) = int G(theta1 - center) Psi(theta1, theta2) dtheta1, taken mode
/// by mode: each e^{i m1 theta1} contributes 2 pi g_{m1} e^{i m1 center}.
template <typename Scalar>
MeasurementOutcome<Scalar> measure_imperfect(const TwoBodyState<Scalar>& state, const MeasurementKernel<Scalar>& kernel,
                                             Eigen::Index n) {
  using Complex = std::complex<Scalar>;
  if (!is_power_of_two(n)) throw std::invalid_argument("measure_imperfect: grid size must be a power of two");
  typename RingWavefunction<Scalar>::Values coefficients = RingWavefunction<Scalar>::Values::Zero(n);
  const Scalar to_ring = std::sqrt(kTwoPi<Scalar>);
  for (const auto& mode : state.modes()) {
    const Scalar g = kernel.coefficient(mode.first);
    if (g == 0) continue;
    if (mode.second < -n / 2 || mode.second >= n / 2)
      throw std::invalid_argument("measure_imperfect: kernel passes modes beyond the grid bandwidth");
    const Complex weight = kTwoPi<Scalar> * g * std::polar(Scalar(1), Scalar(mode.first) * kernel.center());
    coefficients[RingWavefunction<Scalar>::bin_of_mode(mode.second, n)] += to_ring * weight * mode.amplitude;
  }
  return detail::renormalized(RingWavefunction<Scalar>::from_fourier(coefficients), "measure_imperfect");
}

}  // namespace gaugering
