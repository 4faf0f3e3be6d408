#pragma once

#include "gaugering/parallel.hpp"
#include "gaugering/ring_wavefunction.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

namespace gaugering {

/// Free evolution i d/dt psi = -(1/2) d^2/dtheta^2 psi, applied exactly in
/// the Fourier representation: mode m picks up e^{-i m^2 t / 2}.
template <typename Scalar>
RingWavefunction<Scalar> propagate(const RingWavefunction<Scalar>& psi, Scalar t) {
  using RW = RingWavefunction<Scalar>;
  auto c = psi.fourier_coefficients();
  const Eigen::Index n = c.size();
  for (Eigen::Index b = 0; b < n; ++b) {
    const Scalar m = Scalar(RW::mode_of_bin(b, n));
    // m^2 t / 2 reduced modulo 2 pi before forming the phase
    const Scalar angle = std::fmod(m * m * (t / 2), kTwoPi<Scalar>);
    c[b] *= std::polar(Scalar(1), -angle);
  }
  return RW::from_fourier(c);
}

/// Phi(theta, t) = C0 cos(m theta - l t) e^{i(l theta - (m^2 + l^2) t / 2)}.
/// Travels rigidly at angular velocity l/m. Solves the free equation above
/// exactly only for m = 1.
template <typename Scalar = double>
struct QinSolution {
  int m;
  int ell;

  QinSolution(int m_, int ell_) : m(m_), ell(ell_) {
    if (m < 1) throw std::invalid_argument("QinSolution: m must be >= 1");
  }

  Scalar amplitude() const { return Scalar(1) / std::sqrt(kPi<Scalar>); }
  Scalar velocity() const { return Scalar(ell) / Scalar(m); }

  std::complex<Scalar> operator()(Scalar theta, Scalar t) const {
    const Scalar envelope = amplitude() * std::cos(Scalar(m) * theta - Scalar(ell) * t);
    const Scalar phase = Scalar(ell) * theta - Scalar(m * m + ell * ell) * t / 2;
    return envelope * std::polar(Scalar(1), phase);
  }
};

template <typename Scalar>
RingWavefunction<Scalar> qin_reference(int m, int ell, Eigen::Index n, Scalar t) {
  const QinSolution<Scalar> phi(m, ell);
  typename RingWavefunction<Scalar>::Values values(n);
  const auto theta = uniform_grid<Scalar>(n);
  for (Eigen::Index j = 0; j < n; ++j) values[j] = phi(theta[j], t);
  RingWavefunction<Scalar> psi(std::move(values));
  psi.normalize();
  return psi;
}

template <typename Scalar = double>
struct Diagnostics {
  std::optional<Scalar> circular_mean;  ///< undefined when the resultant vanishes
  Scalar resultant_length;              ///< |<e^{i theta}>|
  Scalar circular_variance;             ///< 1 - resultant_length
  Scalar angular_momentum;              ///< <-i d/dtheta>
  Scalar kinetic;                       ///< sum m^2 |c_m|^2
};

template <typename Scalar>
Diagnostics<Scalar> dispersion_diagnostics(const RingWavefunction<Scalar>& psi) {
  using RW = RingWavefunction<Scalar>;
  const auto rho = psi.density();
  const Scalar h = psi.spacing();
  std::complex<Scalar> resultant = 0;
  for (Eigen::Index j = 0; j < psi.size(); ++j) resultant += rho[j] * h * std::polar(Scalar(1), psi.theta(j));
  Diagnostics<Scalar> d;
  d.resultant_length = std::abs(resultant);
  d.circular_variance = 1 - d.resultant_length;
  if (d.resultant_length >= Scalar(1e-12)) d.circular_mean = std::arg(resultant);

  const auto c = psi.fourier_coefficients();
  d.angular_momentum = 0;
  d.kinetic = 0;
  for (Eigen::Index b = 0; b < c.size(); ++b) {
    const Scalar m = Scalar(RW::mode_of_bin(b, c.size()));
    d.angular_momentum += m * std::norm(c[b]);
    d.kinetic += m * m * std::norm(c[b]);
  }
  return d;
}

template <typename Scalar = double>
struct Frame {
  Scalar t;
  Eigen::Array<Scalar, Eigen::Dynamic, 1> density;
  Diagnostics<Scalar> diagnostics;
};

/// Frames at t_i = t_max i / (frames - 1), each propagated directly from t = 0.
template <typename Scalar>
std::vector<Frame<Scalar>> evolve_and_record(const RingWavefunction<Scalar>& psi0, Scalar t_max, int frames) {
  if (frames < 2) throw std::invalid_argument("evolve_and_record: need at least two frames");
  return parallel_map(static_cast<std::size_t>(frames), [&](std::size_t i) {
    const Scalar t = t_max * Scalar(i) / Scalar(frames - 1);
    const auto psi = propagate(psi0, t);
    return Frame<Scalar>{t, psi.density(), dispersion_diagnostics(psi)};
  });
}

}  // namespace gaugering
