#pragma once

#include "gaugering/eigensolver.hpp"

#include <Eigen/Core>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace gaugering {

/// Psi(theta1, theta2) = e^{ip(theta1+theta2)/2} phi(theta1 - theta2) / sqrt(2 pi),
/// optionally times a global complex factor.
template <typename Scalar = double>
class TwoBodyState {
 public:
  using Complex = std::complex<Scalar>;

  /// e^{i m1 theta1} e^{i m2 theta2} with integer m1, m2.
  struct ProductMode {
    int first;
    int second;
    Complex amplitude;
  };

  explicit TwoBodyState(RelativeEigenstate<Scalar> relative, Complex scale = Complex(1))
      : relative_(std::move(relative)), scale_(scale) {}

  const RelativeEigenstate<Scalar>& relative() const { return relative_; }
  MomentumSector sector() const { return relative_.sector(); }
  int momentum() const { return relative_.sector().p; }
  Complex scale() const { return scale_; }

  TwoBodyState scaled(Complex factor) const { return TwoBodyState(relative_, scale_ * factor); }

  Complex operator()(Scalar theta1, Scalar theta2) const {
    const Scalar com = Scalar(momentum()) * (theta1 + theta2) / 2;
    return scale_ * std::polar(Scalar(1), com) * relative_(theta1 - theta2) / std::sqrt(kTwoPi<Scalar>);
  }

  Scalar density(Scalar theta1, Scalar theta2) const {
    return std::norm(scale_) * relative_.density(theta1 - theta2) / kTwoPi<Scalar>;
  }

  /// Psi as a finite sum over product plane waves: m1 = p/2 + k, m2 = p/2 - k.
  std::vector<ProductMode> modes() const {
    const auto& basis = relative_.basis();
    std::vector<ProductMode> out;
    out.reserve(basis.size());
    const Scalar half_p = Scalar(momentum()) / 2;
    for (Eigen::Index i = 0; i < basis.size(); ++i) {
      const Scalar k = basis.wavenumber(i);
      out.push_back({static_cast<int>(std::lround(half_p + k)), static_cast<int>(std::lround(half_p - k)),
                     scale_ * relative_.amplitudes()[i] / kTwoPi<Scalar>});
    }
    return out;
  }

 private:
  RelativeEigenstate<Scalar> relative_;
  Complex scale_;
};

/// |Psi|^2 on an N x N grid; row i is theta1 = -pi + 2 pi i / N, column j is theta2.
template <typename Scalar>
DenseMatrix<Scalar> density_grid(const TwoBodyState<Scalar>& state, Eigen::Index n) {
  if (n < 64) throw std::invalid_argument("density_grid: N must be >= 64");
  const Scalar h = kTwoPi<Scalar> / Scalar(n);
  // theta1 - theta2 = (i - j) h, and |phi|^2 is 2 pi periodic.
  Eigen::Array<Scalar, Eigen::Dynamic, 1> along(n);
  for (Eigen::Index d = 0; d < n; ++d) along[d] = state.density(wrap_angle(Scalar(d) * h), Scalar(0));
  DenseMatrix<Scalar> rho(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) rho(i, j) = along[((i - j) % n + n) % n];
  return rho;
}

/// Integral over theta2 for each theta1 row (trapezoidal).
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> first_marginal(const DenseMatrix<Scalar>& rho) {
  return rho.rowwise().sum() * (kTwoPi<Scalar> / Scalar(rho.cols()));
}

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> second_marginal(const DenseMatrix<Scalar>& rho) {
  return rho.colwise().sum().transpose() * (kTwoPi<Scalar> / Scalar(rho.rows()));
}

template <typename Scalar = double>
struct RelativeProfile {
  Eigen::Array<Scalar, Eigen::Dynamic, 1> x;
  Eigen::Array<Scalar, Eigen::Dynamic, 1> density;  ///< |phi(x)|^2
};

template <typename Scalar>
RelativeProfile<Scalar> relative_density_profile(const TwoBodyState<Scalar>& state, Eigen::Index n) {
  if (n < 64) throw std::invalid_argument("relative_density_profile: N must be >= 64");
  RelativeProfile<Scalar> out{uniform_grid<Scalar>(n), {}};
  out.density.resize(n);
  const Scalar weight = std::norm(state.scale());
  for (Eigen::Index j = 0; j < n; ++j) out.density[j] = weight * state.relative().density(out.x[j]);
  return out;
}

enum class Correlation { correlated, anti_correlated, uncorrelated };

inline std::string_view to_string(Correlation c) {
  switch (c) {
    case Correlation::correlated: return "correlated";
    case Correlation::anti_correlated: return "anti-correlated";
    case Correlation::uncorrelated: return "uncorrelated";
  }
  return "?";
}

template <typename Scalar = double>
struct CorrelationReport {
  Correlation label;
  Scalar peak_location;  ///< |x*| in [0, pi]
  Scalar peak_to_trough;
};

/// Correlated when the relative density peaks at |x*| < pi/2, anti-correlated
/// otherwise; nearly flat densities (max/min < 1.05) are uncorrelated.
template <typename Scalar>
CorrelationReport<Scalar> classify_correlation(const TwoBodyState<Scalar>& state, Eigen::Index samples = 4096) {
  const auto profile = relative_density_profile(state, samples);
  const auto& d = profile.density;
  Eigen::Index top = 0;
  d.maxCoeff(&top);
  const Scalar ratio = d.maxCoeff() / d.minCoeff();

  const Eigen::Index n = d.size();
  const Scalar h = kTwoPi<Scalar> / Scalar(n);
  const Scalar l = d[(top + n - 1) % n], c = d[top], r = d[(top + 1) % n];
  Scalar x = profile.x[top];
  const Scalar denom = l - 2 * c + r;
  if (denom < 0) x += h * Scalar(0.5) * (l - r) / denom;
  const Scalar peak = std::abs(wrap_angle(x));

  Correlation label;
  if (ratio < Scalar(1.05))
    label = Correlation::uncorrelated;
  else
    label = peak < kPi<Scalar> / 2 ? Correlation::correlated : Correlation::anti_correlated;
  return {label, peak, ratio};
}

}  // namespace gaugering
