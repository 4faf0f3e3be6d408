#pragma once

#include "gaugering/errors.hpp"
#include "gaugering/grid.hpp"

#include <Eigen/Core>
#include <unsupported/Eigen/FFT>

#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gaugering {

/// Single-particle amplitudes on the left-closed uniform grid over [-pi, pi).
/// The Fourier view uses psi(theta) = sum_m c_m e^{i m theta} / sqrt(2 pi),
/// so the trapezoidal norm equals sum |c_m|^2.
template <typename Scalar = double>
class RingWavefunction {
 public:
  using Complex = std::complex<Scalar>;
  using Values = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

  explicit RingWavefunction(Values values) : values_(std::move(values)) {
    if (!is_power_of_two(values_.size()))
      throw std::invalid_argument("RingWavefunction: grid size must be a power of two");
  }

  /// Builds grid values from Fourier coefficients indexed by FFT bin.
  static RingWavefunction from_fourier(const Values& coefficients) {
    const Eigen::Index n = coefficients.size();
    if (!is_power_of_two(n)) throw std::invalid_argument("RingWavefunction: grid size must be a power of two");
    std::vector<Complex> bins(n), out;
    const Scalar scale = Scalar(n) / std::sqrt(kTwoPi<Scalar>);
    for (Eigen::Index b = 0; b < n; ++b) bins[b] = coefficients[b] * scale * alternating(mode_of_bin(b, n));
    Eigen::FFT<Scalar> fft;
    fft.inv(out, bins);
    return RingWavefunction(Eigen::Map<Values>(out.data(), n));
  }

  /// Signed mode m represented by FFT bin b; bin n/2 maps to -n/2.
  static int mode_of_bin(Eigen::Index b, Eigen::Index n) { return static_cast<int>(b < n / 2 ? b : b - n); }
  static Eigen::Index bin_of_mode(int m, Eigen::Index n) {
    if (m < -n / 2 || m >= n / 2) throw std::out_of_range("RingWavefunction: mode not representable on grid");
    return m >= 0 ? m : m + n;
  }

  Eigen::Index size() const { return values_.size(); }
  Scalar spacing() const { return kTwoPi<Scalar> / Scalar(size()); }
  Scalar theta(Eigen::Index j) const { return -kPi<Scalar> + spacing() * Scalar(j); }
  const Values& values() const { return values_; }
  Complex operator[](Eigen::Index j) const { return values_[j]; }

  Eigen::Array<Scalar, Eigen::Dynamic, 1> density() const { return values_.array().abs2(); }
  Scalar norm() const { return std::sqrt(values_.squaredNorm() * spacing()); }

  /// Scales to unit norm and returns the norm before scaling.
  Scalar normalize() {
    const Scalar n = norm();
    if (!(n >= Scalar(1e-12))) throw NormCollapseError("RingWavefunction: norm too small to normalize", double(n));
    values_ /= n;
    return n;
  }

  /// Coefficients c_m indexed by FFT bin (see mode_of_bin).
  Values fourier_coefficients() const {
    const Eigen::Index n = size();
    std::vector<Complex> in(values_.data(), values_.data() + n), bins;
    Eigen::FFT<Scalar> fft;
    fft.fwd(bins, in);
    Values c(n);
    const Scalar scale = std::sqrt(kTwoPi<Scalar>) / Scalar(n);
    for (Eigen::Index b = 0; b < n; ++b) c[b] = bins[b] * scale * alternating(mode_of_bin(b, n));
    return c;
  }

 private:
  // (-1)^m from shifting the grid origin to -pi.
  static Scalar alternating(int m) { return (m % 2 == 0) ? Scalar(1) : Scalar(-1); }

  Values values_;
};

}  // namespace gaugering
