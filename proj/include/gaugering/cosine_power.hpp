#pragma once

#include "gaugering/grid.hpp"

#include <Eigen/Core>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace gaugering {

// The normalized family f_q(x) = N_q cos^{2q}(x/2) with unit integral over
// one period. Expanding cos^{2q}(x/2) = 4^{-q} sum_j C(2q, j) e^{i(q-j)x}
// gives the Fourier coefficients
//   c_m = N_q C(2q, q+m) / 4^q = (q!)^2 / (2 pi (q+m)! (q-m)!),   |m| <= q,
// so c_0 = 1/(2 pi) for every q. Everything is computed through lgamma.

template <typename Scalar>
Scalar log_cosine_power_normalization(int q) {
  using std::lgamma;
  using std::log;
  const Scalar qs(q);
  return qs * log(Scalar(4)) + 2 * lgamma(qs + 1) - log(kTwoPi<Scalar>) - lgamma(2 * qs + 1);
}

template <typename Scalar>
Scalar log_cosine_power_coefficient(int q, int m) {
  using std::lgamma;
  using std::log;
  return 2 * lgamma(Scalar(q) + 1) - lgamma(Scalar(q + m) + 1) - lgamma(Scalar(q - m) + 1) -
         log(kTwoPi<Scalar>);
}

/// Largest exponent whose outermost coefficient c_q is still a normal
/// floating point number.
template <typename Scalar>
int max_cosine_power_exponent() {
  const Scalar floor = std::log(std::numeric_limits<Scalar>::min());
  int lo = 1, hi = 1;
  while (log_cosine_power_coefficient<Scalar>(hi, hi) >= floor) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    if (log_cosine_power_coefficient<Scalar>(mid, mid) >= floor)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

template <typename Scalar>
void require_cosine_power_exponent(int q, const char* who) {
  if (q < 1) throw std::invalid_argument(std::string(who) + ": exponent must be >= 1");
  const int limit = max_cosine_power_exponent<Scalar>();
  if (q > limit)
    throw std::invalid_argument(std::string(who) + ": exponent " + std::to_string(q) +
                                " exceeds the representable limit " + std::to_string(limit));
}

/// One-sided coefficients c_0..c_q of the normalized cos^{2q}(x/2) profile.
template <typename Scalar = double>
Eigen::Array<Scalar, Eigen::Dynamic, 1> cosine_power_coefficients(int q) {
  require_cosine_power_exponent<Scalar>(q, "cosine_power_coefficients");
  Eigen::Array<Scalar, Eigen::Dynamic, 1> c(q + 1);
  for (int m = 0; m <= q; ++m) c[m] = std::exp(log_cosine_power_coefficient<Scalar>(q, m));
  return c;
}

/// N_q cos^{2q}(x/2), evaluated pointwise and as a cosine series.
template <typename Scalar = double>
class CosinePowerProfile {
 public:
  explicit CosinePowerProfile(int exponent)
      : exponent_(exponent),
        log_norm_((require_cosine_power_exponent<Scalar>(exponent, "CosinePowerProfile"),
                   log_cosine_power_normalization<Scalar>(exponent))),
        coefficients_(cosine_power_coefficients<Scalar>(exponent)) {}

  int exponent() const { return exponent_; }
  Scalar normalization() const { return std::exp(log_norm_); }
  Scalar log_normalization() const { return log_norm_; }
  const Eigen::Array<Scalar, Eigen::Dynamic, 1>& coefficients() const { return coefficients_; }

  /// Coefficient of e^{imx}; zero outside |m| <= q.
  Scalar coefficient(int m) const {
    const int a = m < 0 ? -m : m;
    return a > exponent_ ? Scalar(0) : coefficients_[a];
  }

  Scalar operator()(Scalar x) const {
    const Scalar c = std::abs(std::cos(x / 2));
    if (c == 0) return 0;
    return std::exp(log_norm_ + 2 * Scalar(exponent_) * std::log(c));
  }

  Scalar series(Scalar x) const {
    Scalar sum = coefficients_[0];
    for (int m = 1; m <= exponent_; ++m) sum += 2 * coefficients_[m] * std::cos(Scalar(m) * x);
    return sum;
  }

 private:
  int exponent_;
  Scalar log_norm_;
  Eigen::Array<Scalar, Eigen::Dynamic, 1> coefficients_;
};

}  // namespace gaugering
