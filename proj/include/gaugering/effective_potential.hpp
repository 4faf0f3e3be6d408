#pragma once

#include "gaugering/gauge_shape.hpp"
#include "gaugering/grid.hpp"
#include "gaugering/momentum_sector.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace gaugering {

/// V_eff(x) = (p/2 + kappa delta(x))^2 held as an even trigonometric
/// polynomial of degree 2q. Only the non-negative harmonics are stored so
/// v_m = v_{-m} holds by construction.
template <typename Scalar = double>
class EffectivePotential {
 public:
  using Coefficients = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

  EffectivePotential(GaugeShape<Scalar> shape, MomentumSector sector)
      : shape_(std::move(shape)), sector_(sector) {
    const int q = shape_.range_exponent();
    const Scalar kappa = shape_.kappa();
    const Scalar half_p = Scalar(sector_.p) / 2;
    const auto& c = shape_.delta_coefficients();

    coefficients_ = Coefficients::Zero(2 * q + 1);
    coefficients_[0] = half_p * half_p;
    for (int m = 0; m <= q; ++m) coefficients_[m] += 2 * half_p * kappa * c[m];
    // (c * c)_m = sum_a c_a c_{m-a}, a in [m-q, q]
    for (int m = 0; m <= 2 * q; ++m) {
      Scalar conv = 0;
      for (int a = m - q; a <= q; ++a) conv += c[std::abs(a)] * c[std::abs(m - a)];
      coefficients_[m] += kappa * kappa * conv;
    }
  }

  const GaugeShape<Scalar>& shape() const { return shape_; }
  MomentumSector sector() const { return sector_; }
  int degree() const { return 2 * shape_.range_exponent(); }

  /// v_0..v_{2q}
  const Coefficients& coefficients() const { return coefficients_; }
  Scalar coefficient(int m) const {
    const int a = std::abs(m);
    return a > degree() ? Scalar(0) : coefficients_[a];
  }

  Scalar operator()(Scalar x) const {
    Scalar v = coefficients_[0];
    for (int m = 1; m <= degree(); ++m) v += 2 * coefficients_[m] * std::cos(Scalar(m) * x);
    return v;
  }

  Scalar derivative(Scalar x) const {
    Scalar d = 0;
    for (int m = 1; m <= degree(); ++m) d -= 2 * Scalar(m) * coefficients_[m] * std::sin(Scalar(m) * x);
    return d;
  }

  Scalar second_derivative(Scalar x) const {
    Scalar d = 0;
    for (int m = 1; m <= degree(); ++m)
      d -= 2 * Scalar(m) * Scalar(m) * coefficients_[m] * std::cos(Scalar(m) * x);
    return d;
  }

  /// (p/2 + kappa delta(x))^2 from the closed-form profile.
  Scalar direct(Scalar x) const {
    const Scalar a = Scalar(sector_.p) / 2 + shape_.kappa() * shape_.delta(x);
    return a * a;
  }

 private:
  GaugeShape<Scalar> shape_;
  MomentumSector sector_;
  Coefficients coefficients_;
};

template <typename Scalar>
EffectivePotential<Scalar> effective_potential(const GaugeShape<Scalar>& shape, MomentumSector sector) {
  return EffectivePotential<Scalar>(shape, sector);
}

template <typename Scalar = double>
struct Well {
  Scalar location;  ///< in [-pi, pi)
  Scalar value;
  Scalar barrier;   ///< lowest neighbouring maximum minus the well bottom
};

template <typename Scalar = double>
struct WellReport {
  bool flat = false;
  std::vector<Well<Scalar>> minima;
  /// Minima counted once per x -> -x pair.
  int distinct_count = 0;

  int count() const { return static_cast<int>(minima.size()); }
};

namespace detail {

// Safeguarded Newton on V' inside [a, b] with V'(a) <= 0 <= V'(b).
template <typename Scalar>
Scalar refine_minimum(const EffectivePotential<Scalar>& pot, Scalar a, Scalar b, Scalar guess,
                      Scalar gradient_tolerance) {
  Scalar x = std::clamp(guess, a, b);
  for (int it = 0; it < 200; ++it) {
    const Scalar g = pot.derivative(x);
    if (std::abs(g) < gradient_tolerance) return x;
    if (g < 0)
      a = x;
    else
      b = x;
    const Scalar h = pot.second_derivative(x);
    Scalar next = (h > 0) ? x - g / h : Scalar(0.5) * (a + b);
    if (!(next > a && next < b)) next = Scalar(0.5) * (a + b);
    if (b - a <= 4 * std::numeric_limits<Scalar>::epsilon() * (Scalar(1) + std::abs(x))) return next;
    x = next;
  }
  return x;
}

template <typename Scalar>
Scalar circular_distance(Scalar a, Scalar b) {
  return std::abs(wrap_angle(a - b));
}

}  // namespace detail

/// Local minima of V_eff on a uniform grid, refined to |V'| < 1e-9.
template <typename Scalar>
WellReport<Scalar> classify_wells(const EffectivePotential<Scalar>& pot, Eigen::Index grid_size,
                                  Scalar gradient_tolerance = Scalar(1e-9)) {
  if (grid_size < 64) throw std::invalid_argument("classify_wells: grid_size must be >= 64");
  const Eigen::Index n = grid_size;
  const auto x = uniform_grid<Scalar>(n);
  Eigen::Array<Scalar, Eigen::Dynamic, 1> v(n), g(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    v[j] = pot(x[j]);
    g[j] = pot.derivative(x[j]);
  }

  WellReport<Scalar> report;
  const Scalar scale = std::max(Scalar(1), v.abs().maxCoeff());
  if (g.abs().maxCoeff() <= Scalar(1e-12) * scale) {
    report.flat = true;
    return report;
  }

  const Scalar h = kTwoPi<Scalar> / Scalar(n);
  auto at = [n](Eigen::Index j) { return ((j % n) + n) % n; };

  for (Eigen::Index j = 0; j < n; ++j) {
    const Scalar vl = v[at(j - 1)], vc = v[j], vr = v[at(j + 1)];
    if (!(vc <= vl && vc < vr)) continue;

    // Parabolic vertex through the three samples.
    const Scalar denom = vl - 2 * vc + vr;
    Scalar guess = x[j];
    if (denom > 0) guess += h * Scalar(0.5) * (vl - vr) / denom;

    Scalar loc;
    const Scalar a = x[j] - h, b = x[j] + h;
    if (pot.derivative(a) <= 0 && pot.derivative(b) >= 0)
      loc = detail::refine_minimum(pot, a, b, guess, gradient_tolerance);
    else
      loc = std::abs(pot.derivative(guess)) < std::abs(g[j]) ? guess : x[j];
    loc = wrap_angle(loc);

    bool duplicate = false;
    for (const auto& w : report.minima)
      if (detail::circular_distance(w.location, loc) < Scalar(1e-9)) duplicate = true;
    if (duplicate) continue;

    // Barrier: climb to the nearest maximum on each side.
    Eigen::Index l = j, r = j;
    for (Eigen::Index s = 0; s < n && v[at(l - 1)] >= v[at(l)]; ++s) l = at(l - 1);
    for (Eigen::Index s = 0; s < n && v[at(r + 1)] >= v[at(r)]; ++s) r = at(r + 1);
    const Scalar bottom = pot(loc);
    report.minima.push_back({loc, bottom, std::min(v[l], v[r]) - bottom});
  }

  std::sort(report.minima.begin(), report.minima.end(),
            [](const auto& a, const auto& b) { return a.location < b.location; });
  int self_symmetric = 0;
  for (const auto& w : report.minima)
    if (std::abs(w.location) < Scalar(1e-9) || kPi<Scalar> - std::abs(w.location) < Scalar(1e-9))
      ++self_symmetric;
  report.distinct_count = (report.count() + self_symmetric) / 2;
  return report;
}

}  // namespace gaugering
