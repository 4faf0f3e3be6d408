#pragma once

#include "gaugering/momentum_sector.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <stdexcept>

namespace gaugering {

/// Default truncation: resolves the potential bandwidth 2q with margin.
inline int default_basis_size(int q) { return std::max(129, 8 * q + 1); }

/// Relative-coordinate plane waves e^{ikx}/sqrt(2 pi). Periodic sectors use
/// k in {-K..K} (odd size); antiperiodic sectors use k in {-K-1/2..K+1/2}
/// (even size). A requested size of the wrong parity is rounded up by one.
template <typename Scalar = double>
class PlaneWaveBasis {
 public:
  PlaneWaveBasis(int requested_size, MomentumSector sector) : sector_(sector) {
    if (requested_size < 1) throw std::invalid_argument("PlaneWaveBasis: size must be positive");
    int n = requested_size;
    const bool want_even = sector.antiperiodic();
    if ((n % 2 == 0) != want_even) ++n;
    wavenumbers_.resize(n);
    const Scalar first = -Scalar(n - 1) / 2;
    for (int i = 0; i < n; ++i) wavenumbers_[i] = first + Scalar(i);
  }

  MomentumSector sector() const { return sector_; }
  Eigen::Index size() const { return wavenumbers_.size(); }
  const Eigen::Array<Scalar, Eigen::Dynamic, 1>& wavenumbers() const { return wavenumbers_; }
  Scalar wavenumber(Eigen::Index i) const { return wavenumbers_[i]; }

  /// Index of -k for the wavenumber at index i.
  Eigen::Index mirror(Eigen::Index i) const { return size() - 1 - i; }

  /// Integer difference k_i - k_j.
  int difference(Eigen::Index i, Eigen::Index j) const { return static_cast<int>(i - j); }

 private:
  MomentumSector sector_;
  Eigen::Array<Scalar, Eigen::Dynamic, 1> wavenumbers_;
};

}  // namespace gaugering
