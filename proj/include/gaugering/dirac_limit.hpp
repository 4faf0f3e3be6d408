#pragma once

#include <cmath>
#include <stdexcept>

namespace gaugering {

enum class CuspParity { even, odd };

/// Short-range limit q -> infinity: eps = (l^2 + p^2)/2 with eigenfunctions
/// sin(l|x|/2) (even) or sin(lx/2) (odd). The branch is the one compatible
/// with the sector's boundary condition phi(x + 2 pi) = (-1)^p phi(x).
template <typename Scalar = double>
struct DiracLimitState {
  int ell;
  int p;
  Scalar energy;
  CuspParity parity;

  Scalar operator()(Scalar x) const {
    const Scalar arg = Scalar(ell) * (parity == CuspParity::even ? std::abs(x) : x) / 2;
    return std::sin(arg);
  }
};

template <typename Scalar = double>
DiracLimitState<Scalar> dirac_limit_reference(int ell, int p) {
  if (ell == 0) throw std::invalid_argument("dirac_limit_reference: ell must be non-zero");
  // Even branch is smooth across x = +-pi when l + p is odd.
  const bool even_branch = (std::abs(ell + p) % 2) == 1;
  return {ell, p, Scalar(ell * ell + p * p) / 2, even_branch ? CuspParity::even : CuspParity::odd};
}

}  // namespace gaugering
