#pragma once

#include "gaugering/effective_potential.hpp"
#include "gaugering/plane_wave_basis.hpp"

#include <Eigen/Core>

#include <stdexcept>
#include <utility>

namespace gaugering {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

namespace detail {

template <typename Scalar>
void check_compatible(const EffectivePotential<Scalar>& pot, const PlaneWaveBasis<Scalar>& basis) {
  if (!(pot.sector() == basis.sector()))
    throw std::invalid_argument("assemble_hamiltonian: potential and basis sectors differ");
  if (basis.size() < 4 * pot.shape().range_exponent() + 1)
    throw std::invalid_argument("assemble_hamiltonian: basis smaller than 4q + 1");
}

}  // namespace detail

/// Galerkin matrix of -d^2/dx^2 + V_eff in the plane-wave basis:
/// H_{kk'} = k^2 delta_{kk'} + v_{k-k'}. Half-bandwidth 2q. Each pair of
/// mirrored entries is written from one value so H is exactly symmetric.
template <typename Scalar>
DenseMatrix<Scalar> assemble_hamiltonian(const EffectivePotential<Scalar>& pot,
                                         const PlaneWaveBasis<Scalar>& basis) {
  detail::check_compatible(pot, basis);
  const Eigen::Index n = basis.size();
  const int band = pot.degree();
  DenseMatrix<Scalar> h = DenseMatrix<Scalar>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Scalar k = basis.wavenumber(i);
    h(i, i) = k * k + pot.coefficient(0);
    for (Eigen::Index j = i + 1; j < n && j - i <= band; ++j) {
      const Scalar v = pot.coefficient(basis.difference(j, i));
      h(i, j) = v;
      h(j, i) = v;
    }
  }
  return h;
}

/// The Hamiltonian restricted to reflection-even and reflection-odd
/// combinations (e_k +- e_{-k})/sqrt(2). V_eff is even, so H commutes with
/// k -> -k and its spectrum is the union of the two block spectra.
template <typename Scalar>
std::pair<DenseMatrix<Scalar>, DenseMatrix<Scalar>> parity_blocks(const EffectivePotential<Scalar>& pot,
                                                                  const PlaneWaveBasis<Scalar>& basis) {
  detail::check_compatible(pot, basis);
  const Eigen::Index n = basis.size();
  const bool has_zero = (n % 2 == 1);
  const Eigen::Index first = n / 2;  // index of the smallest non-negative wavenumber
  const Eigen::Index half = n - first;
  const Eigen::Index odd_size = has_zero ? half - 1 : half;
  const Eigen::Index odd_first = has_zero ? first + 1 : first;

  // H(k, k') + sign * H(k, -k') for non-negative k, k'.
  auto element = [&](Eigen::Index i, Eigen::Index j, int sign) {
    const Scalar k = basis.wavenumber(i);
    Scalar direct = pot.coefficient(basis.difference(i, j));
    if (i == j) direct += k * k;
    const Scalar mirrored = pot.coefficient(basis.difference(i, basis.mirror(j)));
    return direct + Scalar(sign) * mirrored;
  };

  DenseMatrix<Scalar> even(half, half), odd(odd_size, odd_size);
  const Scalar root2 = std::sqrt(Scalar(2));
  for (Eigen::Index a = 0; a < half; ++a) {
    for (Eigen::Index b = a; b < half; ++b) {
      const Eigen::Index i = first + a, j = first + b;
      Scalar value;
      if (has_zero && a == 0 && b == 0)
        value = basis.wavenumber(i) * basis.wavenumber(i) + pot.coefficient(0);
      else if (has_zero && a == 0)
        value = root2 * pot.coefficient(basis.difference(i, j));
      else
        value = element(i, j, +1);
      even(a, b) = value;
      even(b, a) = value;
    }
  }
  for (Eigen::Index a = 0; a < odd_size; ++a) {
    for (Eigen::Index b = a; b < odd_size; ++b) {
      const Scalar value = element(odd_first + a, odd_first + b, -1);
      odd(a, b) = value;
      odd(b, a) = value;
    }
  }
  return {std::move(even), std::move(odd)};
}

}  // namespace gaugering
