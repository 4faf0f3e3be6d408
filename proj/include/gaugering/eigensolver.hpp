#pragma once

#include "gaugering/errors.hpp"
#include "gaugering/grid.hpp"
#include "gaugering/hamiltonian.hpp"

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace gaugering {

template <typename Scalar = double>
struct EigenPairs {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> eigenvalues;  ///< ascending operator eigenvalues
  DenseMatrix<Scalar> eigenvectors;                      ///< one column per eigenvalue

  Eigen::Index size() const { return eigenvalues.size(); }
  /// Energies in the two-body convention, eps = 2 lambda.
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> energies() const { return 2 * eigenvalues; }
};

namespace detail {

template <typename Scalar>
void throw_on_failure(const Eigen::SelfAdjointEigenSolver<DenseMatrix<Scalar>>& solver, Eigen::Index n) {
  if (solver.info() == Eigen::Success) return;
  throw ConvergenceError("eigensolve: tridiagonal QL iteration did not converge for a " + std::to_string(n) +
                         "x" + std::to_string(n) + " matrix (limit " +
                         std::to_string(Eigen::SelfAdjointEigenSolver<DenseMatrix<Scalar>>::m_maxIterations) +
                         " sweeps per eigenvalue, Eigen info code " + std::to_string(int(solver.info())) + ")");
}

// Deterministic sign: the largest-magnitude component (first on ties) is positive.
template <typename Scalar, typename Vec>
void fix_sign(Vec&& v) {
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < v.size(); ++i)
    if (std::abs(v[i]) > std::abs(v[best]) * (1 + 64 * std::numeric_limits<Scalar>::epsilon())) best = i;
  if (v[best] < 0) v = -v;
}

}  // namespace detail

/// Lowest `count` eigenpairs of a real symmetric matrix (Householder
/// tridiagonalization followed by implicit symmetric QL/QR).
template <typename Scalar>
EigenPairs<Scalar> eigensolve(const DenseMatrix<Scalar>& h, Eigen::Index count) {
  if (h.rows() != h.cols()) throw std::invalid_argument("eigensolve: matrix must be square");
  if (count < 1 || count > h.rows()) throw std::invalid_argument("eigensolve: count out of range");
  Eigen::SelfAdjointEigenSolver<DenseMatrix<Scalar>> solver(h, Eigen::ComputeEigenvectors);
  detail::throw_on_failure(solver, h.rows());
  EigenPairs<Scalar> out{solver.eigenvalues().head(count), solver.eigenvectors().leftCols(count)};
  for (Eigen::Index c = 0; c < count; ++c) detail::fix_sign<Scalar>(out.eigenvectors.col(c));
  return out;
}

/// Ascending eigenvalues only.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> eigenvalues(const DenseMatrix<Scalar>& h) {
  Eigen::SelfAdjointEigenSolver<DenseMatrix<Scalar>> solver(h, Eigen::EigenvaluesOnly);
  detail::throw_on_failure(solver, h.rows());
  return solver.eigenvalues();
}

/// phi(x) = sum_k a_k e^{ikx} / sqrt(2 pi) for one momentum sector.
template <typename Scalar = double>
class RelativeEigenstate {
 public:
  using Complex = std::complex<Scalar>;
  using Amplitudes = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  RelativeEigenstate(Scalar energy, Amplitudes amplitudes, PlaneWaveBasis<Scalar> basis, GaugeShape<Scalar> shape)
      : energy_(energy), amplitudes_(std::move(amplitudes)), basis_(std::move(basis)), shape_(std::move(shape)) {
    if (amplitudes_.size() != basis_.size())
      throw std::invalid_argument("RelativeEigenstate: amplitude count does not match basis");
  }

  /// Two-body energy eps (twice the eigenvalue of the relative operator).
  Scalar energy() const { return energy_; }
  const Amplitudes& amplitudes() const { return amplitudes_; }
  const PlaneWaveBasis<Scalar>& basis() const { return basis_; }
  const GaugeShape<Scalar>& shape() const { return shape_; }
  MomentumSector sector() const { return basis_.sector(); }

  Complex operator()(Scalar x) const {
    const auto& k = basis_.wavenumbers();
    const Complex step = std::polar(Scalar(1), x);
    Complex phase = std::polar(Scalar(1), k[0] * x);
    Complex sum = 0;
    for (Eigen::Index i = 0; i < amplitudes_.size(); ++i) {
      sum += amplitudes_[i] * phase;
      phase *= step;
    }
    return sum / std::sqrt(kTwoPi<Scalar>);
  }

  Scalar density(Scalar x) const { return std::norm((*this)(x)); }

  /// +1 or -1 when a_{-k} = +-a_k, measured as the smaller residual.
  int reflection_parity(Scalar* residual = nullptr) const {
    Scalar even = 0, odd = 0;
    for (Eigen::Index i = 0; i < amplitudes_.size(); ++i) {
      const Scalar a = amplitudes_[i], b = amplitudes_[basis_.mirror(i)];
      even = std::max(even, std::abs(a - b));
      odd = std::max(odd, std::abs(a + b));
    }
    if (residual) *residual = std::min(even, odd);
    return even <= odd ? 1 : -1;
  }

 private:
  Scalar energy_;
  Amplitudes amplitudes_;
  PlaneWaveBasis<Scalar> basis_;
  GaugeShape<Scalar> shape_;
};

/// Lowest `count` relative eigenstates of one sector.
template <typename Scalar>
std::vector<RelativeEigenstate<Scalar>> relative_eigenstates(const EffectivePotential<Scalar>& pot,
                                                             const PlaneWaveBasis<Scalar>& basis,
                                                             Eigen::Index count) {
  const auto pairs = eigensolve(assemble_hamiltonian(pot, basis), count);
  std::vector<RelativeEigenstate<Scalar>> out;
  out.reserve(count);
  for (Eigen::Index c = 0; c < count; ++c)
    out.emplace_back(2 * pairs.eigenvalues[c], pairs.eigenvectors.col(c), basis, pot.shape());
  return out;
}

template <typename Scalar>
RelativeEigenstate<Scalar> relative_ground_state(const GaugeShape<Scalar>& shape, int p, int basis_size) {
  const MomentumSector sector{p};
  return relative_eigenstates(effective_potential(shape, sector), PlaneWaveBasis<Scalar>(basis_size, sector), 1)
      .front();
}

/// Lowest eps of a sector from the two parity blocks, eigenvalues only.
template <typename Scalar>
Scalar lowest_energy(const GaugeShape<Scalar>& shape, int p, int basis_size) {
  const MomentumSector sector{p};
  const auto pot = effective_potential(shape, sector);
  const auto [even, odd] = parity_blocks(pot, PlaneWaveBasis<Scalar>(basis_size, sector));
  Scalar lowest = eigenvalues<Scalar>(even)[0];
  if (odd.rows() > 0) lowest = std::min(lowest, eigenvalues<Scalar>(odd)[0]);
  return 2 * lowest;
}

}  // namespace gaugering
