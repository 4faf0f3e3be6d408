#pragma once

#include "gaugering/ground_state_scan.hpp"
#include "gaugering/parallel.hpp"
#include "gaugering/two_body_state.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <array>
#include <complex>
#include <stdexcept>
#include <vector>

namespace gaugering {

/// Bins R_n = [-pi + 2 pi n / N, -pi + 2 pi (n+1) / N) with midpoint phases.
template <typename Scalar = double>
class RingPartition {
 public:
  explicit RingPartition(Eigen::Index bins) : bins_(bins) {
    if (bins < 1) throw std::invalid_argument("RingPartition: need at least one bin");
  }

  Eigen::Index size() const { return bins_; }
  Scalar width() const { return kTwoPi<Scalar> / Scalar(bins_); }
  Scalar lower(Eigen::Index n) const { return -kPi<Scalar> + width() * Scalar(n); }
  Scalar upper(Eigen::Index n) const { return lower(n + 1); }
  Scalar midpoint(Eigen::Index n) const { return lower(n) + width() / 2; }
  std::complex<Scalar> phasor(Eigen::Index n) const { return std::polar(Scalar(1), midpoint(n)); }

  /// Bin containing theta (after wrapping).
  Eigen::Index bin_of(Scalar theta) const {
    const auto n = static_cast<Eigen::Index>(std::floor((wrap_angle(theta) + kPi<Scalar>) / width()));
    return std::clamp<Eigen::Index>(n, 0, bins_ - 1);
  }

 private:
  Eigen::Index bins_;
};

namespace detail {

// 8-point Gauss-Legendre rule on [-1, 1].
inline constexpr std::array<double, 8> kGaussNodes = {
    -0.9602898564975363, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
    0.1834346424956498,  0.5255324099163290,  0.7966664774136267,  0.9602898564975363};
inline constexpr std::array<double, 8> kGaussWeights = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873, 0.3626837833783620,
    0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};

template <typename Scalar>
Scalar bin_pair_probability(const TwoBodyState<Scalar>& state, const RingPartition<Scalar>& part, Eigen::Index n,
                            Eigen::Index m) {
  const Scalar half = part.width() / 2;
  const Scalar c1 = part.midpoint(n), c2 = part.midpoint(m);
  Scalar sum = 0;
  for (std::size_t a = 0; a < kGaussNodes.size(); ++a)
    for (std::size_t b = 0; b < kGaussNodes.size(); ++b)
      sum += Scalar(kGaussWeights[a] * kGaussWeights[b]) *
             state.density(c1 + half * Scalar(kGaussNodes[a]), c2 + half * Scalar(kGaussNodes[b]));
  return sum * half * half;
}

}  // namespace detail

/// Joint probability of particle 1 in R_n and particle 2 in R_m. The density
/// depends only on theta1 - theta2, so one column is integrated and the
/// matrix is filled circulantly; a second column is integrated independently
/// and must agree.
template <typename Scalar>
DenseMatrix<Scalar> bin_probabilities(const TwoBodyState<Scalar>& state, const RingPartition<Scalar>& partition) {
  const Eigen::Index nb = partition.size();
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> column(nb);
  for (Eigen::Index d = 0; d < nb; ++d) column[d] = detail::bin_pair_probability(state, partition, d, 0);

  const Eigen::Index probe = nb / 2;
  for (Eigen::Index n = 0; n < nb; ++n) {
    const Scalar direct = detail::bin_pair_probability(state, partition, n, probe);
    if (std::abs(direct - column[((n - probe) % nb + nb) % nb]) > Scalar(1e-12))
      throw std::logic_error("bin_probabilities: state is not translation invariant");
  }

  DenseMatrix<Scalar> p(nb, nb);
  for (Eigen::Index n = 0; n < nb; ++n)
    for (Eigen::Index m = 0; m < nb; ++m) p(n, m) = column[((n - m) % nb + nb) % nb];
  return p;
}

template <typename Scalar = double>
struct PhasorStatistics {
  using Complex = std::complex<Scalar>;
  Complex mean1, mean2;          ///< <Q1>, <Q2>
  Scalar norm1, norm2;           ///< <Q_i^dagger Q_i>
  Scalar variance1, variance2;   ///< <Q_i^dagger Q_i> - |<Q_i>|^2
  Complex covariance_plain;      ///< <{Q1, Q2}>/2 - <Q1><Q2>
  Complex covariance_conj;       ///< <{Q1, Q2^dagger}>/2 - <Q1><Q2>^*
  Complex commutator;            ///< <[Q1, Q2]>
  Complex commutator_conj;       ///< <[Q1, Q2^dagger]>
  Scalar rs_left;                ///< dQ1^2 dQ2^2
  Scalar rs_right_plain;
  Scalar rs_right_conj;
};

/// Moments of Q_i = sum_n e^{i theta_n} D(R_n) from a joint bin distribution
/// (rows: particle 1, columns: particle 2).
template <typename Scalar>
PhasorStatistics<Scalar> phasor_statistics(const DenseMatrix<Scalar>& p, const RingPartition<Scalar>& partition) {
  using Complex = std::complex<Scalar>;
  const Eigen::Index nb = partition.size();
  if (p.rows() != nb || p.cols() != nb) throw std::invalid_argument("phasor_statistics: shape mismatch");

  std::vector<Complex> z(nb);
  for (Eigen::Index n = 0; n < nb; ++n) z[n] = partition.phasor(n);

  PhasorStatistics<Scalar> s{};
  Complex q1q2 = 0, q2q1 = 0, q1q2c = 0, q2cq1 = 0;
  for (Eigen::Index n = 0; n < nb; ++n) {
    for (Eigen::Index m = 0; m < nb; ++m) {
      const Scalar w = p(n, m);
      s.mean1 += w * z[n];
      s.mean2 += w * z[m];
      s.norm1 += w * std::norm(z[n]);
      s.norm2 += w * std::norm(z[m]);
      q1q2 += w * (z[n] * z[m]);
      q2q1 += w * (z[m] * z[n]);
      q1q2c += w * (z[n] * std::conj(z[m]));
      q2cq1 += w * (std::conj(z[m]) * z[n]);
    }
  }
  s.variance1 = s.norm1 - std::norm(s.mean1);
  s.variance2 = s.norm2 - std::norm(s.mean2);
  s.covariance_plain = Scalar(0.5) * (q1q2 + q2q1) - s.mean1 * s.mean2;
  s.covariance_conj = Scalar(0.5) * (q1q2c + q2cq1) - s.mean1 * std::conj(s.mean2);
  s.commutator = q1q2 - q2q1;
  s.commutator_conj = q1q2c - q2cq1;

  const Complex two_i(0, 2);
  s.rs_left = s.variance1 * s.variance2;
  s.rs_right_plain = std::norm(s.covariance_plain) + std::norm(s.commutator / two_i);
  s.rs_right_conj = std::norm(s.covariance_conj) + std::norm(s.commutator_conj / two_i);
  return s;
}

template <typename Scalar = double>
struct UncertaintyRecord {
  Scalar kappa;
  int ground_p;
  Scalar energy;
  std::vector<int> minimizers;
  PhasorStatistics<Scalar> stats;
};

template <typename Scalar = double>
struct UncertaintyScan {
  std::vector<UncertaintyRecord<Scalar>> records;
  bool inconclusive = false;
};

/// Adds points c + j step, |j step| <= halfwidth, around each centre that
/// lies inside the grid's span. Result is sorted and deduplicated.
template <typename Scalar>
std::vector<Scalar> refine_kappa_grid(std::vector<Scalar> grid, const std::vector<Scalar>& centers,
                                      Scalar halfwidth = Scalar(0.1), Scalar step = Scalar(0.01)) {
  if (grid.empty()) return grid;
  const auto [lo, hi] = std::minmax_element(grid.begin(), grid.end());
  const Scalar a = *lo, b = *hi;
  const int reach = static_cast<int>(std::floor(halfwidth / step + Scalar(1e-9)));
  for (Scalar c : centers) {
    if (c < a || c > b) continue;
    for (int j = -reach; j <= reach; ++j) {
      const Scalar k = c + Scalar(j) * step;
      if (k >= a && k <= b) grid.push_back(k);
    }
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end(), [](Scalar x, Scalar y) { return std::abs(x - y) < Scalar(1e-12); }),
             grid.end());
  return grid;
}

/// Phasor statistics of the canonical ground state at every kappa. The grid
/// is refined to step 0.01 within 0.1 of kappa = pi and kappa = 2 pi.
template <typename Scalar>
UncertaintyScan<Scalar> uncertainty_scan(int q, const std::vector<Scalar>& kappa_grid,
                                         const RingPartition<Scalar>& partition,
                                         const ScanOptions<Scalar>& options = {}) {
  if (kappa_grid.empty()) throw std::invalid_argument("uncertainty_scan: empty kappa grid");
  const auto kappas = refine_kappa_grid(kappa_grid, {kPi<Scalar>, kTwoPi<Scalar>});
  auto records = parallel_map(kappas.size(), [&](std::size_t i) {
    auto ground = find_ground_state<Scalar>(q, kappas[i], options);
    const TwoBodyState<Scalar> state(ground.relative);
    auto stats = phasor_statistics(bin_probabilities(state, partition), partition);
    return std::pair{UncertaintyRecord<Scalar>{kappas[i], ground.p, ground.relative.energy(),
                                               std::move(ground.minimizers), stats},
                     ground.inconclusive};
  });
  UncertaintyScan<Scalar> scan;
  for (auto& [record, inconclusive] : records) {
    scan.inconclusive = scan.inconclusive || inconclusive;
    scan.records.push_back(std::move(record));
  }
  return scan;
}

}  // namespace gaugering
