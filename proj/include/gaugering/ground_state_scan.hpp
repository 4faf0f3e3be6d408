#pragma once

#include "gaugering/eigensolver.hpp"
#include "gaugering/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <vector>

namespace gaugering {

template <typename Scalar = double>
struct ScanOptions {
  int p_min = -6;
  int p_max = 6;
  /// Even sectors reproduce the reported ground momenta; odd (antiperiodic)
  /// sectors are available on request.
  SectorSet sectors = SectorSet::even;
  int basis_size = 0;  ///< 0 selects default_basis_size(q)
  int max_widenings = 3;
  /// Energies within this (relative) distance of the minimum are degenerate.
  Scalar degeneracy_tolerance = Scalar(1e-9);
};

/// Smallest |p|, ties broken toward negative p.
inline int canonical_momentum(const std::vector<int>& minimizers) {
  if (minimizers.empty()) throw std::invalid_argument("canonical_momentum: empty set");
  return *std::min_element(minimizers.begin(), minimizers.end(), [](int a, int b) {
    return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a < b;
  });
}

template <typename Scalar = double>
struct GroundStateScan {
  int q = 1;
  std::vector<Scalar> kappas;
  std::vector<int> momenta;                      ///< ascending
  std::map<int, std::vector<Scalar>> energies;   ///< p -> lowest eps per kappa
  std::vector<int> ground_momentum;              ///< canonical p* per kappa
  std::vector<std::vector<int>> minimizing_sets; ///< all degenerate minimizers per kappa
  int widenings = 0;
  bool inconclusive = false;

  Scalar ground_energy(std::size_t i) const { return energies.at(ground_momentum[i])[i]; }
};

namespace detail {

inline std::vector<int> included_momenta(int p_min, int p_max, SectorSet set) {
  std::vector<int> out;
  for (int p = p_min; p <= p_max; ++p)
    if (sector_included(p, set)) out.push_back(p);
  return out;
}

template <typename Scalar>
void fill_energies(GroundStateScan<Scalar>& scan, const std::vector<int>& momenta, int basis_size) {
  const std::size_t nk = scan.kappas.size(), np = momenta.size();
  const auto cells = parallel_map(nk * np, [&](std::size_t c) {
    const Scalar kappa = scan.kappas[c / np];
    return lowest_energy(GaugeShape<Scalar>(scan.q, kappa), momenta[c % np], basis_size);
  });
  for (std::size_t j = 0; j < np; ++j) {
    auto& curve = scan.energies[momenta[j]];
    curve.resize(nk);
    for (std::size_t i = 0; i < nk; ++i) curve[i] = cells[i * np + j];
  }
}

template <typename Scalar>
bool resolve_minimizers(GroundStateScan<Scalar>& scan, Scalar tolerance) {
  const std::size_t nk = scan.kappas.size();
  scan.ground_momentum.assign(nk, 0);
  scan.minimizing_sets.assign(nk, {});
  bool on_boundary = false;
  for (std::size_t i = 0; i < nk; ++i) {
    Scalar best = std::numeric_limits<Scalar>::infinity();
    for (int p : scan.momenta) best = std::min(best, scan.energies[p][i]);
    const Scalar slack = tolerance * std::max(Scalar(1), std::abs(best));
    for (int p : scan.momenta)
      if (scan.energies[p][i] - best <= slack) scan.minimizing_sets[i].push_back(p);
    scan.ground_momentum[i] = canonical_momentum(scan.minimizing_sets[i]);
    const int g = scan.ground_momentum[i];
    if (g == scan.momenta.front() || g == scan.momenta.back()) on_boundary = true;
  }
  return on_boundary;
}

}  // namespace detail

/// Lowest eps per (kappa, p) and the minimizing momentum per kappa. If a
/// minimizer sits on the edge of the momentum range the range is widened by
/// two on each side, up to max_widenings times; otherwise the scan is
/// flagged inconclusive.
template <typename Scalar>
GroundStateScan<Scalar> ground_state_scan(int q, const std::vector<Scalar>& kappas,
                                          const ScanOptions<Scalar>& options = {}) {
  if (kappas.empty()) throw std::invalid_argument("ground_state_scan: empty kappa grid");
  if (options.p_min > options.p_max) throw std::invalid_argument("ground_state_scan: empty momentum range");
  GroundStateScan<Scalar> scan;
  scan.q = q;
  scan.kappas = kappas;
  const int basis_size = options.basis_size > 0 ? options.basis_size : default_basis_size(q);

  int p_min = options.p_min, p_max = options.p_max;
  scan.momenta = detail::included_momenta(p_min, p_max, options.sectors);
  if (scan.momenta.empty()) throw std::invalid_argument("ground_state_scan: no sector in momentum range");
  detail::fill_energies(scan, scan.momenta, basis_size);

  while (detail::resolve_minimizers(scan, options.degeneracy_tolerance)) {
    if (scan.widenings == options.max_widenings) {
      scan.inconclusive = true;
      break;
    }
    std::vector<int> added;
    for (int p : detail::included_momenta(p_min - 2, p_min - 1, options.sectors)) added.push_back(p);
    for (int p : detail::included_momenta(p_max + 1, p_max + 2, options.sectors)) added.push_back(p);
    p_min -= 2;
    p_max += 2;
    detail::fill_energies(scan, added, basis_size);
    scan.momenta = detail::included_momenta(p_min, p_max, options.sectors);
    ++scan.widenings;
  }
  return scan;
}

template <typename Scalar = double>
struct GroundState {
  int p;
  std::vector<int> minimizers;
  bool inconclusive;
  RelativeEigenstate<Scalar> relative;
};

/// Two-body ground state at one coupling, canonical sector.
template <typename Scalar>
GroundState<Scalar> find_ground_state(int q, Scalar kappa, const ScanOptions<Scalar>& options = {}) {
  const auto scan = ground_state_scan<Scalar>(q, {kappa}, options);
  const int basis_size = options.basis_size > 0 ? options.basis_size : default_basis_size(q);
  const int p = scan.ground_momentum.front();
  return {p, scan.minimizing_sets.front(), scan.inconclusive,
          relative_ground_state(GaugeShape<Scalar>(q, kappa), p, basis_size)};
}

}  // namespace gaugering
