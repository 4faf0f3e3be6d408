#include "gaugering/io/validation.hpp"

#include "gaugering/gaugering.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

namespace gaugering::io {

namespace {

constexpr double kPiD = std::numbers::pi;

void check_less(ValidationReport& r, std::string name, double measured, double threshold) {
  r.checks.push_back({std::move(name), measured < threshold, measured, threshold});
}

void check_normalizations(ValidationReport& r) {
  double worst_integral = 0, worst_c0 = 0, worst_wallis = 0;
  for (int q : {1, 2, 4, 8, 16, 32, 64}) {
    const GaugeShape<double> shape(q, 1.0);
    const double integral = periodic_trapezoid<double>([&](double x) { return shape.delta(x); }, 4 * q + 64);
    worst_integral = std::max(worst_integral, std::abs(integral - 1));
    const double wallis = std::exp(std::lgamma(q + 1.0) - std::lgamma(q + 0.5)) / (2 * std::sqrt(kPiD));
    worst_wallis = std::max(worst_wallis, std::abs(shape.normalization() / wallis - 1));
  }
  for (int q = 1; q <= 64; ++q)
    worst_c0 = std::max(worst_c0, std::abs(gauge_fourier_coefficients(q)[0] * 2 * kPiD - 1));
  check_less(r, "gauge profile integrates to one (q = 1..64)", worst_integral, 1e-12);
  check_less(r, "zeroth Fourier coefficient equals 1/(2 pi)", worst_c0, 1e-12);
  check_less(r, "normalization matches q!/(2 sqrt(pi) Gamma(q + 1/2))", worst_wallis, 1e-12);
}

void check_potential(ValidationReport& r) {
  double worst = 0;
  for (int p : {0, -2}) {
    const auto pot = effective_potential(GaugeShape<double>(1, kPiD), MomentumSector{p});
    const auto x = uniform_grid<double>(256);
    for (Eigen::Index j = 0; j < x.size(); ++j) {
      const double c = std::cos(x[j] / 2), s = std::sin(x[j] / 2);
      const double closed = p == 0 ? std::pow(c, 4) : std::pow(s, 4);
      worst = std::max(worst, std::abs(pot(x[j]) - closed));
    }
  }
  check_less(r, "V_eff at kappa = pi is cos^4(x/2) / sin^4(x/2)", worst, 1e-12);
}

double perturbed_ground(int p, double perturbation) {
  const MomentumSector sector{p};
  const auto pot = effective_potential(GaugeShape<double>(1, kPiD), sector);
  auto h = assemble_hamiltonian(pot, PlaneWaveBasis<double>(default_basis_size(1), sector));
  const Eigen::Index centre = h.rows() / 2;  // k = 0 plane wave
  h(centre, centre) += perturbation;
  return 2 * eigenvalues<double>(h)[0];
}

void check_spectrum(ValidationReport& r, const ValidationOptions& options) {
  const double e0 = perturbed_ground(0, options.hamiltonian_perturbation);
  const double e2 = perturbed_ground(-2, 0.0);
  check_less(r, "p = 0 and p = -2 degenerate at kappa = pi (q = 1)", std::abs(e0 - e2), 1e-9);

  double margin = std::numeric_limits<double>::infinity();
  for (double kappa : {2.0, 4.0, 6.0}) {
    const GaugeShape<double> shape(1, kappa);
    margin = std::min(margin, lowest_energy(shape, 2, 129) - lowest_energy(shape, -2, 129));
  }
  r.checks.push_back({"chirality: eps(p = -2) < eps(p = +2) for kappa > 0", margin > 0, margin, 0.0});

  double previous = -1, worst_step = std::numeric_limits<double>::infinity(), top = 0;
  for (int q : {8, 16, 32, 64}) {
    const double e = lowest_energy(GaugeShape<double>(q, 2.0), 0, default_basis_size(q));
    worst_step = std::min(worst_step, e - previous);
    top = std::max(top, e);
    previous = e;
  }
  r.checks.push_back({"short-range trend: eps(q) increasing for q = 8..64", worst_step > 0, worst_step, 0.0});
  check_less(r, "short-range trend bounded by (l^2 + p^2)/2 = 0.5", top, dirac_limit_reference(1, 0).energy);

  const MomentumSector sector{-2};
  const auto pot = effective_potential(GaugeShape<double>(1, 3.8), sector);
  const auto h = assemble_hamiltonian(pot, PlaneWaveBasis<double>(129, sector));
  const auto pairs = eigensolve(h, 8);
  const double scale = h.norm();
  double residual = 0;
  for (Eigen::Index c = 0; c < pairs.size(); ++c)
    residual = std::max(residual, (h * pairs.eigenvectors.col(c) - pairs.eigenvalues[c] * pairs.eigenvectors.col(c)).norm() / scale);
  const double orth =
      (pairs.eigenvectors.transpose() * pairs.eigenvectors - Eigen::MatrixXd::Identity(8, 8)).cwiseAbs().maxCoeff();
  check_less(r, "eigenpair residual / ||H||", residual, 1e-10);
  check_less(r, "eigenvector orthonormality", orth, 1e-10);
}

void check_two_body(ValidationReport& r) {
  const TwoBodyState<double> state(relative_ground_state(GaugeShape<double>(1, 3.8), -2, 129));
  const auto rho = density_grid(state, 128);
  const double marginal = (first_marginal(rho).array() - 1 / (2 * kPiD)).abs().maxCoeff();
  check_less(r, "marginal of |Psi|^2 uniform at 1/(2 pi)", marginal, 1e-8);

  const RingPartition<double> part(64);
  const auto stats = phasor_statistics(bin_probabilities(state, part), part);
  check_less(r, "<Q^dagger Q> = 1", std::max(std::abs(stats.norm1 - 1), std::abs(stats.norm2 - 1)), 1e-12);
  check_less(r, "<[Q1, Q2]> = 0", std::abs(stats.commutator), 1e-12);
  check_less(r, "plain covariance vanishes for relative states", std::abs(stats.covariance_plain), 1e-10);
  const double slack = std::min(stats.rs_left - stats.rs_right_plain, stats.rs_left - stats.rs_right_conj);
  r.checks.push_back({"Robertson-Schroedinger inequality (both variants)", slack >= -1e-12, slack, -1e-12});
}

void check_dynamics(ValidationReport& r) {
  constexpr Eigen::Index n = 256;
  const auto psi0 = qin_reference<double>(1, 1, n, 0.0);
  double worst = 0;
  for (double t : {kPiD / 4, kPiD, 4 * kPiD}) {
    const auto moved = propagate(psi0, t);
    const auto exact = qin_reference<double>(1, 1, n, t);
    worst = std::max(worst, (moved.values() - exact.values()).cwiseAbs().maxCoeff());
  }
  check_less(r, "free propagation reproduces the rotating m = l = 1 solution", worst, 1e-10);

  // i dPhi/dt + (1/2) d^2Phi/dtheta^2 by central differences; truncation ~ h^2 (l + 1)^4 / 24.
  double residual = 0;
  const double h = 1e-3, dt = 1e-4;
  for (int ell : {0, 1, 2}) {
    const QinSolution<double> phi(1, ell);
    for (double theta = -3.0; theta <= 3.0; theta += 0.25) {
      const double t = 0.7;
      const auto dphidt = (phi(theta, t + dt) - phi(theta, t - dt)) / (2 * dt);
      const auto d2 = (phi(theta + h, t) - 2.0 * phi(theta, t) + phi(theta - h, t)) / (h * h);
      residual = std::max(residual, std::abs(std::complex<double>(0, 1) * dphidt + 0.5 * d2));
    }
  }
  check_less(r, "rotating solution satisfies the free equation (m = 1, l = 0..2)", residual, 1e-5);

  auto generic = measure_imperfect(TwoBodyState<double>(relative_ground_state(GaugeShape<double>(1, 3.8), -2, 129)),
                                   MeasurementKernel<double>(5, 0.3), n)
                     .wavefunction;
  const auto revived = propagate(generic, 4 * kPiD);
  check_less(r, "4 pi revival", (revived.values() - generic.values()).cwiseAbs().maxCoeff(), 1e-10);
}

}  // namespace

bool ValidationReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

ValidationReport run_validation(const ValidationOptions& options) {
  ValidationReport report;
  check_normalizations(report);
  check_potential(report);
  check_spectrum(report, options);
  check_two_body(report);
  check_dynamics(report);
  return report;
}

void print_report(std::ostream& out, const ValidationReport& report) {
  for (const auto& c : report.checks) {
    char line[256];
    std::snprintf(line, sizeof line, "[%s] %-66s measured %.3e  threshold %.1e", c.passed ? "PASS" : "FAIL",
                  c.name.c_str(), c.measured, c.threshold);
    out << line << '\n';
  }
  std::size_t failed = 0;
  for (const auto& c : report.checks) failed += !c.passed;
  out << (failed ? "validation FAILED: " + std::to_string(failed) + " check(s)" : std::string("validation passed"))
      << '\n';
}

}  // namespace gaugering::io
