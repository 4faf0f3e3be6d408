#pragma once

// Reference computations used only by the tests. None of them touch the
// plane-wave machinery they are compared against.

#include <Eigen/Core>
#include <Eigen/SparseCholesky>
#include <Eigen/SparseCore>

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

constexpr double pi = std::numbers::pi;

// Lowest eigenvalue of -d^2/dx^2 + V on a periodic grid of n points,
// second-order central differences, by shifted inverse iteration.
inline double fd_lowest_eigenvalue(const std::function<double(double)>& v, int n) {
  const double h = 2 * pi / n;
  std::vector<double> vx(n);
  double vmin = 1e300;
  for (int j = 0; j < n; ++j) {
    vx[j] = v(-pi + h * j);
    vmin = std::min(vmin, vx[j]);
  }
  const double shift = vmin - 1.0;  // H - shift is positive definite
  std::vector<Eigen::Triplet<double>> t;
  for (int j = 0; j < n; ++j) {
    t.emplace_back(j, j, 2 / (h * h) + vx[j] - shift);
    t.emplace_back(j, (j + 1) % n, -1 / (h * h));
    t.emplace_back(j, (j + n - 1) % n, -1 / (h * h));
  }
  Eigen::SparseMatrix<double> a(n, n);
  a.setFromTriplets(t.begin(), t.end());
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(a);

  Eigen::VectorXd x = Eigen::VectorXd::Ones(n);
  for (int j = 0; j < n; ++j) x[j] += 0.1 * std::cos(-pi + h * j);
  x.normalize();
  double rayleigh = 0;
  for (int it = 0; it < 2000; ++it) {
    Eigen::VectorXd y = solver.solve(x);
    y.normalize();
    const double next = y.dot(a * y);
    x = y;
    if (it > 10 && std::abs(next - rayleigh) < 1e-15 * std::abs(next)) {
      rayleigh = next;
      break;
    }
    rayleigh = next;
  }
  return rayleigh + shift;
}

// Richardson extrapolation of the O(h^2) finite-difference estimate.
inline double fd_ground_energy(const std::function<double(double)>& v, int n = 4096) {
  const double fine = fd_lowest_eigenvalue(v, n);
  const double coarse = fd_lowest_eigenvalue(v, n / 2);
  return 2 * (4 * fine - coarse) / 3;  // eps = 2 lambda
}

// Composite Simpson rule on [a, b].
inline double simpson(const std::function<double(double)>& f, double a, double b, int panels = 20000) {
  const double h = (b - a) / panels;
  double s = f(a) + f(b);
  for (int i = 1; i < panels; ++i) s += f(a + i * h) * (i % 2 ? 4 : 2);
  return s * h / 3;
}

}  // namespace oracle
