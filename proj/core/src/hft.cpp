#include "polareig/hft.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "polareig/errors.hpp"

namespace polareig::hft {

namespace {

void refuse_m0(int m) {
  if (m != 0) return;
  throw DivergenceError(
      "m = 0 sits at the critical coupling lambda = -1/8: dW/dlambda = (n + 1/2 + s)/s "
      "diverges as s = sqrt(2 lambda + 1/4) -> 0, and the discrete expectation "
      "<sin^-2 theta> grows without bound as the grid refines; refusing to report a "
      "grid-dependent number");
}

double rel_disc(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace

double expectation_inv_sin2(std::span<const double> eigvec, const polar::GridSpec& grid) {
  if (static_cast<int>(eigvec.size()) != grid.interior_nodes())
    throw std::invalid_argument("expectation_inv_sin2: eigenvector/grid size mismatch");
  const double h = grid.spacing();

  double norm = 0.0;
  for (double y : eigvec) norm += y * y * h;
  if (std::abs(norm - 1.0) > 1e-6)
    throw std::invalid_argument("expectation_inv_sin2: eigenvector not grid-normalized "
                                "(sum y^2 h = " + std::to_string(norm) + ")");

  double sum = 0.0;
  for (int j = 1; j <= grid.interior_nodes(); ++j) {
    const double s = std::sin(grid.node(j));
    const double y = eigvec[static_cast<std::size_t>(j - 1)];
    sum += y * y / (s * s) * h;
  }
  return sum;
}

double dW_dlambda_fd(int m, int n, double delta, const polar::GridSpec& grid,
                     int richardson_levels, double tol) {
  refuse_m0(m);
  if (!(delta > 0.0)) throw std::invalid_argument("dW_dlambda_fd: delta must be positive");
  const double lambda = polar::lambda_from_m(m);
  if (lambda - delta < -0.125)
    throw UnphysicalCoupling("dW_dlambda_fd: lambda - delta below the physical floor -1/8");

  const double w_plus =
      polar::eigenvalue_at_lambda(lambda + delta, n, grid, richardson_levels, tol).value;
  const double w_minus =
      polar::eigenvalue_at_lambda(lambda - delta, n, grid, richardson_levels, tol).value;
  return (w_plus - w_minus) / (2.0 * delta);
}

double analytic_dW_dlambda(int m, int n) {
  refuse_m0(m);
  if (n < 0) throw std::domain_error("analytic_dW_dlambda: n must be >= 0");
  const double s = static_cast<double>(std::abs(m));
  return (static_cast<double>(n) + s + 0.5) / s;
}

HftReport hft_verify(int m, int n, const polar::GridSpec& grid, double delta, double tolerance,
                     int richardson_levels) {
  refuse_m0(m);
  const double lambda = polar::lambda_from_m(m);
  if (delta <= 0.0) delta = 1e-4 * std::max(1.0, std::abs(lambda));

  HftReport report{std::abs(m), n, lambda, delta, grid};
  report.tolerance = tolerance;
  report.dW_dlambda_fd = dW_dlambda_fd(m, n, delta, grid, richardson_levels);
  report.expectation =
      expectation_inv_sin2(polar::eigenfunction(lambda, n, grid), grid);
  report.analytic = analytic_dW_dlambda(m, n);

  report.rel_disc_fd_vs_expectation = rel_disc(report.dW_dlambda_fd, report.expectation);
  report.rel_disc_fd_vs_analytic = rel_disc(report.dW_dlambda_fd, report.analytic);
  report.rel_disc_expectation_vs_analytic = rel_disc(report.expectation, report.analytic);
  report.pass = report.rel_disc_fd_vs_expectation < tolerance &&
                report.rel_disc_fd_vs_analytic < tolerance &&
                report.rel_disc_expectation_vs_analytic < tolerance;
  return report;
}

}  // namespace polareig::hft
