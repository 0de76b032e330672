#pragma once

#include <span>

#include "polareig/polar.hpp"

namespace polareig::hft {

/// Three independent estimates of dW/dlambda and their pairwise agreement:
/// a central finite difference of the lambda-parameterized spectrum, the
/// discrete expectation <sin^-2 theta> over the eigenvector, and the closed
/// form (n + |m| + 1/2)/|m|. All three are positive; the expectation is
/// additionally >= 1 up to the normalization tolerance, since sin^-2 >= 1
/// pointwise.
struct HftReport {
  int m = 0;
  int n = 0;
  double lambda = 0.0;
  double delta = 0.0;  // finite-difference step in lambda
  polar::GridSpec grid;
  double dW_dlambda_fd = 0.0;
  double expectation = 0.0;
  double analytic = 0.0;
  double rel_disc_fd_vs_expectation = 0.0;
  double rel_disc_fd_vs_analytic = 0.0;
  double rel_disc_expectation_vs_analytic = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Discrete expectation sum y_j^2 sin^-2(theta_j) h for a grid-normalized
/// eigenvector (sum y_j^2 h = 1 within 1e-6, else std::invalid_argument).
/// This rectangle sum is the exact lambda-derivative of the discrete matrix
/// eigenvalue, up to the inverse-iteration residual.
double expectation_inv_sin2(std::span<const double> eigvec, const polar::GridSpec& grid);

/// Central difference [W_n(lambda + delta) - W_n(lambda - delta)]/(2 delta)
/// with Richardson-extrapolated spectra at the shifted couplings.
/// Refuses m = 0 (DivergenceError): at the critical coupling dW/dlambda has
/// no finite limit.
double dW_dlambda_fd(int m, int n, double delta, const polar::GridSpec& grid,
                     int richardson_levels = 3, double tol = 1e-10);

/// (n + |m| + 1/2)/|m|, from W(lambda) = (1/2)(n + s + 1/2)^2 with
/// s = sqrt(2 lambda + 1/4) and s = |m| at lambda = lambda_from_m(m).
/// Refuses m = 0 (DivergenceError).
double analytic_dW_dlambda(int m, int n);

/// Assembles the three estimates. `delta` <= 0 selects the default step
/// 1e-4 * max(1, |lambda|). Refuses m = 0 (DivergenceError).
HftReport hft_verify(int m, int n, const polar::GridSpec& grid, double delta = 0.0,
                     double tolerance = 1e-3, int richardson_levels = 3);

}  // namespace polareig::hft
