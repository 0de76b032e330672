#pragma once

#include <vector>

#include "polareig/polar.hpp"

namespace polareig::legendre {

/// Index pair for P_l^m; m is stored nonnegative (negative magnetic numbers
/// enter only through |m|). m > l is legal and indexes the zero function.
struct LegendreIndex {
  int l = 0;
  int m = 0;
};

/// Gauss-Legendre rule on [-1, 1]: nodes strictly increasing and symmetric
/// about 0, weights positive and symmetric, sum of weights = 2. Exact for
/// polynomials of degree <= 2*order - 1.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int order = 0;
};

/// Associated Legendre function P_l^m(x) with the Condon-Shortley phase:
/// P_m^m(x) = (-1)^m (2m-1)!! (1-x^2)^(m/2), then upward recurrence in l.
/// Returns 0 for m > l. Throws std::domain_error for |x| > 1 or negative
/// indices.
double assoc_legendre(int l, int m, double x);

/// N_l^m = sqrt[(2l+1)/2 * (l-m)!/(l+m)!], the factor that makes
/// (N P_l^m(cos theta))^2 integrate to 1 against sin(theta) d theta.
double norm_factor(int l, int m);

/// Probability density |N_l^|m| P_l^|m|(cos theta)|^2 sin(theta) of finding
/// the particle between theta and theta + d theta. Independent of the sign
/// of m; vanishes at theta = 0 and theta = pi.
double density(int l, int m, double theta);

/// Gauss-Legendre rule of the given order (1 <= order <= 256), nodes by
/// Newton iteration from the cosine initial guesses.
GaussRule gauss_rule(int order);

/// Integral over (0, pi) of (N P_l^m)(N P_l'^m) sin(theta) d theta, evaluated
/// as a polynomial integral on [-1, 1]. Equals the Kronecker delta. Requires
/// rule.order >= l + l_prime + 1.
double orthonormality(int l, int l_prime, int m, const GaussRule& rule);

/// Cross-module check of P_l^|m| = P_{|m|+n}^|m|: compares the analytic
/// y = sin^(1/2)(theta) N P_l^|m|(cos theta) sampled on the grid against the
/// numeric eigenvector of the discretized polar Hamiltonian for the same
/// (m, n). Both samples are scaled to unit Euclidean norm (the eigenvector
/// convention) and sign-aligned; returns the max-norm difference, which
/// decreases under grid refinement. Desk scale: |m| <= 3, n <= 4.
double eigenfunction_consistency(int m, int n, const polar::GridSpec& grid, double tol = 1e-10);

/// Density tabulated on `samples` uniform points covering [0, pi] inclusive.
struct PolarDensity {
  LegendreIndex index;
  std::vector<double> theta_samples;
  std::vector<double> density_values;
};
PolarDensity sample_density(int l, int m, int samples);

}  // namespace polareig::legendre
