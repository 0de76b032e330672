#pragma once

#include <vector>

#include "polareig/tridiag.hpp"

namespace polareig::polar {

/// Quantum-number triple with l = |m| + n.
struct QuantumNumbers {
  int l = 0;
  int m = 0;
  int n = 0;

  /// From (l, m); validates l >= 0 and |m| <= l, sets n = l - |m|.
  static QuantumNumbers from_lm(int l, int m);
  /// From (m, n); validates n >= 0, sets l = |m| + n.
  static QuantumNumbers from_mn(int m, int n);
};

/// Uniform Dirichlet grid on (0, pi): N subintervals, spacing h = pi/N,
/// interior nodes theta_j = j h for j = 1 .. N-1. The singular endpoints are
/// never nodes. N must be >= 16.
class GridSpec {
 public:
  explicit GridSpec(int subintervals);

  int subintervals() const { return n_; }
  int interior_nodes() const { return n_ - 1; }
  double spacing() const;
  /// theta_j for j = 1 .. N-1.
  double node(int j) const;
  std::vector<double> nodes() const;

  /// Grid with twice as many subintervals.
  GridSpec refined() const { return GridSpec(2 * n_); }

 private:
  int n_;
};

/// Coupling of the lambda/sin^2(theta) term for magnetic quantum number m:
/// lambda = (m^2 - 1/4)/2. Even in m.
double lambda_from_m(int m);

/// Closed-form eigenvalue W_l = (1/2)(l + 1/2)^2. Throws for l < 0.
double exact_W(int l);

/// Endpoint exponent alpha = |m| + 1/2 of the regular solution y ~ theta^alpha,
/// from the indicial equation alpha(alpha - 1) = m^2 - 1/4.
double asymptotic_exponent(int m);

/// Discretization of A = -(1/2) d^2/dtheta^2 + lambda/sin^2(theta) with
/// Dirichlet conditions by omission of the boundary nodes: order N-1,
/// diagonal 1/h^2 + lambda/sin^2(theta_j), off-diagonal -1/(2h^2).
/// Throws UnphysicalCoupling for lambda < -1/8.
tridiag::SymTridiag build_hamiltonian(double lambda, const GridSpec& grid);

/// Empirical-order Richardson step from values at spacings h, h/2, h/4:
/// p = log2((v1 - v2)/(v2 - v3)), extrapolated = v3 + (v3 - v2)/(2^p - 1).
/// A non-monotone or stalled sequence is refused: the finest value is
/// returned with `refused` set and order_p = NaN.
struct RichardsonResult {
  double extrapolated = 0.0;
  double order_p = 0.0;
  bool refused = false;
};
RichardsonResult richardson(double v_h, double v_h2, double v_h4);

/// How a multi-grid eigenvalue estimate was combined.
enum class ExtrapolationModel {
  none,             // single grid, finest value reported
  power_assumed,    // two grids, nominal second order assumed
  power_estimated,  // three grids, empirical-order Richardson
  log_critical,     // three grids, logarithmic model at lambda = -1/8
};
const char* to_string(ExtrapolationModel model);

/// Eigenvalue estimate for level n of the lambda-parameterized operator,
/// combined across richardson_levels grids (N, 2N, 4N).
///
/// At the critical coupling lambda = -1/8 (m = 0) the discrete eigenvalue
/// error decays like 1/log(N), not like a power of the spacing, so the
/// power-law Richardson step is replaced by the three-point elimination of
/// the model W_N = W - C/(log N + b). order_p still reports the power-law
/// estimate for diagnostic purposes.
struct LevelEstimate {
  double value = 0.0;
  double order_p = 0.0;
  ExtrapolationModel model = ExtrapolationModel::none;
  bool refused = false;
  std::vector<double> grid_values;  // one per grid, coarsest first
};
LevelEstimate eigenvalue_at_lambda(double lambda, int n, const GridSpec& grid,
                                   int richardson_levels, double tol = 1e-10);

/// Grid-normalized eigenfunction samples for level n: sum y_j^2 h = 1, sign
/// fixed so the entry of largest magnitude is positive.
std::vector<double> eigenfunction(double lambda, int n, const GridSpec& grid,
                                  double tol = 1e-10);

struct LevelRecord {
  int n = 0;
  int l = 0;
  double W_computed = 0.0;
  double W_exact = 0.0;
  double rel_error = 0.0;
};

struct ExtrapolationInfo {
  std::vector<int> grids;  // subinterval counts actually used
  double order_p = 0.0;    // empirical order for the ground level (NaN if none)
  ExtrapolationModel model = ExtrapolationModel::none;
  bool refused = false;    // any level fell back to its finest grid value
};

/// Spectrum of the polar problem for magnetic number m. Levels are indexed
/// by (n, |m|): the stored m is |m|, so the payload for m and -m is
/// bit-for-bit identical (lambda depends on m^2 only).
struct SpectrumResult {
  int m = 0;
  double lambda = 0.0;
  std::vector<LevelRecord> levels;
  GridSpec grid;
  ExtrapolationInfo extrapolation;
};

/// Computes levels n = 0 .. levels-1 on grids N, 2N, ... (richardson_levels
/// of them, in {1, 2, 3}) and combines them per eigenvalue_at_lambda.
SpectrumResult compute_spectrum(int m, int levels, const GridSpec& grid,
                                int richardson_levels, double tol = 1e-10);

}  // namespace polareig::polar
