#include "polareig/polar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "polareig/errors.hpp"

namespace polareig::polar {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCriticalLambda = -0.125;

}  // namespace

QuantumNumbers QuantumNumbers::from_lm(int l, int m) {
  if (l < 0) throw std::domain_error("QuantumNumbers: l must be >= 0");
  if (std::abs(m) > l) throw std::domain_error("QuantumNumbers: |m| must be <= l");
  return QuantumNumbers{l, m, l - std::abs(m)};
}

QuantumNumbers QuantumNumbers::from_mn(int m, int n) {
  if (n < 0) throw std::domain_error("QuantumNumbers: n must be >= 0");
  return QuantumNumbers{std::abs(m) + n, m, n};
}

GridSpec::GridSpec(int subintervals) : n_(subintervals) {
  if (n_ < 16) throw std::invalid_argument("GridSpec: N must be >= 16");
}

double GridSpec::spacing() const { return kPi / static_cast<double>(n_); }

double GridSpec::node(int j) const {
  if (j < 1 || j > n_ - 1) throw std::out_of_range("GridSpec::node: j outside 1 .. N-1");
  return static_cast<double>(j) * spacing();
}

std::vector<double> GridSpec::nodes() const {
  std::vector<double> t(static_cast<std::size_t>(n_ - 1));
  for (int j = 1; j < n_; ++j) t[static_cast<std::size_t>(j - 1)] = node(j);
  return t;
}

double lambda_from_m(int m) {
  const double md = static_cast<double>(m);
  return (md * md - 0.25) / 2.0;
}

double exact_W(int l) {
  if (l < 0) throw std::domain_error("exact_W: l must be >= 0");
  const double x = static_cast<double>(l) + 0.5;
  return 0.5 * x * x;
}

double asymptotic_exponent(int m) { return static_cast<double>(std::abs(m)) + 0.5; }

tridiag::SymTridiag build_hamiltonian(double lambda, const GridSpec& grid) {
  if (lambda < kCriticalLambda)
    throw UnphysicalCoupling("build_hamiltonian: lambda = " + std::to_string(lambda) +
                             " below the physical floor -1/8");
  const int n = grid.interior_nodes();
  const double h = grid.spacing();
  const double inv_h2 = 1.0 / (h * h);

  std::vector<double> diag(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    const double s = std::sin(grid.node(j));
    diag[static_cast<std::size_t>(j - 1)] = inv_h2 + lambda / (s * s);
  }
  std::vector<double> offdiag(static_cast<std::size_t>(n - 1), -0.5 * inv_h2);
  return tridiag::SymTridiag(std::move(diag), std::move(offdiag));
}

RichardsonResult richardson(double v_h, double v_h2, double v_h4) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double d1 = v_h - v_h2;
  const double d2 = v_h2 - v_h4;
  if (d1 == 0.0 || d2 == 0.0 || d1 * d2 < 0.0 || !std::isfinite(d1) || !std::isfinite(d2))
    return RichardsonResult{v_h4, nan, true};
  const double ratio = d1 / d2;
  if (ratio == 1.0) return RichardsonResult{v_h4, nan, true};
  const double p = std::log2(ratio);
  // 2^p - 1 == ratio - 1 by construction of p
  return RichardsonResult{v_h4 + (v_h4 - v_h2) / (ratio - 1.0), p, false};
}

const char* to_string(ExtrapolationModel model) {
  switch (model) {
    case ExtrapolationModel::none: return "none";
    case ExtrapolationModel::power_assumed: return "power-assumed";
    case ExtrapolationModel::power_estimated: return "power";
    case ExtrapolationModel::log_critical: return "log";
  }
  return "none";
}

namespace {

// Three-point elimination of W_N = W - C/(ln N + b), the error model of the
// discrete eigenvalue at the critical coupling. Falls back (refused) when the
// sequence is not monotone with decreasing differences.
RichardsonResult log_model_extrapolation(const std::vector<double>& v,
                                         const std::vector<int>& grids) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double d1 = v[1] - v[0];
  const double d2 = v[2] - v[1];
  if (d1 == 0.0 || d2 == 0.0 || d1 * d2 < 0.0) return RichardsonResult{v[2], nan, true};
  const double r = d1 / d2;  // = (L2 + b)/(L0 + b) for the log model
  if (r <= 1.0) return RichardsonResult{v[2], nan, true};
  const double L0 = std::log(static_cast<double>(grids[0]));
  const double L1 = std::log(static_cast<double>(grids[1]));
  const double L2 = std::log(static_cast<double>(grids[2]));
  const double b = (L2 - r * L0) / (r - 1.0);
  if (!(L0 + b > 0.0)) return RichardsonResult{v[2], nan, true};
  const double C = d2 * (L1 + b) * (L2 + b) / (L1 - L0);
  return RichardsonResult{v[2] + C / (L2 + b), nan, false};
}

}  // namespace

LevelEstimate eigenvalue_at_lambda(double lambda, int n, const GridSpec& grid,
                                   int richardson_levels, double tol) {
  if (n < 0) throw std::domain_error("eigenvalue_at_lambda: n must be >= 0");
  if (richardson_levels < 1 || richardson_levels > 3)
    throw std::invalid_argument("eigenvalue_at_lambda: richardson_levels must be 1, 2 or 3");

  LevelEstimate est;
  GridSpec g = grid;
  std::vector<int> grids;
  for (int r = 0; r < richardson_levels; ++r) {
    est.grid_values.push_back(tridiag::eigenvalue_kth(build_hamiltonian(lambda, g), n, tol));
    grids.push_back(g.subintervals());
    if (r + 1 < richardson_levels) g = g.refined();
  }

  const double nan = std::numeric_limits<double>::quiet_NaN();
  switch (richardson_levels) {
    case 1:
      est.value = est.grid_values[0];
      est.order_p = nan;
      est.model = ExtrapolationModel::none;
      break;
    case 2: {
      // Two grids cannot support an empirical order; assume the scheme's
      // nominal second order.
      est.value = est.grid_values[1] + (est.grid_values[1] - est.grid_values[0]) / 3.0;
      est.order_p = 2.0;
      est.model = ExtrapolationModel::power_assumed;
      break;
    }
    default: {
      const RichardsonResult pw =
          richardson(est.grid_values[0], est.grid_values[1], est.grid_values[2]);
      est.order_p = pw.order_p;
      if (lambda <= kCriticalLambda) {
        const RichardsonResult lg = log_model_extrapolation(est.grid_values, grids);
        est.value = lg.extrapolated;
        est.refused = lg.refused;
        est.model = ExtrapolationModel::log_critical;
      } else {
        est.value = pw.extrapolated;
        est.refused = pw.refused;
        est.model = ExtrapolationModel::power_estimated;
      }
      break;
    }
  }
  return est;
}

std::vector<double> eigenfunction(double lambda, int n, const GridSpec& grid, double tol) {
  const tridiag::SymTridiag T = build_hamiltonian(lambda, grid);
  const double mu = tridiag::eigenvalue_kth(T, n, tol);

  // The residual of even an exact eigenvector sits at ~eps * ||T||, and the
  // discretized Hamiltonian's norm grows like N^2; ask the inverse iteration
  // for the tightest achievable target.
  double scale = 0.0;
  for (double d : T.diag()) scale = std::max(scale, std::abs(d));
  for (double e : T.offdiag()) scale = std::max(scale, std::abs(e));
  const double floor_tol =
      32.0 * std::numeric_limits<double>::epsilon() * scale / (1.0 + std::abs(mu));
  tridiag::EigenPair pair = tridiag::eigenvector(T, mu, std::max(tol, floor_tol));

  std::size_t peak = 0;
  for (std::size_t i = 1; i < pair.vector.size(); ++i)
    if (std::abs(pair.vector[i]) > std::abs(pair.vector[peak])) peak = i;
  const double sign = pair.vector[peak] < 0.0 ? -1.0 : 1.0;

  const double grid_scale = sign / std::sqrt(grid.spacing());
  for (double& v : pair.vector) v *= grid_scale;
  return std::move(pair.vector);
}

SpectrumResult compute_spectrum(int m, int levels, const GridSpec& grid, int richardson_levels,
                                double tol) {
  if (levels < 1) throw std::invalid_argument("compute_spectrum: levels must be >= 1");
  const int abs_m = std::abs(m);
  const double lambda = lambda_from_m(m);

  SpectrumResult result{abs_m, lambda, {}, grid, {}};
  result.levels.reserve(static_cast<std::size_t>(levels));

  for (int n = 0; n < levels; ++n) {
    const LevelEstimate est = eigenvalue_at_lambda(lambda, n, grid, richardson_levels, tol);
    const int l = abs_m + n;
    const double w_exact = exact_W(l);
    LevelRecord rec{n, l, est.value, w_exact, std::abs(est.value - w_exact) / w_exact};
    result.levels.push_back(rec);
    if (n == 0) {
      result.extrapolation.order_p = est.order_p;
      result.extrapolation.model = est.model;
      GridSpec g = grid;
      for (int r = 0; r < richardson_levels; ++r) {
        result.extrapolation.grids.push_back(g.subintervals());
        if (r + 1 < richardson_levels) g = g.refined();
      }
    }
    result.extrapolation.refused = result.extrapolation.refused || est.refused;
  }
  return result;
}

}  // namespace polareig::polar
