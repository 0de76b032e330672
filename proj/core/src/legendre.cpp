#include "polareig/legendre.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "polareig/errors.hpp"

namespace polareig::legendre {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

double assoc_legendre(int l, int m, double x) {
  if (l < 0 || m < 0) throw std::domain_error("assoc_legendre: l and m must be >= 0");
  if (std::abs(x) > 1.0)
    throw std::domain_error("assoc_legendre: x = " + std::to_string(x) + " outside [-1, 1]");
  if (m > l) return 0.0;

  // P_m^m = (-1)^m (2m-1)!! (1-x^2)^(m/2)
  double pmm = 1.0;
  if (m > 0) {
    const double somx2 = std::sqrt((1.0 - x) * (1.0 + x));
    double fact = 1.0;
    for (int i = 0; i < m; ++i) {
      pmm *= -fact * somx2;
      fact += 2.0;
    }
  }
  if (l == m) return pmm;

  // P_{m+1}^m = x (2m+1) P_m^m
  double pmmp1 = x * (2.0 * m + 1.0) * pmm;
  if (l == m + 1) return pmmp1;

  // (k - m) P_k^m = (2k-1) x P_{k-1}^m - (k+m-1) P_{k-2}^m
  double pk = 0.0;
  for (int k = m + 2; k <= l; ++k) {
    pk = ((2.0 * k - 1.0) * x * pmmp1 - (k + m - 1.0) * pmm) / (k - m);
    pmm = pmmp1;
    pmmp1 = pk;
  }
  return pk;
}

double norm_factor(int l, int m) {
  if (l < 0 || m < 0) throw std::domain_error("norm_factor: l and m must be >= 0");
  if (m > l) throw std::domain_error("norm_factor: m must be <= l");
  // (l+m)!/(l-m)! as a running product; fits a double through l = 64.
  double ratio = 1.0;
  for (int k = l - m + 1; k <= l + m; ++k) ratio *= static_cast<double>(k);
  return std::sqrt((2.0 * l + 1.0) / (2.0 * ratio));
}

double density(int l, int m, double theta) {
  const int abs_m = std::abs(m);
  if (l < 0) throw std::domain_error("density: l must be >= 0");
  if (abs_m > l) throw std::domain_error("density: |m| must be <= l");
  if (!(theta >= 0.0 && theta <= kPi))
    throw std::domain_error("density: theta outside [0, pi]");
  // sin vanishes identically at the endpoints; map the endpoint samples to
  // an exact zero instead of sin(pi) roundoff.
  if (theta == 0.0 || theta == kPi) return 0.0;
  const double Theta = norm_factor(l, abs_m) * assoc_legendre(l, abs_m, std::cos(theta));
  return Theta * Theta * std::sin(theta);
}

GaussRule gauss_rule(int order) {
  if (order < 1 || order > 256)
    throw std::invalid_argument("gauss_rule: order must be in [1, 256]");

  GaussRule rule;
  rule.order = order;
  rule.nodes.assign(static_cast<std::size_t>(order), 0.0);
  rule.weights.assign(static_cast<std::size_t>(order), 0.0);

  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // cosine initial guess for the i-th root (descending)
    double x = std::cos(kPi * (static_cast<double>(i) + 0.75) / (static_cast<double>(order) + 0.5));
    double dp = 0.0;
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      // evaluate P_order and P_{order-1} by the three-term recurrence
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 1; j <= order; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * x * p2 - (j - 1.0) * p3) / j;
      }
      dp = order * (x * p1 - p2) / (x * x - 1.0);
      const double dx = p1 / dp;
      const double x_prev = x;
      x -= dx;
      if (std::abs(dx) <= 1e-15 * std::max(1.0, std::abs(x)) || x == x_prev) {
        converged = true;
        break;
      }
    }
    if (!converged)
      throw ConvergenceError("gauss_rule: Newton iteration stalled at order " +
                             std::to_string(order));
    // refresh P' at the converged node for the weight
    double p1 = 1.0;
    double p2 = 0.0;
    for (int j = 1; j <= order; ++j) {
      const double p3 = p2;
      p2 = p1;
      p1 = ((2.0 * j - 1.0) * x * p2 - (j - 1.0) * p3) / j;
    }
    dp = order * (x * p1 - p2) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);

    // mirror-symmetric placement: x found near +1, partner at -x
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.nodes[static_cast<std::size_t>(order - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(order - 1 - i)] = w;
  }
  if (order % 2 == 1) rule.nodes[static_cast<std::size_t>(half - 1)] = 0.0;
  return rule;
}

double orthonormality(int l, int l_prime, int m, const GaussRule& rule) {
  if (l < 0 || l_prime < 0 || m < 0)
    throw std::domain_error("orthonormality: indices must be >= 0");
  if (m > l || m > l_prime) throw std::domain_error("orthonormality: m must be <= l, l'");
  if (rule.order < l + l_prime + 1)
    throw std::invalid_argument("orthonormality: rule order " + std::to_string(rule.order) +
                                " insufficient for l + l' = " + std::to_string(l + l_prime));
  const double na = norm_factor(l, m);
  const double nb = norm_factor(l_prime, m);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i];
    sum += rule.weights[i] * na * assoc_legendre(l, m, x) * nb * assoc_legendre(l_prime, m, x);
  }
  return sum;
}

double eigenfunction_consistency(int m, int n, const polar::GridSpec& grid, double tol) {
  const int abs_m = std::abs(m);
  if (abs_m > 3 || n < 0 || n > 4)
    throw std::invalid_argument("eigenfunction_consistency: desk scale is |m| <= 3, n <= 4");
  const int l = abs_m + n;

  const std::vector<double> numeric =
      polar::eigenfunction(polar::lambda_from_m(m), n, grid, tol);

  std::vector<double> analytic(numeric.size());
  const double nf = norm_factor(l, abs_m);
  double norm = 0.0;
  for (std::size_t j = 0; j < analytic.size(); ++j) {
    const double theta = grid.node(static_cast<int>(j) + 1);
    analytic[j] = std::sqrt(std::sin(theta)) * nf * assoc_legendre(l, abs_m, std::cos(theta));
    norm += analytic[j] * analytic[j];
  }
  norm = std::sqrt(norm);

  double numeric_norm = 0.0;
  for (double v : numeric) numeric_norm += v * v;
  numeric_norm = std::sqrt(numeric_norm);

  double dot = 0.0;
  for (std::size_t j = 0; j < analytic.size(); ++j) dot += analytic[j] * numeric[j];
  const double sign = dot < 0.0 ? -1.0 : 1.0;

  double max_diff = 0.0;
  for (std::size_t j = 0; j < analytic.size(); ++j) {
    const double diff = std::abs(analytic[j] / norm - sign * numeric[j] / numeric_norm);
    max_diff = std::max(max_diff, diff);
  }
  return max_diff;
}

PolarDensity sample_density(int l, int m, int samples) {
  if (samples < 2) throw std::invalid_argument("sample_density: need at least 2 samples");
  const int abs_m = std::abs(m);
  PolarDensity result;
  result.index = LegendreIndex{l, abs_m};
  result.theta_samples.reserve(static_cast<std::size_t>(samples));
  result.density_values.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    // endpoints land exactly on 0 and pi
    const double theta = kPi * (static_cast<double>(i) / static_cast<double>(samples - 1));
    result.theta_samples.push_back(theta);
    result.density_values.push_back(density(l, m, theta));
  }
  return result;
}

}  // namespace polareig::legendre
