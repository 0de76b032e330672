#include "polareig/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "polareig/errors.hpp"
#include "polareig/format.hpp"
#include "polareig/hft.hpp"
#include "polareig/legendre.hpp"
#include "polareig/liouville.hpp"
#include "polareig/polar.hpp"

namespace polareig::verify {

namespace {

constexpr double kPi = std::numbers::pi;

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", x);
  return buf;
}

}  // namespace

void VerifyConfig::validate() const {
  if (max_l < 0 || max_l > 10)
    throw std::invalid_argument("VerifyConfig: max_l must be in [0, 10]");
  if (tol_spectrum_m_pos < 0.0 || tol_spectrum_m0 < 0.0 || tol_hft < 0.0 ||
      tol_quadrature < 0.0)
    throw std::invalid_argument("VerifyConfig: tolerances must be nonnegative");
  if (grid_N < 32) throw std::invalid_argument("VerifyConfig: grid_N must be >= 32");
  if (richardson_levels < 1 || richardson_levels > 3)
    throw std::invalid_argument("VerifyConfig: richardson_levels must be 1, 2 or 3");
}

std::vector<CheckResult> check_eigenvalue_law(const VerifyConfig& config) {
  config.validate();
  std::vector<CheckResult> results;
  // Base grid N/2 so a 3-level sweep peaks at 2*grid_N (8192 by default).
  const polar::GridSpec base(config.grid_N / 2);
  constexpr int kLevels = 5;

  std::vector<polar::SpectrumResult> spectra;
  for (int m = 0; m <= 3; ++m)
    spectra.push_back(polar::compute_spectrum(m, kLevels, base, config.richardson_levels));

  for (int m = 0; m <= 3; ++m) {
    const double tol = (m == 0) ? config.tol_spectrum_m0 : config.tol_spectrum_m_pos;
    double max_rel = 0.0;
    bool increasing = true;
    for (int n = 0; n < kLevels; ++n) {
      const auto& level = spectra[static_cast<std::size_t>(m)].levels[static_cast<std::size_t>(n)];
      max_rel = std::max(max_rel, level.rel_error);
      if (n > 0 &&
          level.W_computed <=
              spectra[static_cast<std::size_t>(m)].levels[static_cast<std::size_t>(n - 1)].W_computed)
        increasing = false;
    }
    std::ostringstream detail;
    detail << "max_rel_err=" << sci(max_rel) << " tol=" << sci(tol) << " grids=" << base.subintervals()
           << "/" << 2 * base.subintervals() << "/" << 4 * base.subintervals();
    results.push_back({"spectrum-law m=" + std::to_string(m),
                       max_rel < tol && increasing, detail.str()});
  }

  // W strictly increasing in |m| at fixed n.
  bool mono_m = true;
  for (int n = 0; n < kLevels; ++n)
    for (int m = 1; m <= 3; ++m)
      if (spectra[static_cast<std::size_t>(m)].levels[static_cast<std::size_t>(n)].W_computed <=
          spectra[static_cast<std::size_t>(m - 1)].levels[static_cast<std::size_t>(n)].W_computed)
        mono_m = false;
  results.push_back({"spectrum-monotone-in-m", mono_m,
                     "W(n, |m|) strictly increasing along |m| = 0,1,2,3 for n = 0..4"});
  return results;
}

std::vector<CheckResult> check_degeneracy(const VerifyConfig& config) {
  config.validate();
  std::vector<CheckResult> results;
  const polar::GridSpec grid(512);
  for (int m = 1; m <= 3; ++m) {
    const auto plus = polar::compute_spectrum(m, 3, grid, 2);
    const auto minus = polar::compute_spectrum(-m, 3, grid, 2);
    bool identical = plus.m == minus.m && plus.lambda == minus.lambda;
    for (std::size_t i = 0; i < plus.levels.size() && identical; ++i)
      identical = plus.levels[i].W_computed == minus.levels[i].W_computed &&
                  plus.levels[i].W_exact == minus.levels[i].W_exact &&
                  plus.levels[i].rel_error == minus.levels[i].rel_error;
    identical = identical && format::spectrum_csv(plus) == format::spectrum_csv(minus) &&
                format::spectrum_json(plus) == format::spectrum_json(minus);
    results.push_back({"degeneracy m=+-" + std::to_string(m), identical,
                       identical ? "payload and serialized bytes identical"
                                 : "payloads differ"});
  }
  return results;
}

std::vector<CheckResult> check_hft(const VerifyConfig& config) {
  config.validate();
  std::vector<CheckResult> results;
  const polar::GridSpec grid(config.grid_N);
  for (int m = 1; m <= 3; ++m) {
    for (int n = 0; n <= 2; ++n) {
      const auto report =
          hft::hft_verify(m, n, grid, 1e-4, config.tol_hft, config.richardson_levels);
      bool pass = report.pass;
      pass = pass && report.dW_dlambda_fd > 0.0 && report.expectation > 0.0 &&
             report.analytic > 0.0;
      pass = pass && report.expectation >= 1.0 - 1e-3;
      // spot values fixed by the closed form
      if (m == 1 && n == 0) pass = pass && std::abs(report.analytic - 1.5) == 0.0;
      if (m == 2 && n == 0) pass = pass && std::abs(report.analytic - 1.25) == 0.0;
      const double max_disc =
          std::max({report.rel_disc_fd_vs_expectation, report.rel_disc_fd_vs_analytic,
                    report.rel_disc_expectation_vs_analytic});
      std::ostringstream detail;
      detail << "fd=" << sci(report.dW_dlambda_fd) << " <sin^-2>=" << sci(report.expectation)
             << " analytic=" << sci(report.analytic) << " max_disc=" << sci(max_disc)
             << " tol=" << sci(config.tol_hft);
      results.push_back(
          {"hft m=" + std::to_string(m) + " n=" + std::to_string(n), pass, detail.str()});
    }
  }
  return results;
}

std::vector<CheckResult> check_transform_identity(const VerifyConfig& config) {
  config.validate();
  std::vector<CheckResult> results;

  // Analytic derivatives: identity to near machine precision on the
  // boundary-attached grid.
  const polar::GridSpec grid(512);
  for (int m = 0; m <= 3; ++m) {
    const auto table = format::transform_table(m, grid, liouville::DerivativeMode::analytic);
    double max_diff = 0.0;
    for (double d : table.abs_diff) max_diff = std::max(max_diff, d);
    std::ostringstream detail;
    detail << "max|U_eff + 1/8 - U_paper|=" << sci(max_diff) << " tol="
           << sci(config.tol_quadrature) << " N=" << grid.subintervals();
    results.push_back({"transform-identity m=" + std::to_string(m),
                       max_diff < config.tol_quadrature, detail.str()});
  }

  // Finite-difference derivatives: second-order convergence on grids with a
  // fixed interior span [pi/8, 7pi/8]. (On grids whose first node approaches
  // the endpoint the first-node error does not vanish, so the max-norm is
  // measured at fixed span.)
  double errs[3];
  int counts[3] = {33, 65, 129};
  for (int g = 0; g < 3; ++g) {
    const int count = counts[g];
    std::vector<double> nodes(static_cast<std::size_t>(count));
    const double a = kPi / 8.0;
    const double b = 7.0 * kPi / 8.0;
    for (int i = 0; i < count; ++i)
      nodes[static_cast<std::size_t>(i)] = a + (b - a) * static_cast<double>(i) / (count - 1);
    const auto problem = liouville::SturmLiouvilleProblem::for_magnetic_number(
        1, liouville::WeightSpec::analytic_sin(nodes));
    const auto pot = liouville::transform(problem, liouville::DerivativeMode::finite_difference);
    double max_diff = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      const double s = std::sin(nodes[j]);
      const double u_paper = (1.0 - 0.25) / (2.0 * s * s);
      max_diff = std::max(max_diff, std::abs(pot.values[j] + 0.125 - u_paper));
    }
    errs[g] = max_diff;
  }
  const double r1 = errs[0] / errs[1];
  const double r2 = errs[1] / errs[2];
  std::ostringstream detail;
  detail << "errors=" << sci(errs[0]) << "/" << sci(errs[1]) << "/" << sci(errs[2])
         << " ratios=" << sci(r1) << "," << sci(r2) << " (need >= 3)";
  results.push_back({"transform-fd-convergence", r1 >= 3.0 && r2 >= 3.0, detail.str()});
  return results;
}

std::vector<CheckResult> check_densities(const VerifyConfig& config) {
  config.validate();
  std::vector<CheckResult> results;
  const legendre::GaussRule rule = legendre::gauss_rule(32);

  // Quadrature invariants of the rule itself.
  {
    double wsum = 0.0;
    for (double w : rule.weights) wsum += w;
    double max_dev = std::abs(wsum - 2.0);
    for (int k = 0; k <= 2 * rule.order - 1; ++k) {
      double q = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        q += rule.weights[i] * std::pow(rule.nodes[i], k);
      const double exact = (k % 2 == 0) ? 2.0 / (k + 1.0) : 0.0;
      max_dev = std::max(max_dev, std::abs(q - exact));
    }
    results.push_back({"gauss-rule order=32", max_dev < 1e-13,
                       "max moment deviation " + sci(max_dev) + " (tol 1e-13)"});
  }

  // Normalization of the density for every l <= max_l, |m| <= l.
  {
    double max_dev = 0.0;
    for (int l = 0; l <= config.max_l; ++l) {
      for (int m = 0; m <= l; ++m) {
        const double integral = legendre::orthonormality(l, l, m, rule);
        max_dev = std::max(max_dev, std::abs(integral - 1.0));
      }
    }
    std::ostringstream detail;
    detail << "max |integral - 1| = " << sci(max_dev) << " for l <= " << config.max_l
           << ", tol=" << sci(config.tol_quadrature);
    results.push_back({"density-normalization", max_dev < config.tol_quadrature, detail.str()});
  }

  // Orthogonality across l != l' for m <= 2.
  {
    double max_off = 0.0;
    for (int m = 0; m <= 2; ++m)
      for (int l = m; l <= config.max_l; ++l)
        for (int lp = m; lp < l; ++lp)
          max_off = std::max(max_off, std::abs(legendre::orthonormality(l, lp, m, rule)));
    std::ostringstream detail;
    detail << "max |off-diagonal| = " << sci(max_off) << " for m <= 2, l,l' <= " << config.max_l
           << ", tol=" << sci(config.tol_quadrature);
    results.push_back({"orthogonality", max_off < config.tol_quadrature, detail.str()});
  }

  // Spot value and sign-of-m independence.
  {
    const double spot = legendre::density(1, 1, kPi / 2.0);
    bool pass = std::abs(spot - 0.75) < 1e-12;
    for (double theta : {0.3, 1.0, 2.2}) {
      pass = pass && legendre::density(2, 1, theta) == legendre::density(2, -1, theta);
      pass = pass && legendre::density(3, 2, theta) == legendre::density(3, -2, theta);
    }
    pass = pass && legendre::density(1, 1, 0.0) == 0.0 && legendre::density(1, 1, kPi) == 0.0;
    results.push_back({"density-spot", pass,
                       "density(1,1,pi/2)=" + sci(spot) + " (0.75 within 1e-12); "
                       "sign-of-m independence exact; endpoints zero"});
  }
  return results;
}

namespace {

double charpoly_value(const tridiag::SymTridiag& T, int k, double x) {
  // determinant of the leading k x k principal minor of (T - x I)
  double p_prev = 1.0;
  double p = T.diag()[0] - x;
  for (int i = 2; i <= k; ++i) {
    const double e = T.offdiag()[static_cast<std::size_t>(i - 2)];
    const double p_new = (T.diag()[static_cast<std::size_t>(i - 1)] - x) * p - e * e * p_prev;
    p_prev = p;
    p = p_new;
  }
  return k == 0 ? 1.0 : p;
}

double charpoly_bisect(const tridiag::SymTridiag& T, int k, double a, double b) {
  double fa = charpoly_value(T, k, a);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    const double fm = charpoly_value(T, k, mid);
    if (fm == 0.0) return mid;
    if ((fa < 0.0) == (fm < 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

std::vector<double> charpoly_eigenvalues(const tridiag::SymTridiag& T) {
  const int n = static_cast<int>(T.order());
  auto [lo, hi] = tridiag::gershgorin_bounds(T);
  const double pad = 1e-3 * std::max(1.0, hi - lo);
  lo -= pad;
  hi += pad;

  // Roots of successive leading minors strictly interlace (off-diagonals
  // nonzero), so each step brackets every new root between old ones.
  std::vector<double> roots{T.diag()[0]};
  for (int k = 2; k <= n; ++k) {
    std::vector<double> next;
    next.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      const double a = (i == 0) ? lo : roots[static_cast<std::size_t>(i - 1)];
      const double b = (i == k - 1) ? hi : roots[static_cast<std::size_t>(i)];
      next.push_back(charpoly_bisect(T, k, a, b));
    }
    roots = std::move(next);
  }
  return roots;
}

std::vector<CheckResult> check_eigensolver_oracle(const VerifyConfig& config) {
  config.validate();
  std::mt19937 rng(987654321u);
  std::uniform_real_distribution<double> diag_dist(-2.0, 2.0);
  std::uniform_real_distribution<double> off_dist(0.05, 2.0);
  std::uniform_int_distribution<int> size_dist(1, 8);
  std::uniform_int_distribution<int> sign_dist(0, 1);

  double max_dev = 0.0;
  bool monotone = true;
  bool bounded = true;
  constexpr int kMatrices = 100;
  for (int t = 0; t < kMatrices; ++t) {
    const int n = size_dist(rng);
    std::vector<double> d(static_cast<std::size_t>(n));
    std::vector<double> e(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
    for (double& x : d) x = diag_dist(rng);
    for (double& x : e) x = (sign_dist(rng) ? 1.0 : -1.0) * off_dist(rng);
    const tridiag::SymTridiag T(d, e);

    const std::vector<double> oracle = charpoly_eigenvalues(T);
    const auto [lo, hi] = tridiag::gershgorin_bounds(T);
    for (int k = 0; k < n; ++k) {
      const double mu = tridiag::eigenvalue_kth(T, k, 1e-12);
      max_dev = std::max(max_dev, std::abs(mu - oracle[static_cast<std::size_t>(k)]));
      bounded = bounded && mu >= lo - 1e-9 && mu <= hi + 1e-9;
    }

    int prev = -1;
    for (int s = 0; s <= 40; ++s) {
      const double x = (lo - 0.5) + (hi - lo + 1.0) * static_cast<double>(s) / 40.0;
      const int c = tridiag::sturm_count(T, x);
      if (c < prev) monotone = false;
      prev = c;
    }
    monotone = monotone && tridiag::sturm_count(T, lo - 1.0) == 0 &&
               tridiag::sturm_count(T, hi + 1.0) == n;
  }

  std::vector<CheckResult> results;
  results.push_back({"eigensolver-oracle", max_dev < 1e-8,
                     "100 random tridiagonals (order <= 8): max |bisection - charpoly root| = " +
                         sci(max_dev) + " (tol 1e-8)"});
  results.push_back({"sturm-monotone", monotone && bounded,
                     "counts nondecreasing in x, 0 below and n above the Gershgorin interval"});
  return results;
}

std::vector<CheckResult> check_eigenfunction_identity(const VerifyConfig& config) {
  config.validate();
  std::vector<CheckResult> results;
  const polar::GridSpec fine(config.grid_N);
  const polar::GridSpec coarse(config.grid_N / 2);
  for (int m = 0; m <= 2; ++m) {
    for (int n = 0; n <= 2; ++n) {
      const double d_fine = legendre::eigenfunction_consistency(m, n, fine);
      const double d_coarse = legendre::eigenfunction_consistency(m, n, coarse);
      const bool pass = d_fine < 1e-2 && d_fine < d_coarse;
      std::ostringstream detail;
      detail << "unit-vector max diff " << sci(d_coarse) << " -> " << sci(d_fine) << " at N="
             << coarse.subintervals() << " -> " << fine.subintervals() << " (tol 1e-2, decreasing)";
      results.push_back({"eigenfunction m=" + std::to_string(m) + " n=" + std::to_string(n),
                         pass, detail.str()});
    }
  }
  return results;
}

std::vector<CheckResult> check_m0_divergence(const VerifyConfig& config) {
  config.validate();
  double prev = 0.0;
  bool increasing = true;
  std::ostringstream seq;
  for (int N : {512, 1024, 2048, 4096}) {
    const polar::GridSpec grid(N);
    const auto y = polar::eigenfunction(polar::lambda_from_m(0), 0, grid);
    const double expectation = hft::expectation_inv_sin2(y, grid);
    if (expectation <= prev) increasing = false;
    if (prev != 0.0) seq << " < ";
    seq << sci(expectation);
    prev = expectation;
  }

  bool refused = false;
  try {
    (void)hft::hft_verify(0, 0, polar::GridSpec(config.grid_N));
  } catch (const DivergenceError&) {
    refused = true;
  }

  std::vector<CheckResult> results;
  results.push_back({"hft-m0-divergence", increasing && refused,
                     "<sin^-2> strictly increasing: " + seq.str() +
                         (refused ? "; hft refuses m = 0" : "; hft did NOT refuse m = 0")});
  return results;
}

std::vector<CheckResult> run_all(const VerifyConfig& config) {
  config.validate();
  std::vector<CheckResult> all;
  for (auto* fn : {check_eigenvalue_law, check_degeneracy, check_hft, check_transform_identity,
                   check_densities, check_eigensolver_oracle, check_eigenfunction_identity,
                   check_m0_divergence}) {
    auto part = fn(config);
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

}  // namespace polareig::verify
