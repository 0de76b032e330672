#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "polareig/errors.hpp"
#include "polareig/legendre.hpp"
#include "polareig/polar.hpp"

using namespace polareig;
using namespace polareig::legendre;

namespace {

constexpr double kPi = std::numbers::pi;

// Closed forms for l <= 3 with the Condon-Shortley phase; the independent
// oracle for the recurrence.
double closed_form(int l, int m, double x) {
  const double s = std::sqrt(1.0 - x * x);
  switch (l * 10 + m) {
    case 0: return 1.0;
    case 10: return x;
    case 11: return -s;
    case 20: return 0.5 * (3.0 * x * x - 1.0);
    case 21: return -3.0 * x * s;
    case 22: return 3.0 * (1.0 - x * x);
    case 30: return 0.5 * (5.0 * x * x * x - 3.0 * x);
    case 31: return -1.5 * (5.0 * x * x - 1.0) * s;
    case 32: return 15.0 * x * (1.0 - x * x);
    case 33: return -15.0 * s * s * s;
  }
  return 0.0;
}

// Composite Simpson rule on [0, pi]; independent route for the quadrature
// cross-checks.
double simpson(const std::function<double(double)>& f, int intervals) {
  const double h = kPi / intervals;
  double sum = f(0.0) + f(kPi);
  for (int i = 1; i < intervals; ++i) sum += f(i * h) * ((i % 2) ? 4.0 : 2.0);
  return sum * h / 3.0;
}

}  // namespace

TEST_CASE("recurrence matches the closed forms for all l <= 3") {
  for (int l = 0; l <= 3; ++l) {
    for (int m = 0; m <= l; ++m) {
      for (int i = 0; i <= 100; ++i) {
        const double x = -1.0 + 2.0 * i / 100.0;
        CHECK(assoc_legendre(l, m, x) ==
              doctest::Approx(closed_form(l, m, x)).epsilon(1e-12).scale(1.0));
      }
    }
  }
}

TEST_CASE("spot values") {
  CHECK(assoc_legendre(2, 0, 0.5) == doctest::Approx(-0.125).epsilon(1e-15));
  CHECK(assoc_legendre(1, 1, 0.0) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(assoc_legendre(3, 0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(assoc_legendre(7, 0, 1.0) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("m > l indexes the zero function; domain errors otherwise") {
  CHECK(assoc_legendre(2, 3, 0.4) == 0.0);
  CHECK(assoc_legendre(0, 5, -0.9) == 0.0);
  CHECK_THROWS_AS(assoc_legendre(2, 0, 1.5), std::domain_error);
  CHECK_THROWS_AS(assoc_legendre(-1, 0, 0.0), std::domain_error);
  CHECK_THROWS_AS(assoc_legendre(2, -1, 0.0), std::domain_error);
}

TEST_CASE("normalization factors from hand integrals") {
  CHECK(norm_factor(0, 0) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(norm_factor(1, 0) == doctest::Approx(std::sqrt(1.5)).epsilon(1e-15));
  CHECK(norm_factor(1, 1) == doctest::Approx(std::sqrt(0.75)).epsilon(1e-15));
  CHECK_THROWS_AS(norm_factor(1, 2), std::domain_error);
}

TEST_CASE("density hand values, endpoints, sign of m") {
  CHECK(density(1, 1, kPi / 2.0) == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(density(1, 1, 0.0) == 0.0);
  CHECK(density(1, 1, kPi) == 0.0);
  CHECK(density(5, 3, 0.0) == 0.0);
  for (double theta : {0.1, 0.7, 1.9, 3.0}) {
    CHECK(density(1, -1, theta) == density(1, 1, theta));
    CHECK(density(3, -2, theta) == density(3, 2, theta));
    CHECK(density(3, 2, theta) >= 0.0);
  }
  CHECK_THROWS_AS(density(1, 2, 1.0), std::domain_error);
  CHECK_THROWS_AS(density(1, 1, -0.1), std::domain_error);
  CHECK_THROWS_AS(density(1, 1, kPi + 0.1), std::domain_error);
}

TEST_CASE("density integrates to one for every l <= 10, |m| <= l") {
  const GaussRule rule = gauss_rule(32);
  for (int l = 0; l <= 10; ++l)
    for (int m = 0; m <= l; ++m)
      CHECK(orthonormality(l, l, m, rule) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("gauss rule: small orders by hand") {
  const GaussRule g1 = gauss_rule(1);
  REQUIRE(g1.nodes.size() == 1);
  CHECK(g1.nodes[0] == 0.0);
  CHECK(g1.weights[0] == doctest::Approx(2.0).epsilon(1e-15));

  const GaussRule g2 = gauss_rule(2);
  CHECK(g2.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(g2.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(g2.weights[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(g2.weights[1] == doctest::Approx(1.0).epsilon(1e-14));

  // order 5 integrates x^8 to the analytic moment 2/9
  const GaussRule g5 = gauss_rule(5);
  double q = 0.0;
  for (std::size_t i = 0; i < g5.nodes.size(); ++i)
    q += g5.weights[i] * std::pow(g5.nodes[i], 8);
  CHECK(q == doctest::Approx(2.0 / 9.0).epsilon(1e-13));

  CHECK_THROWS_AS(gauss_rule(0), std::invalid_argument);
  CHECK_THROWS_AS(gauss_rule(257), std::invalid_argument);
}

TEST_CASE("property: gauss rules are symmetric and exact through degree 2q-1") {
  for (int order : {1, 2, 3, 5, 8, 32, 64, 256}) {
    const GaussRule rule = gauss_rule(order);
    double wsum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      wsum += rule.weights[i];
      CHECK(rule.weights[i] > 0.0);
      // exact mirror symmetry by construction
      CHECK(rule.nodes[i] == -rule.nodes[rule.nodes.size() - 1 - i]);
      CHECK(rule.weights[i] == rule.weights[rule.nodes.size() - 1 - i]);
      if (i > 0) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
    }
    CHECK(std::abs(wsum - 2.0) < 1e-13);

    const int max_degree = std::min(2 * order - 1, 40);
    for (int k = 0; k <= max_degree; ++k) {
      double q = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        q += rule.weights[i] * std::pow(rule.nodes[i], k);
      const double exact = (k % 2 == 0) ? 2.0 / (k + 1.0) : 0.0;
      CHECK(std::abs(q - exact) < 1e-13);
    }
  }
}

TEST_CASE("orthonormality: diagonal, opposite parity, and a Simpson cross-check") {
  const GaussRule rule = gauss_rule(16);
  CHECK(orthonormality(1, 1, 0, rule) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(orthonormality(1, 2, 0, rule)) < 1e-14);

  const double gauss_value = orthonormality(2, 4, 1, rule);
  CHECK(std::abs(gauss_value) < 1e-10);
  const double simpson_value = simpson(
      [](double theta) {
        const double x = std::cos(theta);
        return norm_factor(2, 1) * assoc_legendre(2, 1, x) * norm_factor(4, 1) *
               assoc_legendre(4, 1, x) * std::sin(theta);
      },
      20000);
  CHECK(gauss_value == doctest::Approx(simpson_value).epsilon(1e-8).scale(1.0));

  CHECK_THROWS_AS(orthonormality(10, 10, 0, gauss_rule(8)), std::invalid_argument);
}

TEST_CASE("eigenfunction consistency with the discrete polar problem") {
  // (m = 1, n = 0): analytic Theta ~ sin(theta)
  CHECK(eigenfunction_consistency(1, 0, polar::GridSpec(1024)) < 1e-3);
  // (m = 0, n = 1): analytic Theta ~ cos(theta), diff decreasing in N
  const double coarse = eigenfunction_consistency(0, 1, polar::GridSpec(512));
  const double fine = eigenfunction_consistency(0, 1, polar::GridSpec(1024));
  CHECK(fine < coarse);
  // desk scale only
  CHECK_THROWS_AS(eigenfunction_consistency(4, 0, polar::GridSpec(64)), std::invalid_argument);
  CHECK_THROWS_AS(eigenfunction_consistency(1, 5, polar::GridSpec(64)), std::invalid_argument);
}

TEST_CASE("sampled density covers [0, pi] inclusively and vanishes at the ends") {
  const PolarDensity d = sample_density(2, 1, 181);
  REQUIRE(d.theta_samples.size() == 181);
  CHECK(d.theta_samples.front() == 0.0);
  CHECK(d.theta_samples.back() == kPi);
  CHECK(d.density_values.front() == 0.0);
  CHECK(d.density_values.back() == 0.0);
  CHECK(d.index.m == 1);
  const PolarDensity dm = sample_density(2, -1, 181);
  for (std::size_t i = 0; i < d.density_values.size(); ++i)
    CHECK(dm.density_values[i] == d.density_values[i]);
}
