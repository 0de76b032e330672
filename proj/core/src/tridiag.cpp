#include "polareig/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>

#include "polareig/errors.hpp"

namespace polareig::tridiag {

namespace {

double max_abs_entry(const SymTridiag& T) {
  double scale = 0.0;
  for (double d : T.diag()) scale = std::max(scale, std::abs(d));
  for (double e : T.offdiag()) scale = std::max(scale, std::abs(e));
  return scale;
}

}  // namespace

SymTridiag::SymTridiag(std::vector<double> diag, std::vector<double> offdiag)
    : diag_(std::move(diag)), offdiag_(std::move(offdiag)) {
  if (diag_.empty()) throw std::invalid_argument("SymTridiag: order must be >= 1");
  if (offdiag_.size() + 1 != diag_.size())
    throw std::invalid_argument("SymTridiag: offdiag length must be order - 1");
  for (double d : diag_)
    if (!std::isfinite(d)) throw std::invalid_argument("SymTridiag: non-finite diagonal entry");
  for (double e : offdiag_)
    if (!std::isfinite(e)) throw std::invalid_argument("SymTridiag: non-finite off-diagonal entry");
}

std::vector<double> SymTridiag::apply(std::span<const double> x) const {
  const std::size_t n = order();
  if (x.size() != n) throw std::invalid_argument("SymTridiag::apply: size mismatch");
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = diag_[i] * x[i];
    if (i > 0) s += offdiag_[i - 1] * x[i - 1];
    if (i + 1 < n) s += offdiag_[i] * x[i + 1];
    y[i] = s;
  }
  return y;
}

std::pair<double, double> gershgorin_bounds(const SymTridiag& T) {
  const std::size_t n = T.order();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(T.offdiag()[i - 1]);
    if (i + 1 < n) r += std::abs(T.offdiag()[i]);
    lo = std::min(lo, T.diag()[i] - r);
    hi = std::max(hi, T.diag()[i] + r);
  }
  return {lo, hi};
}

int sturm_count(const SymTridiag& T, double x) {
  const std::size_t n = T.order();
  const double pivot_floor =
      std::numeric_limits<double>::epsilon() * std::max(max_abs_entry(T), 1.0);
  int count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    double v = 0.0;
    if (i > 0) {
      const double e = T.offdiag()[i - 1];
      v = e * e / q;
    }
    q = T.diag()[i] - x - v;
    if (q == 0.0) q = pivot_floor;  // exact hit counts as "not below x"
    if (q < 0.0) ++count;
  }
  return count;
}

double eigenvalue_kth(const SymTridiag& T, int k, double tol) {
  const int n = static_cast<int>(T.order());
  if (k < 0 || k >= n)
    throw std::out_of_range("eigenvalue_kth: k = " + std::to_string(k) +
                            " outside [0, " + std::to_string(n) + ")");
  if (!(tol > 0.0)) throw std::invalid_argument("eigenvalue_kth: tol must be positive");

  auto [lo, hi] = gershgorin_bounds(T);
  const double pad =
      std::numeric_limits<double>::epsilon() * std::max({1.0, std::abs(lo), std::abs(hi)}) *
      static_cast<double>(n);
  lo -= pad;
  hi += pad;

  for (int it = 0; it < 256; ++it) {
    const double width = hi - lo;
    if (width <= tol * std::max({1.0, std::abs(lo), std::abs(hi)})) break;
    const double mid = lo + 0.5 * width;
    if (mid <= lo || mid >= hi) break;  // interval at floating-point resolution
    if (sturm_count(T, mid) <= k)
      lo = mid;
    else
      hi = mid;
  }
  return lo + 0.5 * (hi - lo);
}

namespace {

// LU factorization of (T - mu I) with partial pivoting. Row swaps introduce a
// second superdiagonal. Tiny pivots are floored so the solve stays finite at
// an exact eigenvalue shift (the growth ends up in the eigen-direction, which
// is what inverse iteration wants).
struct ShiftedLU {
  std::vector<double> u0, u1, u2;  // upper bands
  std::vector<double> mult;        // elimination multipliers
  std::vector<char> swapped;

  ShiftedLU(const SymTridiag& T, double mu) {
    const std::size_t n = T.order();
    u0.resize(n);
    u1.assign(n, 0.0);
    u2.assign(n, 0.0);
    mult.assign(n, 0.0);
    swapped.assign(n, 0);

    double scale = std::max(max_abs_entry(T), std::abs(mu));
    const double floor = std::numeric_limits<double>::epsilon() *
                         std::max(scale, std::numeric_limits<double>::min() * 1e16);

    // Working bands of the shifted matrix.
    std::vector<double> a(n), b(n, 0.0);  // diag, super
    for (std::size_t i = 0; i < n; ++i) a[i] = T.diag()[i] - mu;
    for (std::size_t i = 0; i + 1 < n; ++i) b[i] = T.offdiag()[i];

    for (std::size_t i = 0; i + 1 < n; ++i) {
      const double sub = T.offdiag()[i];
      if (std::abs(a[i]) >= std::abs(sub)) {
        double piv = a[i];
        if (std::abs(piv) < floor) piv = (piv < 0.0) ? -floor : floor;
        const double m = sub / piv;
        u0[i] = piv;
        u1[i] = b[i];
        u2[i] = 0.0;
        mult[i] = m;
        a[i + 1] -= m * b[i];
      } else {
        // swap rows i and i+1
        swapped[i] = 1;
        double piv = sub;
        if (std::abs(piv) < floor) piv = (piv < 0.0) ? -floor : floor;
        const double m = a[i] / piv;
        u0[i] = piv;
        u1[i] = a[i + 1];
        u2[i] = (i + 2 < n) ? b[i + 1] : 0.0;
        mult[i] = m;
        a[i + 1] = b[i] - m * a[i + 1];
        if (i + 2 < n) b[i + 1] = -m * b[i + 1];
      }
    }
    double last = a[n - 1];
    if (std::abs(last) < floor) last = (last < 0.0) ? -floor : floor;
    u0[n - 1] = last;
  }

  // Solves (T - mu I) x = rhs in place.
  void solve(std::vector<double>& x) const {
    const std::size_t n = u0.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (swapped[i]) std::swap(x[i], x[i + 1]);
      x[i + 1] -= mult[i] * x[i];
    }
    for (std::size_t ii = n; ii-- > 0;) {
      double s = x[ii];
      if (ii + 1 < n) s -= u1[ii] * x[ii + 1];
      if (ii + 2 < n) s -= u2[ii] * x[ii + 2];
      x[ii] = s / u0[ii];
    }
  }
};

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

EigenPair eigenvector(const SymTridiag& T, double mu, double tol,
                      std::span<const std::vector<double>> orthogonalize_against) {
  const std::size_t n = T.order();
  if (!(tol > 0.0)) throw std::invalid_argument("eigenvector: tol must be positive");

  if (n == 1) {
    EigenPair p{mu, {1.0}, std::abs(T.diag()[0] - mu)};
    return p;
  }

  const ShiftedLU lu(T, mu);

  const auto deflate = [&](std::vector<double>& x) {
    for (const auto& w : orthogonalize_against) {
      double dot = 0.0;
      for (std::size_t i = 0; i < n; ++i) dot += x[i] * w[i];
      for (std::size_t i = 0; i < n; ++i) x[i] -= dot * w[i];
    }
  };

  // Deterministic alternating-sign seed.
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = ((i % 2) == 0) ? 1.0 : -1.0;
  const double seed_norm = norm2(v);
  for (double& x : v) x /= seed_norm;

  const double target = tol * (1.0 + std::abs(mu));
  double residual = std::numeric_limits<double>::infinity();
  constexpr int kMaxIter = 64;
  std::size_t restart = 0;

  for (int it = 0; it < kMaxIter; ++it) {
    lu.solve(v);

    double amax = 0.0;
    for (double x : v) amax = std::max(amax, std::abs(x));
    bool healthy = std::isfinite(amax) && amax > 0.0;
    if (healthy && amax > 1e290) {
      for (double& x : v) x /= amax;
      amax = 1.0;
    }

    double nv = 0.0;
    if (healthy) {
      const double pre = norm2(v);
      deflate(v);
      deflate(v);  // a second pass clears the roundoff left by the first
      nv = norm2(v);
      // solve direction (almost) inside the span of the previous vectors
      healthy = nv > 1e-3 * pre;
    }
    if (!healthy) {
      // restart from rotating canonical directions until one survives deflation
      std::fill(v.begin(), v.end(), 0.0);
      v[restart++ % n] = 1.0;
      deflate(v);
      deflate(v);
      nv = norm2(v);
      if (!(nv > 1e-3)) continue;
    }
    for (double& x : v) x /= nv;

    const std::vector<double> Tv = T.apply(v);
    residual = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      residual = std::max(residual, std::abs(Tv[i] - mu * v[i]));
    if (residual < target) return EigenPair{mu, std::move(v), residual};
  }
  char msg[128];
  std::snprintf(msg, sizeof(msg),
                "inverse iteration did not converge: last residual = %.3e, target = %.3e",
                residual, target);
  throw ConvergenceError(msg);
}

double rayleigh_quotient(const SymTridiag& T, std::span<const double> v) {
  const std::size_t n = T.order();
  if (v.size() != n) throw std::invalid_argument("rayleigh_quotient: size mismatch");
  double vv = 0.0;
  for (double x : v) vv += x * x;
  if (vv == 0.0) throw std::domain_error("rayleigh_quotient: zero vector");
  double vtv = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    vtv += T.diag()[i] * v[i] * v[i];
    if (i + 1 < n) vtv += 2.0 * T.offdiag()[i] * v[i] * v[i + 1];
  }
  return vtv / vv;
}

}  // namespace polareig::tridiag
