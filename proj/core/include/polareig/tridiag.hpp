#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace polareig::tridiag {

/// Symmetric tridiagonal matrix: `diag` holds the n diagonal entries,
/// `offdiag` the n-1 sub/superdiagonal entries. All entries must be finite.
class SymTridiag {
 public:
  SymTridiag(std::vector<double> diag, std::vector<double> offdiag);

  std::size_t order() const { return diag_.size(); }
  const std::vector<double>& diag() const { return diag_; }
  const std::vector<double>& offdiag() const { return offdiag_; }

  /// y = T x
  std::vector<double> apply(std::span<const double> x) const;

 private:
  std::vector<double> diag_;
  std::vector<double> offdiag_;
};

struct EigenPair {
  double value = 0.0;
  std::vector<double> vector;  // normalized, sum v_j^2 = 1
  double residual = 0.0;       // ||T v - value v||_inf
};

/// Interval [lo, hi] certain to contain all eigenvalues of T.
std::pair<double, double> gershgorin_bounds(const SymTridiag& T);

/// Number of eigenvalues of T strictly less than x (Sturm sign-agreement
/// count). Nondecreasing in x; 0 below the Gershgorin interval and order()
/// above it. Zero pivots in the recurrence are replaced by +eps*scale so an
/// exact hit on an eigenvalue of a leading minor still counts as "not below".
int sturm_count(const SymTridiag& T, double x);

/// k-th smallest eigenvalue (k = 0 is the smallest) by bisection on
/// sturm_count inside the Gershgorin interval. The bracket is maintained so
/// that count(lo) <= k < count(hi); the returned midpoint is within `tol` of
/// the eigenvalue (termination on width <= tol * max(1, |bracket|)).
/// Throws std::out_of_range for k outside [0, order()).
double eigenvalue_kth(const SymTridiag& T, int k, double tol = 1e-10);

/// Eigenvector by inverse iteration with shift `mu` (which must lie within
/// `tol`-distance of an eigenvalue). Starts from a fixed alternating-sign
/// seed so repeated runs are bit-identical; optionally re-orthogonalizes
/// against previously computed vectors from the same shift cluster.
/// Throws ConvergenceError if the residual contract
/// ||T v - mu v||_inf < tol * (1 + |mu|) is not met after max iterations.
EigenPair eigenvector(const SymTridiag& T, double mu, double tol = 1e-10,
                      std::span<const std::vector<double>> orthogonalize_against = {});

/// (v^T T v) / (v^T v). Throws std::domain_error for a zero vector.
double rayleigh_quotient(const SymTridiag& T, std::span<const double> v);

}  // namespace polareig::tridiag
