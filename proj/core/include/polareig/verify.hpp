#pragma once

#include <string>
#include <vector>

#include "polareig/tridiag.hpp"

namespace polareig::verify {

/// Knobs of the one-shot verification suite. All tolerances must be
/// nonnegative (a zero tolerance is accepted and simply fails its checks).
struct VerifyConfig {
  int max_l = 5;                    // Legendre checks cover l, l' <= max_l (cap 10)
  double tol_spectrum_m_pos = 1e-4; // relative, eigenvalue law for |m| >= 1
  double tol_spectrum_m0 = 5e-3;    // relative, eigenvalue law at the critical coupling
  double tol_hft = 1e-3;            // pairwise relative, Hellmann-Feynman routes
  double tol_quadrature = 1e-10;    // quadrature / orthonormality / transform identity
  int grid_N = 4096;                // reference grid (spectrum sweep peaks at 2*grid_N)
  int richardson_levels = 3;

  void validate() const;  // throws std::invalid_argument
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<CheckResult> check_eigenvalue_law(const VerifyConfig& config);
std::vector<CheckResult> check_degeneracy(const VerifyConfig& config);
std::vector<CheckResult> check_hft(const VerifyConfig& config);
std::vector<CheckResult> check_transform_identity(const VerifyConfig& config);
std::vector<CheckResult> check_densities(const VerifyConfig& config);
std::vector<CheckResult> check_eigensolver_oracle(const VerifyConfig& config);
std::vector<CheckResult> check_eigenfunction_identity(const VerifyConfig& config);
std::vector<CheckResult> check_m0_divergence(const VerifyConfig& config);

/// All checks, in the order above.
std::vector<CheckResult> run_all(const VerifyConfig& config);

/// All eigenvalues (ascending) by brute force on the recursively evaluated
/// characteristic polynomial, locating each root by bisection between the
/// interlacing roots of the leading principal minors. Independent of the
/// Sturm-count bisection path; intended as an oracle for matrices of small
/// order with nonzero off-diagonal entries.
std::vector<double> charpoly_eigenvalues(const tridiag::SymTridiag& T);

}  // namespace polareig::verify
