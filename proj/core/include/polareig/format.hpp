#pragma once

#include <string>
#include <vector>

#include "polareig/hft.hpp"
#include "polareig/legendre.hpp"
#include "polareig/liouville.hpp"
#include "polareig/polar.hpp"

namespace polareig::format {

/// Fixed 17-significant-digit scientific notation ("%.16e"): lossless
/// round-trip for 64-bit floats, '.' decimal separator regardless of locale.
std::string float17(double x);

/// CSV with header "n,l,m,W_computed,W_exact,rel_error".
std::string spectrum_csv(const polar::SpectrumResult& result);
/// JSON object with keys, in order: m, lambda, levels[], grid, extrapolation.
std::string spectrum_json(const polar::SpectrumResult& result);

struct DensityTable {
  int l = 0;
  int m = 0;
  std::vector<double> theta;
  std::vector<double> Theta_normalized;  // N_l^m P_l^m(cos theta)
  std::vector<double> density;
};
DensityTable density_table(int l, int m, int samples);
/// CSV with header "theta,Theta_normalized,density".
std::string density_csv(const DensityTable& table);
/// JSON object with keys, in order: l, m, samples, theta, Theta_normalized, density.
std::string density_json(const DensityTable& table);
/// Whitespace-separated columns theta / Theta_normalized / density.
std::string density_plot_data(const DensityTable& table);
/// gnuplot script plotting column 3 of `data_path` against column 1.
std::string density_plot_script(const std::string& data_path, int l, int m);

/// JSON object with keys, in order: m, n, lambda, delta, grid,
/// dW_dlambda_fd, expectation, analytic, rel_disc_fd_vs_expectation,
/// rel_disc_fd_vs_analytic, rel_disc_expectation_vs_analytic, tolerance, pass.
std::string hft_json(const hft::HftReport& report);

struct TransformTable {
  std::vector<double> theta;
  std::vector<double> U_eff;
  std::vector<double> U_paper;   // (m^2 - 1/4)/(2 sin^2 theta)
  std::vector<double> abs_diff;  // |U_eff + 1/8 - U_paper|
};
TransformTable transform_table(int m, const polar::GridSpec& grid,
                               liouville::DerivativeMode mode);
/// CSV with header "theta,U_eff,U_paper,abs_diff".
std::string transform_csv(const TransformTable& table);

}  // namespace polareig::format
