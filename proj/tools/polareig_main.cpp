// polareig -- spectra, densities and derivative identities of the polar
// Schrodinger problem on (0, pi).
//
// Subcommands: spectrum, density, hft, transform, verify.
// Exit codes: 0 success, 1 verification/convergence failure, 2 usage error.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "polareig/errors.hpp"
#include "polareig/format.hpp"
#include "polareig/hft.hpp"
#include "polareig/legendre.hpp"
#include "polareig/liouville.hpp"
#include "polareig/polar.hpp"
#include "polareig/verify.hpp"

namespace {

using namespace polareig;

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file '" << path << "'\n";
    return 1;
  }
  out << text;
  return out.good() ? 0 : 1;
}

struct SpectrumArgs {
  int m = 0;
  int levels = 1;
  int grid = 1024;
  int richardson = 3;
  std::string fmt = "csv";
  std::string output;
};

int run_spectrum(const SpectrumArgs& args) {
  const auto result =
      polar::compute_spectrum(args.m, args.levels, polar::GridSpec(args.grid), args.richardson);
  const std::string text =
      args.fmt == "json" ? format::spectrum_json(result) : format::spectrum_csv(result);
  return write_output(text, args.output);
}

struct DensityArgs {
  int l = 0;
  int m = 0;
  int samples = 181;
  std::string fmt = "csv";
  std::string output;
  std::string emit_plot;
};

int run_density(const DensityArgs& args) {
  const auto table = format::density_table(args.l, args.m, args.samples);
  if (!args.emit_plot.empty()) {
    const std::string data_path = args.emit_plot + ".dat";
    const std::string script_path = args.emit_plot + ".gp";
    if (write_output(format::density_plot_data(table), data_path) != 0) return 1;
    if (write_output(format::density_plot_script(data_path, table.l, table.m), script_path) != 0)
      return 1;
  }
  const std::string text =
      args.fmt == "json" ? format::density_json(table) : format::density_csv(table);
  return write_output(text, args.output);
}

struct HftArgs {
  int m = 0;
  int n = 0;
  double delta = 0.0;  // 0 = default step 1e-4 * max(1, |lambda|)
  int grid = 4096;
  int richardson = 3;
  double tol = 1e-3;
};

int run_hft(const HftArgs& args) {
  const auto report = hft::hft_verify(args.m, args.n, polar::GridSpec(args.grid), args.delta,
                                      args.tol, args.richardson);
  std::cout << format::hft_json(report);
  return report.pass ? 0 : 1;
}

struct TransformArgs {
  int m = 0;
  int grid = 256;
  std::string derivatives = "analytic";
  std::string output;
};

int run_transform(const TransformArgs& args) {
  const auto mode = args.derivatives == "fd" ? liouville::DerivativeMode::finite_difference
                                             : liouville::DerivativeMode::analytic;
  const auto table = format::transform_table(args.m, polar::GridSpec(args.grid), mode);
  return write_output(format::transform_csv(table), args.output);
}

int run_verify(const verify::VerifyConfig& config) {
  const auto results = verify::run_all(config);
  bool all_pass = true;
  for (const auto& r : results) {
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << "\n";
    all_pass = all_pass && r.pass;
  }
  std::cout << (all_pass ? "verification suite: all checks passed\n"
                         : "verification suite: FAILURES present\n");
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Numerical verification of the polar Schrodinger problem: the eigenvalue law "
      "W_l = (l + 1/2)^2 / 2, sign-of-m degeneracy, the Hellmann-Feynman identity "
      "dW/dlambda = <sin^-2 theta>, Liouville-transformed potentials and Legendre "
      "probability densities."};
  app.require_subcommand(1);

  SpectrumArgs spectrum_args;
  auto* spectrum = app.add_subcommand(
      "spectrum", "Eigenvalues W_n of the discretized polar Hamiltonian vs the closed form");
  spectrum->add_option("--m", spectrum_args.m, "magnetic quantum number (sign is immaterial)")
      ->required();
  spectrum->add_option("--levels", spectrum_args.levels, "number of levels n = 0, 1, ...")
      ->required()
      ->check(CLI::PositiveNumber);
  spectrum->add_option("--grid", spectrum_args.grid, "base grid subintervals N (default 1024)")
      ->check(CLI::Range(16, 1 << 20));
  spectrum->add_option("--richardson", spectrum_args.richardson,
                       "extrapolation levels: grids N, 2N, 4N (default 3)")
      ->check(CLI::Range(1, 3));
  spectrum->add_option("--format", spectrum_args.fmt, "csv or json (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  spectrum->add_option("--output", spectrum_args.output, "write to file instead of stdout");

  DensityArgs density_args;
  auto* density = app.add_subcommand(
      "density", "Probability density |N P_l^m(cos theta)|^2 sin theta on [0, pi]");
  density->add_option("--l", density_args.l, "angular momentum quantum number")->required();
  density->add_option("--m", density_args.m, "magnetic quantum number, |m| <= l")->required();
  density->add_option("--samples", density_args.samples, "uniform samples incl. endpoints (default 181)")
      ->check(CLI::Range(2, 1 << 20));
  density->add_option("--format", density_args.fmt, "csv or json (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  density->add_option("--output", density_args.output, "write to file instead of stdout");
  density->add_option("--emit-plot", density_args.emit_plot,
                      "write BASE.dat and gnuplot script BASE.gp");

  HftArgs hft_args;
  auto* hft_cmd = app.add_subcommand(
      "hft", "Hellmann-Feynman check: dW/dlambda by finite differences, discrete "
             "expectation and closed form");
  hft_cmd->add_option("--m", hft_args.m, "magnetic quantum number (m = 0 is refused)")
      ->required();
  hft_cmd->add_option("--n", hft_args.n, "level index n >= 0")->required()
      ->check(CLI::NonNegativeNumber);
  hft_cmd->add_option("--delta", hft_args.delta,
                      "finite-difference step in lambda (default 1e-4 * max(1, |lambda|))");
  hft_cmd->add_option("--grid", hft_args.grid, "grid subintervals N (default 4096)")
      ->check(CLI::Range(16, 1 << 20));
  hft_cmd->add_option("--richardson", hft_args.richardson,
                      "extrapolation levels for the shifted spectra (default 3)")
      ->check(CLI::Range(1, 3));
  hft_cmd->add_option("--tol", hft_args.tol, "pairwise relative tolerance (default 1e-3)")
      ->check(CLI::PositiveNumber);

  TransformArgs transform_args;
  auto* transform = app.add_subcommand(
      "transform", "Liouville-transformed effective potential vs (m^2 - 1/4)/(2 sin^2 theta)");
  transform->add_option("--m", transform_args.m, "magnetic quantum number")->required();
  transform->add_option("--grid", transform_args.grid, "grid subintervals N (default 256)")
      ->check(CLI::Range(16, 1 << 20));
  transform->add_option("--derivatives", transform_args.derivatives,
                        "weight derivatives: analytic or fd (default analytic)")
      ->check(CLI::IsMember({"analytic", "fd"}));
  transform->add_option("--output", transform_args.output, "write to file instead of stdout");

  verify::VerifyConfig config;
  auto* verify_cmd =
      app.add_subcommand("verify", "Run the full verification suite and report per-check results");
  verify_cmd->add_option("--max-l", config.max_l, "largest l for the Legendre checks (default 5)")
      ->check(CLI::Range(0, 10));
  verify_cmd->add_option("--tol-spectrum", config.tol_spectrum_m_pos,
                         "relative tolerance, eigenvalue law for |m| >= 1 (default 1e-4)");
  verify_cmd->add_option("--tol-spectrum-m0", config.tol_spectrum_m0,
                         "relative tolerance, eigenvalue law at m = 0 (default 5e-3)");
  verify_cmd->add_option("--tol-hft", config.tol_hft,
                         "pairwise relative tolerance, Hellmann-Feynman routes (default 1e-3)");
  verify_cmd->add_option("--tol-quadrature", config.tol_quadrature,
                         "quadrature/orthonormality/transform tolerance (default 1e-10)");
  verify_cmd->add_option("--grid", config.grid_N, "reference grid N (default 4096)")
      ->check(CLI::Range(32, 1 << 20));
  verify_cmd->add_option("--richardson", config.richardson_levels,
                         "extrapolation levels (default 3)")
      ->check(CLI::Range(1, 3));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (spectrum->parsed()) return run_spectrum(spectrum_args);
    if (density->parsed()) {
      if (std::abs(density_args.m) > density_args.l || density_args.l < 0) {
        std::cerr << "error: density requires 0 <= |m| <= l\n";
        return 2;
      }
      return run_density(density_args);
    }
    if (hft_cmd->parsed()) return run_hft(hft_args);
    if (transform->parsed()) return run_transform(transform_args);
    if (verify_cmd->parsed()) return run_verify(config);
  } catch (const DivergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
