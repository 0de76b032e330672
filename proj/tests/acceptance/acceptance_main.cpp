// Acceptance suite: exercises every contract of the artifact end to end and
// prints one line per criterion. Usage:
//
//   acceptance <path-to-cli-binary> <path-to-golden-dir>
//
// Exit code 0 iff every criterion passes.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "../support/process.hpp"
#include "polareig/errors.hpp"
#include "polareig/verify.hpp"

using testsupport::read_file;
using testsupport::run_command;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s -- %s\n", pass ? "PASS" : "FAIL", criterion, what.c_str(),
              detail.c_str());
  if (!pass) ++g_failures;
}

bool all_pass(const std::vector<polareig::verify::CheckResult>& results, std::string& failures) {
  bool ok = true;
  for (const auto& r : results) {
    if (!r.pass) {
      ok = false;
      failures += " [" + r.name + ": " + r.detail + "]";
    }
  }
  return ok;
}

std::string summarize(const std::vector<polareig::verify::CheckResult>& results) {
  std::string failures;
  if (all_pass(results, failures)) return "all " + std::to_string(results.size()) + " checks ok";
  return "FAILING:" + failures;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <cli-binary> <golden-dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::string golden = argv[2];

  polareig::verify::VerifyConfig config;
  config.max_l = 10;  // the density/orthonormality criteria run at full desk scale

  // 1. Eigenvalue law: m in {1,2,3} within 1e-4, m = 0 within 5e-3, grids
  //    peak at 8192, runtime bounded by the suite timeout.
  {
    const auto results = polareig::verify::check_eigenvalue_law(config);
    std::string failures;
    report(1, "eigenvalue law W_l = (l + 1/2)^2 / 2", all_pass(results, failures),
           summarize(results));
  }

  // 2. Degeneracy in the sign of m: library payloads bit-identical and CLI
  //    output byte-identical for m in {1,2,3}.
  {
    const auto results = polareig::verify::check_degeneracy(config);
    std::string failures;
    bool pass = all_pass(results, failures);
    std::string detail = summarize(results);
    for (int m = 1; m <= 3 && pass; ++m) {
      const std::string flags = " --levels 2 --grid 512 --richardson 2";
      const auto plus = run_command(cli + " spectrum --m " + std::to_string(m) + flags);
      const auto minus = run_command(cli + " spectrum --m -" + std::to_string(m) + flags);
      if (plus.exit_code != 0 || minus.exit_code != 0 || plus.output != minus.output) {
        pass = false;
        detail += " [CLI bytes differ for m=" + std::to_string(m) + "]";
      }
    }
    report(2, "spectrum for m and -m identical", pass, detail + "; CLI bytes identical");
  }

  // 3. Hellmann-Feynman: three routes agree pairwise within 1e-3 for
  //    (m,n) in {1,2,3}x{0,1,2}; spot values 1.5 and 1.25; positivity.
  {
    const auto results = polareig::verify::check_hft(config);
    std::string failures;
    report(3, "dW/dlambda = <sin^-2 theta> by three routes", all_pass(results, failures),
           summarize(results));
  }

  // 4. Liouville transformation identity, analytic derivatives to 1e-10 and
  //    finite-difference convergence factor >= 3 per halving.
  {
    const auto results = polareig::verify::check_transform_identity(config);
    std::string failures;
    report(4, "U_eff + 1/8 = (m^2 - 1/4)/(2 sin^2 theta)", all_pass(results, failures),
           summarize(results));
  }

  // 5. Probability densities: normalization and orthogonality to 1e-10 for
  //    l, l' <= 10, spot density(1,1,pi/2) = 0.75.
  {
    const auto results = polareig::verify::check_densities(config);
    std::string failures;
    report(5, "weighted Legendre densities", all_pass(results, failures), summarize(results));
  }

  // 6. Eigensolver oracle: bisection vs characteristic-polynomial roots on
  //    100 random tridiagonals within 1e-8; Sturm counts monotone.
  {
    const auto results = polareig::verify::check_eigensolver_oracle(config);
    std::string failures;
    report(6, "bisection vs charpoly oracle", all_pass(results, failures), summarize(results));
  }

  // 7. Eigenfunction identity P_l^|m| = P_{|m|+n}^|m|: unit-vector max-norm
  //    difference < 1e-2 at N = 4096 and decreasing under refinement.
  {
    const auto results = polareig::verify::check_eigenfunction_identity(config);
    std::string failures;
    report(7, "analytic vs numeric eigenfunctions", all_pass(results, failures),
           summarize(results));
  }

  // 8. m = 0 divergence: discrete expectation strictly increasing across
  //    N = 512..4096, and the hft command refuses m = 0 with exit 1.
  {
    const auto results = polareig::verify::check_m0_divergence(config);
    std::string failures;
    bool pass = all_pass(results, failures);
    std::string detail = summarize(results);
    const auto refused = run_command(cli + " hft --m 0 --n 0 2>&1");
    if (refused.exit_code != 1) {
      pass = false;
      detail += " [hft --m 0 exited " + std::to_string(refused.exit_code) + ", want 1]";
    } else {
      detail += "; hft --m 0 exits 1";
    }
    report(8, "critical-coupling divergence at m = 0", pass, detail);
  }

  // 9. CLI determinism: golden bytes for three commands, byte-stable across
  //    repeated runs, exit-code contract, and `verify` exits 0 on defaults.
  {
    bool pass = true;
    std::string detail;

    const struct {
      const char* args;
      const char* file;
    } goldens[] = {
        {"spectrum --m 1 --levels 3", "spectrum_m1_levels3.csv"},
        {"density --l 1 --m 1", "density_l1_m1.csv"},
        {"transform --m 1", "transform_m1.csv"},
    };
    for (const auto& g : goldens) {
      const auto first = run_command(cli + " " + g.args);
      const auto second = run_command(cli + " " + g.args);
      const std::string expected = read_file(golden + "/" + g.file);
      if (first.exit_code != 0 || first.output != expected) {
        pass = false;
        detail += std::string(" [golden mismatch: ") + g.args + "]";
      }
      if (first.output != second.output) {
        pass = false;
        detail += std::string(" [nondeterministic: ") + g.args + "]";
      }
    }

    if (run_command(cli + " density --l 1 --m 2 2>/dev/null").exit_code != 2) {
      pass = false;
      detail += " [usage error did not exit 2]";
    }

    const auto verify_run = run_command(cli + " verify > /dev/null");
    if (verify_run.exit_code != 0) {
      pass = false;
      detail += " [verify exited " + std::to_string(verify_run.exit_code) + "]";
    }
    report(9, "CLI determinism, golden files, verify exit 0", pass,
           pass ? "3 goldens byte-identical across runs; exit codes 0/1/2 honored; verify ok"
                : detail);
  }

  if (g_failures == 0) {
    std::printf("acceptance: all 9 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
  return 1;
}
