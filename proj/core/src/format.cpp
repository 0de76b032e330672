#include "polareig/format.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace polareig::format {

using ordered_json = nlohmann::ordered_json;

std::string float17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.16e", x);
  return buf;
}

namespace {

// NaN has no JSON representation; emit null (nlohmann would otherwise).
ordered_json json_number(double x) {
  if (std::isnan(x)) return nullptr;
  return x;
}

ordered_json grid_json(const polar::GridSpec& grid) {
  ordered_json g;
  g["N"] = grid.subintervals();
  g["h"] = grid.spacing();
  return g;
}

}  // namespace

std::string spectrum_csv(const polar::SpectrumResult& result) {
  std::ostringstream out;
  out << "n,l,m,W_computed,W_exact,rel_error\n";
  for (const auto& level : result.levels) {
    out << level.n << ',' << level.l << ',' << result.m << ',' << float17(level.W_computed)
        << ',' << float17(level.W_exact) << ',' << float17(level.rel_error) << '\n';
  }
  return out.str();
}

std::string spectrum_json(const polar::SpectrumResult& result) {
  ordered_json j;
  j["m"] = result.m;
  j["lambda"] = result.lambda;
  j["levels"] = ordered_json::array();
  for (const auto& level : result.levels) {
    ordered_json rec;
    rec["n"] = level.n;
    rec["l"] = level.l;
    rec["W_computed"] = level.W_computed;
    rec["W_exact"] = level.W_exact;
    rec["rel_error"] = level.rel_error;
    j["levels"].push_back(rec);
  }
  j["grid"] = grid_json(result.grid);
  ordered_json ex;
  ex["grids"] = result.extrapolation.grids;
  ex["order_p"] = json_number(result.extrapolation.order_p);
  ex["model"] = polar::to_string(result.extrapolation.model);
  ex["refused"] = result.extrapolation.refused;
  j["extrapolation"] = ex;
  return j.dump(2) + "\n";
}

DensityTable density_table(int l, int m, int samples) {
  const legendre::PolarDensity d = legendre::sample_density(l, m, samples);
  DensityTable table;
  table.l = l;
  table.m = d.index.m;
  table.theta = d.theta_samples;
  table.density = d.density_values;
  table.Theta_normalized.reserve(table.theta.size());
  const double nf = legendre::norm_factor(d.index.l, d.index.m);
  for (double theta : table.theta)
    table.Theta_normalized.push_back(nf *
                                     legendre::assoc_legendre(d.index.l, d.index.m, std::cos(theta)));
  return table;
}

std::string density_csv(const DensityTable& table) {
  std::ostringstream out;
  out << "theta,Theta_normalized,density\n";
  for (std::size_t i = 0; i < table.theta.size(); ++i) {
    out << float17(table.theta[i]) << ',' << float17(table.Theta_normalized[i]) << ','
        << float17(table.density[i]) << '\n';
  }
  return out.str();
}

std::string density_json(const DensityTable& table) {
  ordered_json j;
  j["l"] = table.l;
  j["m"] = table.m;
  j["samples"] = table.theta.size();
  j["theta"] = table.theta;
  j["Theta_normalized"] = table.Theta_normalized;
  j["density"] = table.density;
  return j.dump(2) + "\n";
}

std::string density_plot_data(const DensityTable& table) {
  std::ostringstream out;
  out << "# theta Theta_normalized density\n";
  for (std::size_t i = 0; i < table.theta.size(); ++i) {
    out << float17(table.theta[i]) << ' ' << float17(table.Theta_normalized[i]) << ' '
        << float17(table.density[i]) << '\n';
  }
  return out.str();
}

std::string density_plot_script(const std::string& data_path, int l, int m) {
  std::ostringstream out;
  out << "set xlabel 'theta (rad)'\n"
      << "set ylabel 'probability density'\n"
      << "set xrange [0:pi]\n"
      << "set grid\n"
      << "plot '" << data_path << "' using 1:3 with lines lw 2 title 'l=" << l << ", |m|=" << m
      << "'\n"
      << "pause -1 'press any key'\n";
  return out.str();
}

std::string hft_json(const hft::HftReport& report) {
  ordered_json j;
  j["m"] = report.m;
  j["n"] = report.n;
  j["lambda"] = report.lambda;
  j["delta"] = report.delta;
  j["grid"] = grid_json(report.grid);
  j["dW_dlambda_fd"] = report.dW_dlambda_fd;
  j["expectation"] = report.expectation;
  j["analytic"] = report.analytic;
  j["rel_disc_fd_vs_expectation"] = report.rel_disc_fd_vs_expectation;
  j["rel_disc_fd_vs_analytic"] = report.rel_disc_fd_vs_analytic;
  j["rel_disc_expectation_vs_analytic"] = report.rel_disc_expectation_vs_analytic;
  j["tolerance"] = report.tolerance;
  j["pass"] = report.pass;
  return j.dump(2) + "\n";
}

TransformTable transform_table(int m, const polar::GridSpec& grid,
                               liouville::DerivativeMode mode) {
  const auto problem = liouville::SturmLiouvilleProblem::for_magnetic_number(
      m, liouville::WeightSpec::analytic_sin(grid.nodes()));
  const liouville::EffectivePotential pot = liouville::transform(problem, mode);

  TransformTable table;
  table.theta = pot.theta_nodes;
  table.U_eff = pot.values;
  table.U_paper.reserve(table.theta.size());
  table.abs_diff.reserve(table.theta.size());
  const double m2 = static_cast<double>(m) * static_cast<double>(m);
  for (std::size_t j = 0; j < table.theta.size(); ++j) {
    const double s = std::sin(table.theta[j]);
    const double u_paper = (m2 - 0.25) / (2.0 * s * s);
    table.U_paper.push_back(u_paper);
    table.abs_diff.push_back(std::abs(table.U_eff[j] + 0.125 - u_paper));
  }
  return table;
}

std::string transform_csv(const TransformTable& table) {
  std::ostringstream out;
  out << "theta,U_eff,U_paper,abs_diff\n";
  for (std::size_t i = 0; i < table.theta.size(); ++i) {
    out << float17(table.theta[i]) << ',' << float17(table.U_eff[i]) << ','
        << float17(table.U_paper[i]) << ',' << float17(table.abs_diff[i]) << '\n';
  }
  return out.str();
}

}  // namespace polareig::format
