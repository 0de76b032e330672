#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "polareig/format.hpp"

using namespace polareig;
using namespace polareig::format;

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string field;
  while (std::getline(in, field, ',')) fields.push_back(field);
  return fields;
}

}  // namespace

TEST_CASE("float17 is fixed-width scientific and round-trip exact") {
  CHECK(float17(0.75) == "7.5000000000000000e-01");
  CHECK(float17(1.125) == "1.1250000000000000e+00");
  CHECK(float17(0.0) == "0.0000000000000000e+00");
  for (double x : {0.75, 1.125, std::numbers::pi, 1e-300, -2.5e17, 0.1, -0.125}) {
    const std::string s = float17(x);
    CHECK(std::strtod(s.c_str(), nullptr) == x);
  }
}

TEST_CASE("spectrum CSV header, shape and round trip") {
  const auto result = polar::compute_spectrum(1, 3, polar::GridSpec(64), 2);
  const std::string csv = spectrum_csv(result);
  const auto lines = split_lines(csv);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "n,l,m,W_computed,W_exact,rel_error");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split_csv(lines[i]);
    REQUIRE(fields.size() == 6);
    const auto& level = result.levels[i - 1];
    CHECK(fields[0] == std::to_string(level.n));
    CHECK(fields[1] == std::to_string(level.l));
    CHECK(fields[2] == std::to_string(result.m));
    CHECK(std::strtod(fields[3].c_str(), nullptr) == level.W_computed);
    CHECK(std::strtod(fields[4].c_str(), nullptr) == level.W_exact);
    CHECK(std::strtod(fields[5].c_str(), nullptr) == level.rel_error);
  }
}

TEST_CASE("spectrum JSON carries the documented keys in order") {
  const auto result = polar::compute_spectrum(0, 2, polar::GridSpec(64), 3);
  const std::string text = spectrum_json(result);
  // insertion order: m, lambda, levels, grid, extrapolation
  CHECK(text.find("\"m\"") < text.find("\"lambda\""));
  CHECK(text.find("\"lambda\"") < text.find("\"levels\""));
  CHECK(text.find("\"levels\"") < text.find("\"grid\""));
  CHECK(text.find("\"grid\"") < text.find("\"extrapolation\""));

  const auto j = nlohmann::json::parse(text);
  CHECK(j["m"] == 0);
  CHECK(j["lambda"] == -0.125);
  CHECK(j["levels"].size() == 2);
  CHECK(j["levels"][0]["W_exact"] == 0.125);
  CHECK(j["grid"]["N"] == 64);
  CHECK(j["extrapolation"]["grids"] == nlohmann::json::array({64, 128, 256}));
  CHECK(j["extrapolation"]["model"] == "log");
}

TEST_CASE("density table and CSV endpoints") {
  const auto table = density_table(1, 1, 181);
  const std::string csv = density_csv(table);
  const auto lines = split_lines(csv);
  REQUIRE(lines.size() == 182);
  CHECK(lines[0] == "theta,Theta_normalized,density");
  CHECK(split_csv(lines[1])[2] == float17(0.0));
  CHECK(split_csv(lines[181])[2] == float17(0.0));
  // middle sample is exactly pi/2 for 181 samples -> density 0.75
  const auto mid = split_csv(lines[91]);
  CHECK(std::strtod(mid[2].c_str(), nullptr) == doctest::Approx(0.75).epsilon(1e-12));

  const auto j = nlohmann::json::parse(density_json(table));
  CHECK(j["l"] == 1);
  CHECK(j["m"] == 1);
  CHECK(j["samples"] == 181);
  CHECK(j["density"].size() == 181);
}

TEST_CASE("hft JSON keys and values") {
  const auto report = hft::hft_verify(1, 0, polar::GridSpec(512), 1e-4, 1e-2, 2);
  const std::string text = hft_json(report);
  CHECK(text.find("\"m\"") < text.find("\"n\""));
  CHECK(text.find("\"dW_dlambda_fd\"") < text.find("\"expectation\""));
  CHECK(text.find("\"expectation\"") < text.find("\"analytic\""));
  const auto j = nlohmann::json::parse(text);
  CHECK(j["analytic"] == 1.5);
  CHECK(j["pass"] == true);
  CHECK(j["grid"]["N"] == 512);
}

TEST_CASE("transform table: identity column and hand value at pi/2") {
  const auto table = transform_table(1, polar::GridSpec(256), liouville::DerivativeMode::analytic);
  REQUIRE(table.theta.size() == 255);
  double max_diff = 0.0;
  for (double d : table.abs_diff) max_diff = std::max(max_diff, d);
  CHECK(max_diff < 1e-10);
  // node 128 of the even grid is pi/2: U_paper = (1 - 1/4)/2
  CHECK(table.U_paper[127] == doctest::Approx(0.375).epsilon(1e-14));

  const std::string csv = transform_csv(table);
  CHECK(split_lines(csv)[0] == "theta,U_eff,U_paper,abs_diff");
  CHECK(split_lines(csv).size() == 256);
}

TEST_CASE("transform at m = 0: the paper potential is negative everywhere") {
  const auto table = transform_table(0, polar::GridSpec(64), liouville::DerivativeMode::analytic);
  for (double u : table.U_paper) CHECK(u < 0.0);
  // -1/(8 sin^2) peaks at -0.125 in the middle of the interval
  CHECK(table.U_paper[31] == doctest::Approx(-0.125).epsilon(1e-14));
}

TEST_CASE("gnuplot emission references the data columns") {
  const auto table = density_table(2, 1, 41);
  const std::string data = density_plot_data(table);
  CHECK(split_lines(data).size() == 42);  // comment header + 41 rows
  const std::string script = density_plot_script("out.dat", 2, 1);
  CHECK(script.find("'out.dat' using 1:3") != std::string::npos);
}
