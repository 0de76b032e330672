#include "polareig/liouville.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "polareig/errors.hpp"

namespace polareig::liouville {

namespace {

constexpr double kPi = std::numbers::pi;

void validate_nodes(const std::vector<double>& theta) {
  if (theta.empty()) throw std::invalid_argument("WeightSpec: empty node sequence");
  double prev = 0.0;
  for (double t : theta) {
    if (!(t > 0.0 && t < kPi))
      throw std::domain_error("WeightSpec: node " + std::to_string(t) +
                              " outside the open interval (0, pi)");
    if (t <= prev) throw std::invalid_argument("WeightSpec: nodes must be strictly increasing");
    prev = t;
  }
}

double uniform_spacing(const std::vector<double>& theta) {
  const double h = theta[1] - theta[0];
  for (std::size_t j = 1; j + 1 < theta.size(); ++j) {
    if (std::abs((theta[j + 1] - theta[j]) - h) > 1e-9 * h)
      throw std::invalid_argument(
          "finite-difference derivatives require uniformly spaced nodes");
  }
  return h;
}

}  // namespace

WeightSpec WeightSpec::analytic_sin(std::vector<double> theta_nodes) {
  validate_nodes(theta_nodes);
  WeightSpec w;
  w.kind_ = WeightKind::analytic_sin;
  w.theta_ = std::move(theta_nodes);
  return w;
}

WeightSpec WeightSpec::sampled(std::vector<double> theta_nodes, std::vector<double> values) {
  validate_nodes(theta_nodes);
  if (values.size() != theta_nodes.size())
    throw std::invalid_argument("WeightSpec: values length mismatch");
  for (double v : values)
    if (!(v > 0.0)) throw std::domain_error("WeightSpec: weight must be strictly positive");
  WeightSpec w;
  w.kind_ = WeightKind::sampled;
  w.theta_ = std::move(theta_nodes);
  w.w_ = std::move(values);
  return w;
}

WeightSpec WeightSpec::sampled(std::vector<double> theta_nodes, std::vector<double> values,
                               std::vector<double> first_derivative,
                               std::vector<double> second_derivative) {
  WeightSpec w = sampled(std::move(theta_nodes), std::move(values));
  if (first_derivative.size() != w.theta_.size() || second_derivative.size() != w.theta_.size())
    throw std::invalid_argument("WeightSpec: derivative length mismatch");
  w.dw_ = std::move(first_derivative);
  w.ddw_ = std::move(second_derivative);
  return w;
}

double WeightSpec::value(std::size_t j) const {
  if (j >= theta_.size()) throw std::out_of_range("WeightSpec::value: node index");
  return kind_ == WeightKind::analytic_sin ? std::sin(theta_[j]) : w_[j];
}

bool WeightSpec::has_derivatives() const {
  return kind_ == WeightKind::analytic_sin || (dw_.has_value() && ddw_.has_value());
}

double WeightSpec::first_derivative(std::size_t j) const {
  if (j >= theta_.size()) throw std::out_of_range("WeightSpec::first_derivative: node index");
  if (kind_ == WeightKind::analytic_sin) return std::cos(theta_[j]);
  if (!dw_)
    throw DerivativeUnavailable(
        "sampled weight has no stored derivatives; request finite-difference mode");
  return (*dw_)[j];
}

double WeightSpec::second_derivative(std::size_t j) const {
  if (j >= theta_.size()) throw std::out_of_range("WeightSpec::second_derivative: node index");
  if (kind_ == WeightKind::analytic_sin) return -std::sin(theta_[j]);
  if (!ddw_)
    throw DerivativeUnavailable(
        "sampled weight has no stored derivatives; request finite-difference mode");
  return (*ddw_)[j];
}

WeightSpec WeightSpec::with_finite_difference_derivatives() const {
  const std::size_t n = theta_.size();
  if (n < 3)
    throw InsufficientGrid("finite-difference derivatives need at least 3 nodes, got " +
                           std::to_string(n));
  const double h = uniform_spacing(theta_);

  std::vector<double> w(n);
  for (std::size_t j = 0; j < n; ++j) w[j] = value(j);

  std::vector<double> dw(n), ddw(n);
  for (std::size_t j = 1; j + 1 < n; ++j) {
    dw[j] = (w[j + 1] - w[j - 1]) / (2.0 * h);
    ddw[j] = (w[j + 1] - 2.0 * w[j] + w[j - 1]) / (h * h);
  }
  // One-sided second-order stencils at the sequence ends (the 4-point second
  // derivative needs n >= 4; with exactly 3 nodes fall back to the 3-point
  // formula, first-order at the ends).
  dw[0] = (-3.0 * w[0] + 4.0 * w[1] - w[2]) / (2.0 * h);
  dw[n - 1] = (3.0 * w[n - 1] - 4.0 * w[n - 2] + w[n - 3]) / (2.0 * h);
  if (n >= 4) {
    ddw[0] = (2.0 * w[0] - 5.0 * w[1] + 4.0 * w[2] - w[3]) / (h * h);
    ddw[n - 1] = (2.0 * w[n - 1] - 5.0 * w[n - 2] + 4.0 * w[n - 3] - w[n - 4]) / (h * h);
  } else {
    ddw[0] = (w[0] - 2.0 * w[1] + w[2]) / (h * h);
    ddw[n - 1] = ddw[0];
  }

  return sampled(theta_, std::move(w), std::move(dw), std::move(ddw));
}

SturmLiouvilleProblem SturmLiouvilleProblem::for_magnetic_number(int m, WeightSpec w) {
  return SturmLiouvilleProblem{std::move(w), static_cast<double>(m) * static_cast<double>(m)};
}

double curvature_term(const WeightSpec& weight, std::size_t node_index) {
  const double w = weight.value(node_index);
  if (!(w > 0.0)) throw std::domain_error("curvature_term: weight must be positive");
  if (weight.kind() == WeightKind::analytic_sin) {
    const double cot = std::cos(weight.theta_nodes()[node_index]) / w;
    return 0.25 * cot * cot + 0.5;
  }
  const double dw = weight.first_derivative(node_index);
  const double ddw = weight.second_derivative(node_index);
  const double r = dw / w;
  return 0.25 * r * r - 0.5 * (ddw / w);
}

EffectivePotential transform(const SturmLiouvilleProblem& problem, DerivativeMode mode) {
  if (problem.singular_term_coefficient < 0.0)
    throw std::domain_error("transform: singular term coefficient must be >= 0");

  const WeightSpec* weight = &problem.weight;
  std::optional<WeightSpec> fd_weight;
  if (mode == DerivativeMode::finite_difference) {
    fd_weight = problem.weight.with_finite_difference_derivatives();
    weight = &*fd_weight;
  } else if (!weight->has_derivatives()) {
    throw DerivativeUnavailable(
        "transform: analytic mode needs a weight with derivatives available");
  }

  const std::size_t n = weight->size();
  EffectivePotential pot;
  pot.theta_nodes = weight->theta_nodes();
  pot.values.resize(n);
  pot.eigenvalue_scale = 0.5;
  for (std::size_t j = 0; j < n; ++j) {
    const double s = std::sin(pot.theta_nodes[j]);
    const double u = problem.singular_term_coefficient / (s * s);
    pot.values[j] = 0.5 * (u - curvature_term(*weight, j));
  }
  return pot;
}

std::vector<double> theta_to_y(std::span<const double> theta_samples,
                               std::span<const double> Theta_values, const WeightSpec& weight) {
  if (theta_samples.size() != Theta_values.size())
    throw std::invalid_argument("theta_to_y: sample length mismatch");
  if (theta_samples.size() != weight.size())
    throw std::invalid_argument("theta_to_y: samples must match the weight's nodes");
  std::vector<double> y(theta_samples.size());
  for (std::size_t j = 0; j < y.size(); ++j) {
    const double w = weight.value(j);
    if (!(w > 0.0)) throw std::domain_error("theta_to_y: weight must be positive at all nodes");
    y[j] = std::sqrt(w) * Theta_values[j];
  }
  return y;
}

std::vector<double> y_to_theta(std::span<const double> theta_samples,
                               std::span<const double> y_values, const WeightSpec& weight) {
  if (theta_samples.size() != y_values.size())
    throw std::invalid_argument("y_to_theta: sample length mismatch");
  if (theta_samples.size() != weight.size())
    throw std::invalid_argument("y_to_theta: samples must match the weight's nodes");
  std::vector<double> Theta(theta_samples.size());
  for (std::size_t j = 0; j < Theta.size(); ++j) {
    const double w = weight.value(j);
    if (!(w > 0.0)) throw std::domain_error("y_to_theta: weight must be positive at all nodes");
    Theta[j] = y_values[j] / std::sqrt(w);
  }
  return Theta;
}

}  // namespace polareig::liouville
