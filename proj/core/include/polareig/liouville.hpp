#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace polareig::liouville {

enum class WeightKind { analytic_sin, sampled };
enum class DerivativeMode { analytic, finite_difference };

/// Weight w(theta) of the Sturm-Liouville form (1/w) d/dtheta [w d/dtheta].
/// Either the closed-form sin(theta) evaluated on a set of interior nodes,
/// or arbitrary positive samples with optional derivative sequences.
/// Nodes must be strictly increasing inside (0, pi); sampled values must be
/// strictly positive.
class WeightSpec {
 public:
  static WeightSpec analytic_sin(std::vector<double> theta_nodes);
  static WeightSpec sampled(std::vector<double> theta_nodes, std::vector<double> values);
  static WeightSpec sampled(std::vector<double> theta_nodes, std::vector<double> values,
                            std::vector<double> first_derivative,
                            std::vector<double> second_derivative);

  WeightKind kind() const { return kind_; }
  const std::vector<double>& theta_nodes() const { return theta_; }
  std::size_t size() const { return theta_.size(); }

  double value(std::size_t j) const;
  bool has_derivatives() const;
  /// Throws DerivativeUnavailable for a sampled weight without stored
  /// derivatives (finite differences must be requested explicitly through
  /// transform's derivative mode).
  double first_derivative(std::size_t j) const;
  double second_derivative(std::size_t j) const;

  /// Copy of this weight with derivative sequences replaced by second-order
  /// finite differences of the samples (centered inside, one-sided at the
  /// sequence ends; requires >= 3 uniformly spaced nodes).
  WeightSpec with_finite_difference_derivatives() const;

 private:
  WeightSpec() = default;
  WeightKind kind_ = WeightKind::sampled;
  std::vector<double> theta_;
  std::vector<double> w_;
  std::optional<std::vector<double>> dw_;
  std::optional<std::vector<double>> ddw_;
};

/// Weighted eigenproblem -(1/w)(w Theta')' + u Theta = Lambda Theta on
/// (0, pi) with u(theta) = singular_term_coefficient / sin^2(theta).
struct SturmLiouvilleProblem {
  WeightSpec weight;
  double singular_term_coefficient = 0.0;  // m^2 when built from a magnetic number

  static SturmLiouvilleProblem for_magnetic_number(int m, WeightSpec w);
};

/// Potential of the transformed Schrodinger-form problem, tabulated on the
/// weight's nodes. eigenvalue_scale relates the two eigenvalues:
/// W = eigenvalue_scale * Lambda. For w = sin(theta) the values satisfy
/// U_eff(theta) + 1/8 = (m^2 - 1/4) / (2 sin^2 theta); the additive 1/8 is
/// reported separately rather than folded into the potential so the
/// transform stays meaningful for weights whose residual is not constant.
struct EffectivePotential {
  std::vector<double> theta_nodes;
  std::vector<double> values;
  double eigenvalue_scale = 0.5;
};

/// Extra potential generated by the substitution y = w^(1/2) Theta:
/// c(theta) = (1/4)(w'/w)^2 - (1/2)(w''/w). For w = sin(theta) this is
/// (1/4)cot^2(theta) + 1/2.
double curvature_term(const WeightSpec& weight, std::size_t node_index);

/// Maps the weighted problem to Schrodinger form:
/// U_eff = (1/2)[u - c] with u = singular_term_coefficient / sin^2(theta).
EffectivePotential transform(const SturmLiouvilleProblem& problem, DerivativeMode mode);

/// Pointwise y = w^(1/2) Theta and its inverse.
std::vector<double> theta_to_y(std::span<const double> theta_samples,
                               std::span<const double> Theta_values, const WeightSpec& weight);
std::vector<double> y_to_theta(std::span<const double> theta_samples,
                               std::span<const double> y_values, const WeightSpec& weight);

}  // namespace polareig::liouville
