#pragma once

#include <stdexcept>
#include <string>

namespace polareig {

/// An iterative solver failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// The requested quantity has no finite limit (e.g. dW/dlambda at the
/// critical coupling lambda = -1/8).
class DivergenceError : public std::domain_error {
 public:
  explicit DivergenceError(const std::string& what) : std::domain_error(what) {}
};

/// A sampled weight carries no derivative data and the caller did not ask
/// for finite-difference derivatives.
class DerivativeUnavailable : public std::invalid_argument {
 public:
  explicit DerivativeUnavailable(const std::string& what) : std::invalid_argument(what) {}
};

/// Too few nodes for the requested finite-difference stencil.
class InsufficientGrid : public std::invalid_argument {
 public:
  explicit InsufficientGrid(const std::string& what) : std::invalid_argument(what) {}
};

/// Coupling below the physical floor lambda = -1/8.
class UnphysicalCoupling : public std::domain_error {
 public:
  explicit UnphysicalCoupling(const std::string& what) : std::domain_error(what) {}
};

}  // namespace polareig
