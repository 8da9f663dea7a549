#pragma once

#include <stdexcept>
#include <string>

namespace pittlab {

/// Rejected input: bad multiplicities, exponents out of range, malformed
/// weight or profile descriptors. Maps to CLI exit code 2.
class InvalidConfig : public std::invalid_argument {
public:
  explicit InvalidConfig(const std::string& what) : std::invalid_argument(what) {}
};

/// A computation could not reach its target accuracy (quadrature refinement
/// exhausted, calibration disagreement). Maps to CLI exit code 3.
class NumericalFailure : public std::runtime_error {
public:
  NumericalFailure(const std::string& what, double achieved_error)
      : std::runtime_error(what), achieved_error(achieved_error) {}
  double achieved_error;
};

/// Evaluation at a pole of the Gamma factors.
class PoleError : public std::domain_error {
public:
  explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

/// A tabulated weight whose superlevel sets cannot be bracketed.
class UnsupportedShape : public std::runtime_error {
public:
  explicit UnsupportedShape(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pittlab
