#pragma once

#include <stdexcept>
#include <string>

namespace ybx {

/// Malformed input data (bad dimensions, unknown names, unparsable values).
struct ValidationError : std::invalid_argument {
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Shape mismatch between operands.
struct DimensionError : std::invalid_argument {
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Division by the field zero.
struct DivisionByZeroError : std::domain_error {
  explicit DivisionByZeroError(const std::string& what) : std::domain_error(what) {}
};

/// Exact elimination found no nonzero pivot: the matrix has no inverse.
struct SingularMatrixError : std::domain_error {
  explicit SingularMatrixError(const std::string& what) : std::domain_error(what) {}
};

/// Parameter triple matches no clause of the associative-family classification.
struct NotYangBaxterError : std::domain_error {
  explicit NotYangBaxterError(const std::string& what) : std::domain_error(what) {}
};

/// Colored inverse requested outside its invertibility domain (pu = qv or qu = pv).
struct NonInvertibleColorError : std::domain_error {
  explicit NonInvertibleColorError(const std::string& what) : std::domain_error(what) {}
};

/// Spectral inverse requested at s = q or s = 1/q.
struct NonInvertibleSpectralError : std::domain_error {
  explicit NonInvertibleSpectralError(const std::string& what) : std::domain_error(what) {}
};

struct ZNotCentralError : std::domain_error {
  explicit ZNotCentralError(const std::string& what) : std::domain_error(what) {}
};

struct ZNotEvenDegreeError : std::domain_error {
  explicit ZNotEvenDegreeError(const std::string& what) : std::domain_error(what) {}
};

struct ZNotHomogeneousError : std::domain_error {
  explicit ZNotHomogeneousError(const std::string& what) : std::domain_error(what) {}
};

struct BetaZeroError : std::domain_error {
  explicit BetaZeroError(const std::string& what) : std::domain_error(what) {}
};

struct QZeroError : std::domain_error {
  explicit QZeroError(const std::string& what) : std::domain_error(what) {}
};

/// Poisson bracket does not kill the unit ({x,1} != 0 for some x).
struct BracketUnitError : std::domain_error {
  explicit BracketUnitError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace ybx
