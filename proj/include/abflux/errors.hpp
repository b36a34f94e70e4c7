#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace abflux {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Argument outside the supported domain of a routine.
class DomainError : public Error {
public:
  using Error::Error;
};

// Parameters outside a restricted family (e.g. the hypergeometric family).
class UnsupportedParameters : public DomainError {
public:
  using DomainError::DomainError;
};

// Argument at a pole or otherwise singular point.
class SingularArgument : public DomainError {
public:
  using DomainError::DomainError;
};

// (C,D) fails the self-adjointness or rank condition.
class AdmissibilityError : public Error {
public:
  using Error::Error;
};

// Spectral parameter is (numerically) an eigenvalue of the extension.
class EigenvalueHit : public Error {
public:
  using Error::Error;
};

// Root bracketing or search exceeded its budget.
class SearchError : public Error {
public:
  using Error::Error;
};

// Log-grid too short for the support of the input.
class AliasingError : public Error {
public:
  using Error::Error;
};

class ConfigError : public Error {
public:
  using Error::Error;
};

// Quadrature did not reach the requested tolerance; carries the best estimate.
class AccuracyError : public Error {
public:
  AccuracyError(const std::string& what, std::complex<double> best, double err)
      : Error(what), best_(best), error_(err) {}
  std::complex<double> best_estimate() const { return best_; }
  double error_estimate() const { return error_; }

private:
  std::complex<double> best_;
  double error_;
};

}  // namespace abflux
