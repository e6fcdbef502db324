#pragma once

#include <stdexcept>
#include <string>

namespace nilforge {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Config or file document does not match its schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Array lengths in a document disagree with the declared grid.
class LengthMismatch : public SchemaError {
 public:
  using SchemaError::SchemaError;
};

class ConstraintViolation : public Error {
 public:
  using Error::Error;
};

class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, double last_residual, int iterations)
      : Error(what), last_residual_(last_residual), iterations_(iterations) {}
  double last_residual() const noexcept { return last_residual_; }
  int iterations() const noexcept { return iterations_; }

 private:
  double last_residual_;
  int iterations_;
};

class SingularCoefficient : public Error {
 public:
  using Error::Error;
};

/// Support h vanishes (vertical point of the surface).
class SingularSupport : public Error {
 public:
  using Error::Error;
};

class ProjectionFailure : public Error {
 public:
  using Error::Error;
};

class NonPositiveSupport : public Error {
 public:
  using Error::Error;
};

class NotUpward : public Error {
 public:
  using Error::Error;
};

class DegenerateMetric : public Error {
 public:
  using Error::Error;
};

}  // namespace nilforge
