#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace awe {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition or parameter-domain violation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class DegenerateGeometryError : public DomainError {
 public:
  using DomainError::DomainError;
};

// An iterative scheme ran out of iterations.
class NonConvergenceError : public Error {
 public:
  using Error::Error;
};

// No admissible operating point exists.
class InfeasibleError : public Error {
 public:
  InfeasibleError(const std::string& what, std::string binding_constraint)
      : Error(what), binding_constraint_(std::move(binding_constraint)) {}

  const std::string& binding_constraint() const noexcept { return binding_constraint_; }

 private:
  std::string binding_constraint_;
};

// Aerodynamic evaluation outside the tabulated envelope.
class OutOfEnvelopeError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace awe
