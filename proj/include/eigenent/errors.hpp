#pragma once

#include <stdexcept>
#include <string>

namespace eigenent {

// Precondition violated by the caller (bad n, m, j, dimension, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The dense eigensolver or another numerical backend failed.
class BackendError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or unknown experiment configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double error_estimate)
      : std::runtime_error(what), error_estimate_(error_estimate) {}

  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double error_estimate_;
};

}  // namespace eigenent
