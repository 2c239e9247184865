#pragma once

#include <stdexcept>
#include <string>

namespace triwell {

/// An argument lies outside the domain an operation accepts.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The result would not fit in a double (Airy arguments beyond |z| = 110).
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

/// A self-check failed: missed roots, broken parity ordering, a state that is
/// not a root of its matching condition.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adaptive quadrature hit its depth limit before meeting the tolerance.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double estimate, double error_estimate)
      : std::runtime_error(what), estimate_(estimate), error_estimate_(error_estimate) {}

  double estimate() const noexcept { return estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double estimate_;
  double error_estimate_;
};

/// The finite-difference oracle and the Airy solver disagree on the set of
/// states they should both see.
class MismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace triwell
