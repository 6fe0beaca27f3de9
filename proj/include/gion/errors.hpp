#pragma once

#include <stdexcept>
#include <string>

namespace gion {

/// Input outside the feasible range of the shrine configuration.
class FeasibilityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Root refinement was handed an interval without a sign change.
class BracketingError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Iteration cap reached before the requested tolerance; carries the last
/// enclosing bracket.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double lo, double hi)
      : std::runtime_error(what), lo_(lo), hi_(hi) {}
  double lo() const { return lo_; }
  double hi() const { return hi_; }

 private:
  double lo_;
  double hi_;
};

/// An endpoint of a root-counting interval is itself a root.
class EndpointRootError : public std::domain_error {
 public:
  enum class Endpoint { Lo, Hi };
  EndpointRootError(Endpoint which, const std::string& what)
      : std::domain_error(what), which_(which) {}
  Endpoint which() const { return which_; }

 private:
  Endpoint which_;
};

/// Modulus violates a reduction precondition (not prime, divides the
/// leading numerator, or divides a coefficient denominator).
class BadPrimeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The solver reached a state its uniqueness analysis rules out.
class InternalConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gion
