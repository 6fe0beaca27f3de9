#pragma once

#include "gion/solver.hpp"

#include <string>

namespace gion {

/// Configuration rebuilt from phi by enforcing the defining constraints
/// directly (bisection on the raw constraint functions), independent of the
/// closed-form quantity chains.
struct ConstructionResult {
  double a = 0;
  double m = 0;
  double s = 0;
  double d = 0;
  double theta = 0;  // square corner angle on the arc
  double delta = 0;  // tangency angle of the inscribed circle
  /// Largest absolute residual of the defining constraints at the
  /// constructed configuration.
  double max_constraint_residual = 0;
};

/// Rebuilds the unit-radius configuration for phi in (0, phi0]: the square
/// side from sin(theta) - cos(theta) + cos(phi) = 0 on (0, pi/2), the
/// circle radius from the tangency condition
/// r^2 + (cos(phi) + r)^2 - (1 - r)^2 = 0 on (0, 1/2), both by plain
/// bisection (width <= 1e-14, at most 200 steps).
ConstructionResult construct_from_phi(double phi);

struct IdentityReport {
  bool ok = false;
  std::string detail;
};

/// Expands (16 t^2 (t^2 - 1) q + N0(t))^2 - R(t) in exact arithmetic at
/// q in {2, 9/4, 5/2, 3, 7/2} and compares it coefficient-by-coefficient
/// with 32 t^2 P(t, q); any mismatch names the first differing degree.
IdentityReport certify_polynomial_identity();

struct VerificationReport {
  double a_deviation = 0;
  double m_deviation = 0;
  double s_deviation = 0;
  double d_deviation = 0;
  double p_deviation = 0;
  double q_deviation = 0;
  /// Largest of the six relative deviations.
  double max_rel_deviation = 0;
  double constraint_residual = 0;
  std::string detail;
};

/// Checks a solution against an independent reconstruction: reads phi off
/// the solution (tan(phi/2) = 2m/a), rebuilds the configuration with
/// construct_from_phi, rescales it to the same p, and reports the relative
/// deviations of the four lengths plus the aggregate residuals.
VerificationReport verify_solution(const GionSolution& solution, double p,
                                   double q);

}  // namespace gion
