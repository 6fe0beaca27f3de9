#pragma once

#include "gion/geometry.hpp"
#include "gion/ratpoly.hpp"

#include <optional>
#include <string>
#include <utility>

namespace gion {

enum class FeasibilityVerdict { Feasible, QTooSmall, QTooLarge, PNonpositive };

std::string to_string(FeasibilityVerdict verdict);

struct Feasibility {
  FeasibilityVerdict verdict = FeasibilityVerdict::Feasible;
  /// The violated limit (2, q0, or 0 for p), when applicable.
  std::optional<double> bound;
  bool feasible() const { return verdict == FeasibilityVerdict::Feasible; }
};

/// Classifies an aggregate pair: p must be positive and q must lie in
/// (2, q0], where the upper end carries 1e-12 of slack for values that
/// round just past the boundary.
Feasibility classify(double p, double q);

struct RootIsolation {
  double t = 0;
  double bracket_lo = 0;
  double bracket_hi = 0;
  int iterations = 0;
  /// Exact Sturm count of P(., q) on (0, cap]; 1 for every feasible q.
  int root_count = 0;
  /// Upper endpoint of the counting interval actually used.
  Rational cap;
  /// True when a refined root within 1e-9 above t0 was snapped to t0
  /// (the q = q0 boundary case).
  bool clamped_to_t0 = false;
};

/// Certified inversion of q(t): Sturm-counts the roots of P(t, q) on
/// (0, 14/25], expects exactly one, and refines it to within tol.
/// Endpoint collisions move the cap along a fixed ladder of nearby
/// rationals; a count other than one raises InternalConsistencyError.
/// Requires q in (2, q0] up to the boundary slack (else FeasibilityError).
RootIsolation isolate_root(const Rational& q, double tol);

struct GionSolution {
  double a = 0;
  double m = 0;
  double s = 0;
  double d = 0;
  double t = 0;
  double p_residual = 0;  // (a+m+s+d) - p
  double q_residual = 0;  // (m/a + d/m + s/d) - q
  std::pair<double, double> root_bracket{0, 0};
  int iterations = 0;
};

/// Recovers the four lengths from the aggregates: isolates t from q, builds
/// the natural-scale tuple, and rescales it so the lengths sum to p.
/// Throws FeasibilityError on infeasible input.
GionSolution solve(double p, const Rational& q, double tol = 1e-12);
GionSolution solve(double p, double q, double tol = 1e-12);

/// |t_recovered - t| after a p,q round trip through solve(). Requires t in
/// (0, t0].
double roundtrip_error(double t);

}  // namespace gion
