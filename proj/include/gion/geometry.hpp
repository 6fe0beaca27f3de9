#pragma once

#include "gion/ratpoly.hpp"

namespace gion {

/// Scale convention a quantity tuple is expressed in. The circumscribing
/// arc has radius 1 under UnitRadius, radius 2(1+t^2)^2 under Natural (the
/// rescaling that clears the denominators of the t-parametrization), and an
/// arbitrary positive radius under Rescaled.
enum class ScaleKind { UnitRadius, Natural, Rescaled };

struct Scale {
  ScaleKind kind = ScaleKind::UnitRadius;
  double radius = 1.0;  // arc radius under this scale
  static Scale unit() { return {ScaleKind::UnitRadius, 1.0}; }
  static Scale natural_for(double t);
  static Scale rescaled(double radius) { return {ScaleKind::Rescaled, radius}; }
};

std::string to_string(ScaleKind kind);

/// The four lengths of the shrine figure: chord a, sagitta m, square side
/// s, inscribed-circle diameter d, plus the aggregates built from them.
struct SegmentQuantities {
  double a = 0;
  double m = 0;
  double s = 0;
  double d = 0;
  Scale scale;
  double p() const { return a + m + s + d; }
  double q() const { return m / a + d / m + s / d; }
};

/// One feasible configuration described by every parameter of the solution
/// chain at once: segment half-angle phi, small-circle radius r (unit
/// scale), x = sqrt(1-2r), t = d/a, square corner angle theta, tangency
/// angle delta.
struct ParamPoint {
  double phi = 0;
  double r = 0;
  double x = 0;
  double t = 0;
  double theta = 0;
  double delta = 0;
};

/// Feasibility limits: q0 = q(t0) is the largest attainable q, t0 the
/// largest t = d/a, and r0, x0, phi0 the matching values of the other
/// parameters at the extreme configuration.
struct Constants {
  double q0;
  double t0;
  double r0;
  double x0;
  double phi0;
};

const Constants& constants();

/// Lengths at unit arc radius from the segment half-angle phi in
/// (0, phi0]. Throws FeasibilityError outside the range.
SegmentQuantities quantities_from_phi(double phi);

/// Lengths at unit arc radius from the inscribed-circle radius r in
/// (0, r0].
SegmentQuantities quantities_from_r(double r);

/// Lengths at unit arc radius from x = sqrt(1-2r) in [x0, 1).
SegmentQuantities quantities_from_x(double x);

/// Lengths at unit arc radius from t = d/a in (0, t0].
SegmentQuantities quantities_from_t_unit(double t);

/// Lengths at arc radius 2(1+t^2)^2, the scale on which m = 16t^2,
/// d = 16t^2(1-t^2), a = 16t(1-t^2) are polynomials in t.
SegmentQuantities quantities_from_t_scaled(double t);

/// Exact rational values of the three polynomial scaled quantities (the
/// square side s involves a radical and is omitted). Requires 0 < t < 1.
struct ExactScaled {
  Rational a;
  Rational m;
  Rational d;
};
ExactScaled scaled_quantities_exact(const Rational& t);

struct AggregatePair {
  double p = 0;
  double q = 0;
};

/// Aggregates of the natural-scale tuple: p(t) = a+m+s+d at radius
/// 2(1+t^2)^2 and the scale-invariant q(t), for t in (0, t0].
AggregatePair pq_of_t(double t);

/// The degree-10 polynomial P(t, q) in t whose unique root in (0, t0]
/// inverts q(t) for feasible q.
RatPoly gion_polynomial(const Rational& q);

/// All equivalent parameters of the configuration with ratio t = d/a.
ParamPoint param_from_t(double t);

/// Segment half-angle of the configuration attaining aggregate ratio q in
/// (2, q0]. Throws FeasibilityError outside the range.
double phi_of_q(double q);

}  // namespace gion
