#include "gion/geometry.hpp"

#include "gion/errors.hpp"
#include "gion/solver.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace gion {

namespace {

// Upper range endpoints are accepted with this absolute slack so that
// boundary values which round just past the closed end still resolve.
constexpr double kBoundarySlack = 1e-12;

// A radicand within round-off of zero is clamped; anything more negative is
// a genuine domain violation.
double guarded_sqrt(double v, const char* what) {
  if (v < 0) {
    if (v < -1e-14) {
      throw FeasibilityError(std::string("negative radicand in ") + what);
    }
    v = 0;
  }
  return std::sqrt(v);
}

[[noreturn]] void range_error(const char* name, double value,
                              const char* range) {
  std::ostringstream msg;
  msg.precision(17);
  msg << name << " = " << value << " is outside the feasible range " << range;
  throw FeasibilityError(msg.str());
}

// R(u^2) with R(t) = 1 + 20t^2 - 26t^4 + 20t^6 + t^8, the discriminant-like
// radicand of the t-parametrization; positive on [0, 1].
double radicand_R(double t2) {
  return ((((t2 + 20) * t2 - 26) * t2 + 20) * t2) + 1;
}

}  // namespace

Scale Scale::natural_for(double t) {
  const double u = 1 + t * t;
  return {ScaleKind::Natural, 2 * u * u};
}

std::string to_string(ScaleKind kind) {
  switch (kind) {
    case ScaleKind::UnitRadius:
      return "unit";
    case ScaleKind::Natural:
      return "natural";
    case ScaleKind::Rescaled:
      return "rescaled";
  }
  return "unit";
}

const Constants& constants() {
  static const Constants k = [] {
    const double s5 = std::sqrt(5.0);
    Constants c{};
    c.q0 = -3.0 + 1.5 * s5 + 0.5 * std::sqrt(0.5 * (125.0 - 41.0 * s5));
    c.t0 = 0.5 * (1.0 - s5 + std::sqrt(2.0 * (5.0 - s5)));
    c.r0 = -1.0 + 1.0 / s5 + std::sqrt(2.0 - 2.0 / s5);
    c.x0 = std::sqrt(1.0 - 2.0 * c.r0);
    c.phi0 = std::numbers::pi / 2 + std::atan(0.5);
    return c;
  }();
  return k;
}

SegmentQuantities quantities_from_phi(double phi) {
  if (!(phi > 0) || !(phi <= constants().phi0 + kBoundarySlack)) {
    range_error("phi", phi, "(0, phi0]");
  }
  const double sin_phi = std::sin(phi);
  const double cos_phi = std::cos(phi);
  const double half = std::sin(0.5 * phi);

  SegmentQuantities out;
  out.scale = Scale::unit();
  out.a = 2 * sin_phi;
  out.m = 2 * half * half;  // = 1 - cos(phi), cancellation-free
  // s = (sqrt(4 + 4 sin^2 phi) - 2 cos phi)/4 rationalized, so nothing
  // cancels as phi -> 0
  out.s = sin_phi * sin_phi /
          (guarded_sqrt(1 + sin_phi * sin_phi, "quantities_from_phi") +
           cos_phi);
  // d = 2r where r solves cos(phi) = -r + sqrt(1 - 2r); substituting
  // 2 + 2 cos(phi) = 4 - 2m collapses it to r = m*w/(2 + w), w = sqrt(4 - 2m)
  const double w = guarded_sqrt(4 - 2 * out.m, "quantities_from_phi");
  out.d = 2 * out.m * w / (2 + w);
  return out;
}

SegmentQuantities quantities_from_r(double r) {
  if (!(r > 0) || !(r <= constants().r0 + kBoundarySlack)) {
    range_error("r", r, "(0, r0]");
  }
  const double w = guarded_sqrt(1 - 2 * r, "quantities_from_r");

  SegmentQuantities out;
  out.scale = Scale::unit();
  out.d = 2 * r;
  // m = 1 + r - sqrt(1 - 2r), rationalized against the conjugate
  out.m = r * (4 + r) / (1 + r + w);
  out.a = 2 * guarded_sqrt(r * (2 - r + 2 * w), "quantities_from_r");
  // s = (r + sqrt(A) - w)/2 with A = 1 + 2r - r^2 + 2rw; the difference of
  // radicals is rationalized (A - w^2 = r(4 - r + 2w))
  const double A = 1 + 2 * r - r * r + 2 * r * w;
  out.s = 0.5 * r *
          (1 + (4 - r + 2 * w) / (guarded_sqrt(A, "quantities_from_r") + w));
  return out;
}

SegmentQuantities quantities_from_x(double x) {
  const Constants& k = constants();
  if (!(x >= k.x0 - kBoundarySlack) || !(x < 1)) {
    range_error("x", x, "[x0, 1)");
  }
  const double one_minus = 1 - x;
  const double one_plus = 1 + x;

  SegmentQuantities out;
  out.scale = Scale::unit();
  out.d = one_minus * one_plus;
  // 3 - 2x - x^2 factors as (3 + x)(1 - x)
  out.m = 0.5 * (3 + x) * one_minus;
  out.a = one_plus * guarded_sqrt((3 + x) * one_minus, "quantities_from_x");
  // s = (B + sqrt(C))/4 cancels as x -> 1; with B = 1 - 2x - x^2 and
  // C = 7 + 4x - 2x^2 - 4x^3 - x^4, the identity
  // C - B^2 = 2 (1 - x)(1 + x)^2 (3 + x) gives an exact difference form
  // (sqrt(C) - B stays >= 1 on [0, 1))
  const double B = 1 - x * (2 + x);
  const double C = 7 + x * (4 + x * (-2 + x * (-4 - x)));
  out.s = one_minus * one_plus * one_plus * (3 + x) /
          (2 * (guarded_sqrt(C, "quantities_from_x") - B));
  return out;
}

SegmentQuantities quantities_from_t_unit(double t) {
  SegmentQuantities out = quantities_from_t_scaled(t);
  const double factor = Scale::natural_for(t).radius;
  out.a /= factor;
  out.m /= factor;
  out.s /= factor;
  out.d /= factor;
  out.scale = Scale::unit();
  return out;
}

SegmentQuantities quantities_from_t_scaled(double t) {
  if (!(t > 0) || !(t <= constants().t0 + kBoundarySlack)) {
    range_error("t", t, "(0, t0]");
  }
  const double t2 = t * t;
  const double one_minus = 1 - t2;

  SegmentQuantities out;
  out.scale = Scale::natural_for(t);
  out.a = 16 * t * one_minus;
  out.m = 16 * t2;
  out.d = 16 * t2 * one_minus;
  // s = sqrt(R) - B with B = 1 - 6t^2 + t^4 cancels as t -> 0; the identity
  // R - B^2 = 32 t^2 (1 - t^2)^2 gives the exact quotient form instead:
  const double sqrtR = guarded_sqrt(radicand_R(t2), "quantities_from_t");
  const double B = 1 - t2 * (6 - t2);
  out.s = 32 * t2 * one_minus * one_minus / (sqrtR + B);
  return out;
}

ExactScaled scaled_quantities_exact(const Rational& t) {
  if (!(t > 0) || !(t < 1)) {
    throw FeasibilityError(
        "scaled_quantities_exact: t must lie in (0, 1)");
  }
  const Rational t2 = t * t;
  const Rational one_minus = 1 - t2;
  return ExactScaled{16 * t * one_minus, 16 * t2, 16 * t2 * one_minus};
}

AggregatePair pq_of_t(double t) {
  if (!(t > 0) || !(t <= constants().t0 + kBoundarySlack)) {
    range_error("t", t, "(0, t0]");
  }
  const double t2 = t * t;
  const double sqrtR = guarded_sqrt(radicand_R(t2), "pq_of_t");
  // (R - 1)/t^2 = 20 - 26t^2 + 20t^4 + t^6
  const double excess = 20 + t2 * (-26 + t2 * (20 + t2));
  // sqrt(R) - 1 = t^2 * excess / (1 + sqrt(R)), avoiding the subtraction
  const double g = excess / (1 + sqrtR);

  AggregatePair out;
  out.p = 16 * t + 38 * t2 - 16 * t * t2 - 17 * t2 * t2 + t2 * g;
  out.q = (22 + 16 * t - 33 * t2 + 16 * t2 * t2 + g) / (16 * (1 - t2));
  return out;
}

RatPoly gion_polynomial(const Rational& q) {
  const Rational q2 = q * q;
  return RatPoly({
      q - 2,
      Rational(-1),
      8 * q2 - 23 * q + 18,
      22 - 16 * q,
      -(16 * q2 - 55 * q + 39),
      16 * q - 33,
      8 * q2 - 49 * q + 56,
      Rational(16),
      16 * q - 33,
      Rational(0),
      Rational(8),
  });
}

ParamPoint param_from_t(double t) {
  const SegmentQuantities unit = quantities_from_t_unit(t);
  const double t2 = t * t;
  const double u = 1 + t2;

  ParamPoint out;
  out.t = t;
  out.x = (1 - 3 * t2) / u;
  out.r = 4 * t2 * (1 - t2) / (u * u);
  out.phi = 2 * std::asin(guarded_sqrt(0.5 * unit.m, "param_from_t"));
  const double cos_phi = 1 - unit.m;
  out.theta = std::atan2(unit.s, cos_phi + unit.s);
  out.delta = std::asin(out.r / (1 - out.r));
  return out;
}

double phi_of_q(double q) {
  const Constants& k = constants();
  if (!(q > 2) || !(q <= k.q0 + kBoundarySlack)) {
    range_error("q", q, "(2, q0]");
  }
  const RootIsolation iso = isolate_root(rational_from_double(q), 1e-12);
  return param_from_t(iso.t).phi;
}

}  // namespace gion
