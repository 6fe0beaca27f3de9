#include "gion/oracle.hpp"

#include "gion/errors.hpp"
#include "gion/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

namespace gion {

namespace {

double bisect(const std::function<double(double)>& f, double lo, double hi,
              const char* what) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0) {
    return lo;
  }
  if (fhi == 0) {
    return hi;
  }
  if ((flo > 0) == (fhi > 0)) {
    throw BracketingError(std::string(what) + ": no sign change");
  }
  for (int i = 0; i < 200 && hi - lo > 1e-14; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0) {
      return mid;
    }
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

ConstructionResult construct_from_phi(double phi) {
  if (!(phi > 0) || !(phi <= constants().phi0 + 1e-12)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "construct_from_phi: phi = " << phi
        << " is outside the feasible range (0, phi0]";
    throw FeasibilityError(msg.str());
  }
  const double cos_phi = std::cos(phi);

  // Square corner (sin(theta), cos(theta)) on the arc with the side resting
  // on the chord: cos(theta) = cos(phi) + sin(theta).
  const auto corner = [cos_phi](double theta) {
    return std::sin(theta) - std::cos(theta) + cos_phi;
  };
  const double theta =
      bisect(corner, 0.0, std::numbers::pi / 2, "construct_from_phi[theta]");
  const double s = std::sin(theta);

  // Circle centered (-r, cos(phi) + r) tangent to chord, side line, and
  // arc: r^2 + (cos(phi) + r)^2 = (1 - r)^2.
  const auto tangency = [cos_phi](double r) {
    const double v = cos_phi + r;
    return r * r + v * v - (1 - r) * (1 - r);
  };
  const double r = bisect(tangency, 0.0, 0.5, "construct_from_phi[circle]");

  ConstructionResult out;
  out.a = 2 * std::sin(phi);
  out.m = 1 - cos_phi;
  out.s = s;
  out.d = 2 * r;
  out.theta = theta;
  out.delta = std::asin(r / (1 - r));

  const double arc_residual = s * s + (cos_phi + s) * (cos_phi + s) - 1;
  const double touch_residual =
      (1 - r) * std::cos(out.delta) - r - (1 - out.m);
  out.max_constraint_residual =
      std::max({std::abs(corner(theta)), std::abs(tangency(r)),
                std::abs(arc_residual), std::abs(touch_residual)});
  return out;
}

IdentityReport certify_polynomial_identity() {
  // N0 and R are the radical-free parts of the defining identity
  // q = (N0(t) + sqrt(R(t))) / (16 t^2 (1 - t^2)).
  const RatPoly n0({-1, 0, 22, 16, -33, 0, 16});
  const RatPoly radicand({1, 0, 20, 0, -26, 0, 20, 0, 1});

  static const Rational kProbes[] = {Rational(2), Rational(9, 4),
                                     Rational(5, 2), Rational(3),
                                     Rational(7, 2)};

  IdentityReport report;
  report.ok = true;
  std::ostringstream detail;
  for (const Rational& q : kProbes) {
    // 16 q t^2 (t^2 - 1) + N0(t)
    const RatPoly inner =
        RatPoly({Rational(0), Rational(0), -16 * q, Rational(0), 16 * q}) + n0;
    const RatPoly lhs = inner * inner - radicand;
    const RatPoly rhs = RatPoly::monomial(2, Rational(32)) * gion_polynomial(q);
    if (lhs == rhs) {
      detail << "q = " << q.str() << ": identity holds exactly (degree "
             << lhs.degree() << ")\n";
      continue;
    }
    report.ok = false;
    const int top = std::max(lhs.degree(), rhs.degree());
    for (int k = 0; k <= top; ++k) {
      if (lhs.coeff(k) != rhs.coeff(k)) {
        detail << "q = " << q.str() << ": coefficient of t^" << k
               << " differs: " << lhs.coeff(k).str() << " vs "
               << rhs.coeff(k).str() << "\n";
        break;
      }
    }
  }
  report.detail = detail.str();
  return report;
}

VerificationReport verify_solution(const GionSolution& solution, double p,
                                   double q) {
  if (!(solution.a > 0) || !(solution.m > 0) || !(solution.s > 0) ||
      !(solution.d > 0)) {
    throw std::invalid_argument(
        "verify_solution: solution lengths must be positive");
  }
  // tan(phi/2) = m / (a/2)
  const double phi = 2 * std::atan(2 * solution.m / solution.a);
  const ConstructionResult rebuilt = construct_from_phi(phi);
  const double rebuilt_p = rebuilt.a + rebuilt.m + rebuilt.s + rebuilt.d;
  const double factor = p / rebuilt_p;

  const auto rel = [](double reference, double value) {
    return std::abs(value - reference) / std::abs(reference);
  };

  VerificationReport report;
  report.a_deviation = rel(solution.a, factor * rebuilt.a);
  report.m_deviation = rel(solution.m, factor * rebuilt.m);
  report.s_deviation = rel(solution.s, factor * rebuilt.s);
  report.d_deviation = rel(solution.d, factor * rebuilt.d);
  report.p_deviation =
      std::abs((solution.a + solution.m + solution.s + solution.d) - p) /
      std::abs(p);
  report.q_deviation =
      std::abs((solution.m / solution.a + solution.d / solution.m +
                solution.s / solution.d) -
               q) /
      std::abs(q);
  report.max_rel_deviation =
      std::max({report.a_deviation, report.m_deviation, report.s_deviation,
                report.d_deviation, report.p_deviation, report.q_deviation});
  report.constraint_residual = rebuilt.max_constraint_residual;

  std::ostringstream detail;
  detail.precision(13);
  detail << "independent reconstruction at phi = " << phi
         << " rescaled to p = " << p
         << "; max relative deviation = " << report.max_rel_deviation;
  report.detail = detail.str();
  return report;
}

}  // namespace gion
