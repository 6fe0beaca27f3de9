#include "gion/solver.hpp"

#include "gion/errors.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace gion {

std::string to_string(FeasibilityVerdict verdict) {
  switch (verdict) {
    case FeasibilityVerdict::Feasible:
      return "Feasible";
    case FeasibilityVerdict::QTooSmall:
      return "QTooSmall";
    case FeasibilityVerdict::QTooLarge:
      return "QTooLarge";
    case FeasibilityVerdict::PNonpositive:
      return "PNonpositive";
  }
  return "Feasible";
}

Feasibility classify(double p, double q) {
  constexpr double kQSlack = 1e-12;
  if (!(p > 0)) {
    return {FeasibilityVerdict::PNonpositive, 0.0};
  }
  if (!(q > 2)) {
    return {FeasibilityVerdict::QTooSmall, 2.0};
  }
  const double q0 = constants().q0;
  if (q > q0 + kQSlack) {
    return {FeasibilityVerdict::QTooLarge, q0};
  }
  return {FeasibilityVerdict::Feasible, std::nullopt};
}

namespace {

std::string feasibility_message(const Feasibility& fea, double p, double q) {
  std::ostringstream msg;
  msg.precision(17);
  switch (fea.verdict) {
    case FeasibilityVerdict::PNonpositive:
      msg << "infeasible input: p = " << p << " must be positive";
      break;
    case FeasibilityVerdict::QTooSmall:
      msg << "infeasible input: q = " << q << " violates q > 2";
      break;
    case FeasibilityVerdict::QTooLarge:
      msg << "infeasible input: q = " << q
          << " exceeds the feasibility limit q0 = " << *fea.bound;
      break;
    case FeasibilityVerdict::Feasible:
      msg << "feasible input";
      break;
  }
  return msg.str();
}

}  // namespace

RootIsolation isolate_root(const Rational& q, double tol) {
  const Feasibility fea = classify(1.0, to_double(q));
  if (!fea.feasible()) {
    throw FeasibilityError(feasibility_message(fea, 1.0, to_double(q)));
  }
  if (!(tol > 0)) {
    throw std::invalid_argument("isolate_root: tol must be positive");
  }

  const RatPoly poly = gion_polynomial(q);

  // Counting caps sit safely between t0 ~ 0.5575 and the next structure of
  // P above it; if an endpoint happens to be a root, step down the ladder.
  static const std::vector<Rational> kCaps = {
      Rational(14, 25), Rational(5601, 10000), Rational(2801, 5000)};

  RootIsolation out;
  int count = -1;
  bool counted = false;
  for (const Rational& cap : kCaps) {
    try {
      count = sturm_count(poly, Rational(0), cap);
      out.cap = cap;
      counted = true;
      break;
    } catch (const EndpointRootError& err) {
      if (err.which() == EndpointRootError::Endpoint::Lo) {
        throw;  // P(0, q) = q - 2 = 0 never happens for feasible q
      }
      continue;
    }
  }
  if (!counted) {
    throw InternalConsistencyError(
        "isolate_root: every counting cap collides with a root");
  }
  out.root_count = count;

  Rational cap = out.cap;
  if (count == 2) {
    // The second root would have to sit in (t0, cap]; recount below a
    // tighter cap just under t0 and keep the near-boundary branch only.
    const Rational tight(5573, 10000);
    const int inner = sturm_count(poly, Rational(0), tight);
    if (inner == 1) {
      cap = tight;
      count = 1;
    }
  }
  if (count != 1) {
    std::ostringstream msg;
    msg << "isolate_root: expected exactly one root in (0, " << cap.str()
        << "], Sturm count gives " << count;
    throw InternalConsistencyError(msg.str());
  }

  const RootRefinement refined =
      refine_root_info(poly, 0.0, to_double(cap), tol);
  out.t = refined.root;
  out.bracket_lo = refined.lo;
  out.bracket_hi = refined.hi;
  out.iterations = refined.iterations;

  const double t0 = constants().t0;
  if (out.t > t0) {
    if (out.t > t0 + 1e-9) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "isolate_root: refined root " << out.t
          << " lies beyond t0 = " << t0;
      throw InternalConsistencyError(msg.str());
    }
    out.t = t0;
    out.clamped_to_t0 = true;
  }
  return out;
}

GionSolution solve(double p, const Rational& q, double tol) {
  const double qd = to_double(q);
  const Feasibility fea = classify(p, qd);
  if (!fea.feasible()) {
    throw FeasibilityError(feasibility_message(fea, p, qd));
  }

  const RootIsolation iso = isolate_root(q, tol);
  const SegmentQuantities scaled = quantities_from_t_scaled(iso.t);
  const double factor = p / scaled.p();

  GionSolution sol;
  sol.a = factor * scaled.a;
  sol.m = factor * scaled.m;
  sol.s = factor * scaled.s;
  sol.d = factor * scaled.d;
  sol.t = iso.t;
  sol.p_residual = (sol.a + sol.m + sol.s + sol.d) - p;
  sol.q_residual = (sol.m / sol.a + sol.d / sol.m + sol.s / sol.d) - qd;
  sol.root_bracket = {iso.bracket_lo, iso.bracket_hi};
  sol.iterations = iso.iterations;
  return sol;
}

GionSolution solve(double p, double q, double tol) {
  return solve(p, rational_from_double(q), tol);
}

double roundtrip_error(double t) {
  const AggregatePair pq = pq_of_t(t);  // range-checks t
  const GionSolution sol = solve(pq.p, pq.q, 1e-12);
  return std::abs(sol.t - t);
}

}  // namespace gion
