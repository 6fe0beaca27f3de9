#include "gion/commands.hpp"

#include "gion/errors.hpp"
#include "gion/geometry.hpp"
#include "gion/oracle.hpp"
#include "gion/solver.hpp"
#include "gion/svg.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

namespace gion {

namespace {

double parse_double_strict(const std::string& text, const char* what) {
  std::size_t consumed = 0;
  double value = 0;
  try {
    value = std::stod(text, &consumed);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(what) + ": malformed number '" +
                                text + "'");
  }
  if (consumed != text.size()) {
    throw std::invalid_argument(std::string(what) + ": malformed number '" +
                                text + "'");
  }
  return value;
}

// Angles default to radians; a trailing "deg" or "rad" overrides.
double parse_angle(const std::string& text, const char* what) {
  if (text.size() > 3 && text.ends_with("deg")) {
    return parse_double_strict(text.substr(0, text.size() - 3), what) *
           std::numbers::pi / 180.0;
  }
  if (text.size() > 3 && text.ends_with("rad")) {
    return parse_double_strict(text.substr(0, text.size() - 3), what);
  }
  return parse_double_strict(text, what);
}

}  // namespace

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  Rational q;
  try {
    q = parse_rational(args.q);
  } catch (const std::invalid_argument& e) {
    err << "gion solve: " << e.what() << "\n";
    return kExitInternal;
  }
  const double qd = to_double(q);

  OutputRecord rec("solve");
  rec.input("p", args.p);
  rec.input("q", args.q);
  rec.input("tol", args.tol);
  try {
    const GionSolution sol = solve(args.p, q, args.tol);
    rec.output("verdict", to_string(FeasibilityVerdict::Feasible));
    rec.output("a", sol.a);
    rec.output("m", sol.m);
    rec.output("s", sol.s);
    rec.output("d", sol.d);
    rec.output("t", sol.t);
    rec.diagnostic("p_residual", sol.p_residual);
    rec.diagnostic("q_residual", sol.q_residual);
    rec.diagnostic("iterations", static_cast<long long>(sol.iterations));
    rec.diagnostic("bracket_lo", sol.root_bracket.first);
    rec.diagnostic("bracket_hi", sol.root_bracket.second);
    out << rec.serialize(args.format);
    return kExitOk;
  } catch (const FeasibilityError& e) {
    const Feasibility fea = classify(args.p, qd);
    rec.output("verdict", to_string(fea.verdict));
    if (fea.bound) {
      rec.output("violated_bound", *fea.bound);
    }
    out << rec.serialize(args.format);
    err << "gion solve: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::exception& e) {
    err << "gion solve: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

int cmd_forward(const ForwardArgs& args, std::ostream& out, std::ostream& err) {
  try {
    SegmentQuantities unit;
    if (args.param == "phi") {
      unit = quantities_from_phi(parse_angle(args.value, "forward --phi"));
    } else if (args.param == "r") {
      unit = quantities_from_r(parse_double_strict(args.value, "forward --r"));
    } else if (args.param == "x") {
      unit = quantities_from_x(parse_double_strict(args.value, "forward --x"));
    } else if (args.param == "t") {
      unit = quantities_from_t_unit(
          parse_double_strict(args.value, "forward --t"));
    } else {
      err << "gion forward: unknown parameter '" << args.param << "'\n";
      return kExitInternal;
    }

    // t = d/a is scale-invariant and identifies the configuration.
    const double t = unit.d / unit.a;
    SegmentQuantities shown = unit;
    if (args.scale == "natural") {
      const Scale scale = Scale::natural_for(t);
      shown.a *= scale.radius;
      shown.m *= scale.radius;
      shown.s *= scale.radius;
      shown.d *= scale.radius;
      shown.scale = scale;
    } else if (args.scale != "unit") {
      err << "gion forward: unknown scale '" << args.scale << "'\n";
      return kExitInternal;
    }

    const ParamPoint point = param_from_t(t);
    OutputRecord rec("forward");
    rec.input("param", args.param);
    rec.input("value", args.value);
    rec.input("scale", args.scale);
    rec.output("a", shown.a);
    rec.output("m", shown.m);
    rec.output("s", shown.s);
    rec.output("d", shown.d);
    rec.output("p", shown.p());
    rec.output("q", shown.q());
    rec.diagnostic("t", point.t);
    rec.diagnostic("phi", point.phi);
    rec.diagnostic("r", point.r);
    rec.diagnostic("x", point.x);
    rec.diagnostic("theta", point.theta);
    rec.diagnostic("delta", point.delta);
    rec.diagnostic("arc_radius", shown.scale.radius);
    out << rec.serialize(args.format);
    return kExitOk;
  } catch (const FeasibilityError& e) {
    err << "gion forward: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::invalid_argument& e) {
    err << "gion forward: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "gion forward: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

int cmd_scan(const ScanArgs& args, std::ostream&, std::ostream& err) {
  if (args.n < 2) {
    err << "gion scan: n must be at least 2\n";
    return kExitInternal;
  }
  std::ofstream file(args.output);
  if (!file) {
    err << "gion scan: cannot open '" << args.output << "' for writing\n";
    return kExitInternal;
  }
  const double t0 = constants().t0;
  file << "t,q,p,a,m,s,d\n";
  for (int i = 1; i <= args.n; ++i) {
    const double t = i == args.n ? t0 : t0 * i / args.n;
    const AggregatePair pq = pq_of_t(t);
    const SegmentQuantities sq = quantities_from_t_unit(t);
    file << format_double(t) << ',' << format_double(pq.q) << ','
         << format_double(sq.p()) << ',' << format_double(sq.a) << ','
         << format_double(sq.m) << ',' << format_double(sq.s) << ','
         << format_double(sq.d) << '\n';
  }
  file.flush();
  if (!file) {
    err << "gion scan: write to '" << args.output << "' failed\n";
    return kExitInternal;
  }
  return kExitOk;
}

int cmd_plot(const PlotArgs& args, std::ostream&, std::ostream& err) {
  constexpr int kSamples = 400;
  const double t0 = constants().t0;

  std::vector<std::pair<double, double>> points;
  points.reserve(kSamples);
  PlotLayout layout;
  if (args.kind == "q_of_t") {
    for (int i = 1; i <= kSamples; ++i) {
      const double t = i == kSamples ? t0 : t0 * i / kSamples;
      points.emplace_back(t, pq_of_t(t).q);
    }
    layout.title = "q as a function of t";
    layout.x_label = "t";
    layout.y_label = "q";
  } else if (args.kind == "phi_of_q") {
    for (int i = 1; i <= kSamples; ++i) {
      const double t = i == kSamples ? t0 : t0 * i / kSamples;
      const double q = pq_of_t(t).q;
      const double phi_deg = param_from_t(t).phi * 180.0 / std::numbers::pi;
      points.emplace_back(q, phi_deg);
    }
    layout.title = "phi as a function of q";
    layout.x_label = "q";
    layout.y_label = "phi (degrees)";
  } else {
    err << "gion plot: unknown kind '" << args.kind << "'\n";
    return kExitInternal;
  }

  std::ofstream file(args.output);
  if (!file) {
    err << "gion plot: cannot open '" << args.output << "' for writing\n";
    return kExitInternal;
  }
  file << render_line_plot(points, layout);
  file.flush();
  if (!file) {
    err << "gion plot: write to '" << args.output << "' failed\n";
    return kExitInternal;
  }
  return kExitOk;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  Rational q;
  try {
    q = parse_rational(args.q);
  } catch (const std::invalid_argument& e) {
    err << "gion verify: " << e.what() << "\n";
    return kExitInternal;
  }
  const double qd = to_double(q);

  OutputRecord rec("verify");
  rec.input("p", args.p);
  rec.input("q", args.q);
  try {
    const GionSolution sol = solve(args.p, q, 1e-12);
    const VerificationReport report = verify_solution(sol, args.p, qd);
    const bool passed = report.max_rel_deviation <= 1e-8;
    rec.output("max_rel_deviation", report.max_rel_deviation);
    rec.output("passed", passed);
    rec.diagnostic("a_deviation", report.a_deviation);
    rec.diagnostic("m_deviation", report.m_deviation);
    rec.diagnostic("s_deviation", report.s_deviation);
    rec.diagnostic("d_deviation", report.d_deviation);
    rec.diagnostic("p_deviation", report.p_deviation);
    rec.diagnostic("q_deviation", report.q_deviation);
    rec.diagnostic("constraint_residual", report.constraint_residual);
    if (std::abs(qd - constants().q0) <= 1e-6) {
      rec.diagnostic("note", "q sits at the q0 feasibility boundary");
    }
    out << rec.serialize(args.format);
    if (!passed) {
      err << "gion verify: max relative deviation "
          << format_double(report.max_rel_deviation)
          << " exceeds the 1e-8 gate\n";
      return kExitVerificationFailed;
    }
    return kExitOk;
  } catch (const FeasibilityError& e) {
    const Feasibility fea = classify(args.p, qd);
    rec.output("verdict", to_string(fea.verdict));
    if (fea.bound) {
      rec.output("violated_bound", *fea.bound);
    }
    out << rec.serialize(args.format);
    err << "gion verify: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::exception& e) {
    err << "gion verify: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

int cmd_certify(const CertifyArgs& args, std::ostream& out, std::ostream& err) {
  if (args.q_den <= 0) {
    err << "gion certify: --q-den must be positive\n";
    return kExitInternal;
  }
  try {
    const Rational q(args.q_num, args.q_den);
    const RatPoly poly = gion_polynomial(q);

    OutputRecord rec("certify");
    rec.input("q", q.str());
    for (int k = 0; k <= 10; ++k) {
      rec.output("c" + std::to_string(k), poly.coeff(k).str());
    }

    // Strip any t = 0 root before counting on the open-below interval.
    RatPoly counted = poly;
    int zero_multiplicity = 0;
    while (!counted.is_zero() && counted.coeff(0) == 0) {
      counted = counted.divmod(RatPoly({Rational(0), Rational(1)})).first;
      ++zero_multiplicity;
    }

    static const std::vector<Rational> kCaps = {
        Rational(14, 25), Rational(5601, 10000), Rational(2801, 5000)};
    int count = 0;
    Rational cap_used;
    bool counted_ok = false;
    for (const Rational& cap : kCaps) {
      try {
        count = sturm_count(counted, Rational(0), cap);
        cap_used = cap;
        counted_ok = true;
        break;
      } catch (const EndpointRootError&) {
        continue;
      }
    }
    if (!counted_ok) {
      err << "gion certify: every counting cap collides with a root\n";
      return kExitInternal;
    }
    rec.output("sturm_count", static_cast<long long>(count));
    rec.diagnostic("count_interval", "(0, " + cap_used.str() + "]");
    if (zero_multiplicity > 0) {
      rec.diagnostic("root_at_zero_multiplicity",
                     static_cast<long long>(zero_multiplicity));
    }

    const IrreducibilityCertificate cert = irreducibility_certificate(poly);
    rec.output("verdict", to_string(cert.verdict));
    if (cert.witness_prime) {
      rec.output("witness_prime", static_cast<long long>(*cert.witness_prime));
    }
    if (cert.witness_root) {
      rec.output("witness_root", cert.witness_root->str());
    }
    rec.diagnostic("certificate_detail", cert.detail);
    out << rec.serialize(args.format);
    return kExitOk;
  } catch (const std::exception& e) {
    err << "gion certify: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace gion
