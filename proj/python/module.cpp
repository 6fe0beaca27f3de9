#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gion/errors.hpp"
#include "gion/geometry.hpp"
#include "gion/oracle.hpp"
#include "gion/ratpoly.hpp"
#include "gion/solver.hpp"

#include <string>
#include <vector>

namespace py = pybind11;

namespace {

gion::Rational rational_arg(const std::string& text) {
  return gion::parse_rational(text);
}

}  // namespace

PYBIND11_MODULE(_gion, m) {
  m.doc() = "Solver for the Gion shrine geometry problem";
#ifdef GION_VERSION
  m.attr("__version__") = GION_VERSION;
#else
  m.attr("__version__") = "0.0.0";
#endif

  py::register_exception<gion::FeasibilityError>(m, "FeasibilityError",
                                                 PyExc_ValueError);

  py::class_<gion::Scale>(m, "Scale")
      .def_property_readonly(
          "kind", [](const gion::Scale& s) { return gion::to_string(s.kind); })
      .def_readonly("radius", &gion::Scale::radius)
      .def("__repr__", [](const gion::Scale& s) {
        return "Scale(kind='" + gion::to_string(s.kind) +
               "', radius=" + std::to_string(s.radius) + ")";
      });

  py::class_<gion::SegmentQuantities>(m, "SegmentQuantities")
      .def_readonly("a", &gion::SegmentQuantities::a)
      .def_readonly("m", &gion::SegmentQuantities::m)
      .def_readonly("s", &gion::SegmentQuantities::s)
      .def_readonly("d", &gion::SegmentQuantities::d)
      .def_readonly("scale", &gion::SegmentQuantities::scale)
      .def("p", &gion::SegmentQuantities::p)
      .def("q", &gion::SegmentQuantities::q);

  py::class_<gion::ParamPoint>(m, "ParamPoint")
      .def_readonly("phi", &gion::ParamPoint::phi)
      .def_readonly("r", &gion::ParamPoint::r)
      .def_readonly("x", &gion::ParamPoint::x)
      .def_readonly("t", &gion::ParamPoint::t)
      .def_readonly("theta", &gion::ParamPoint::theta)
      .def_readonly("delta", &gion::ParamPoint::delta);

  py::class_<gion::Constants>(m, "Constants")
      .def_readonly("q0", &gion::Constants::q0)
      .def_readonly("t0", &gion::Constants::t0)
      .def_readonly("r0", &gion::Constants::r0)
      .def_readonly("x0", &gion::Constants::x0)
      .def_readonly("phi0", &gion::Constants::phi0);

  py::class_<gion::Feasibility>(m, "Feasibility")
      .def_property_readonly("verdict",
                             [](const gion::Feasibility& f) {
                               return gion::to_string(f.verdict);
                             })
      .def_readonly("bound", &gion::Feasibility::bound)
      .def("feasible", &gion::Feasibility::feasible);

  py::class_<gion::RootIsolation>(m, "RootIsolation")
      .def_readonly("t", &gion::RootIsolation::t)
      .def_readonly("bracket_lo", &gion::RootIsolation::bracket_lo)
      .def_readonly("bracket_hi", &gion::RootIsolation::bracket_hi)
      .def_readonly("iterations", &gion::RootIsolation::iterations)
      .def_readonly("root_count", &gion::RootIsolation::root_count)
      .def_property_readonly(
          "cap",
          [](const gion::RootIsolation& iso) { return iso.cap.str(); })
      .def_readonly("clamped_to_t0", &gion::RootIsolation::clamped_to_t0);

  py::class_<gion::GionSolution>(m, "GionSolution")
      .def_readonly("a", &gion::GionSolution::a)
      .def_readonly("m", &gion::GionSolution::m)
      .def_readonly("s", &gion::GionSolution::s)
      .def_readonly("d", &gion::GionSolution::d)
      .def_readonly("t", &gion::GionSolution::t)
      .def_readonly("p_residual", &gion::GionSolution::p_residual)
      .def_readonly("q_residual", &gion::GionSolution::q_residual)
      .def_readonly("root_bracket", &gion::GionSolution::root_bracket)
      .def_readonly("iterations", &gion::GionSolution::iterations);

  py::class_<gion::ConstructionResult>(m, "ConstructionResult")
      .def_readonly("a", &gion::ConstructionResult::a)
      .def_readonly("m", &gion::ConstructionResult::m)
      .def_readonly("s", &gion::ConstructionResult::s)
      .def_readonly("d", &gion::ConstructionResult::d)
      .def_readonly("theta", &gion::ConstructionResult::theta)
      .def_readonly("delta", &gion::ConstructionResult::delta)
      .def_readonly("max_constraint_residual",
                    &gion::ConstructionResult::max_constraint_residual);

  py::class_<gion::VerificationReport>(m, "VerificationReport")
      .def_readonly("a_deviation", &gion::VerificationReport::a_deviation)
      .def_readonly("m_deviation", &gion::VerificationReport::m_deviation)
      .def_readonly("s_deviation", &gion::VerificationReport::s_deviation)
      .def_readonly("d_deviation", &gion::VerificationReport::d_deviation)
      .def_readonly("p_deviation", &gion::VerificationReport::p_deviation)
      .def_readonly("q_deviation", &gion::VerificationReport::q_deviation)
      .def_readonly("max_rel_deviation",
                    &gion::VerificationReport::max_rel_deviation)
      .def_readonly("constraint_residual",
                    &gion::VerificationReport::constraint_residual)
      .def_readonly("detail", &gion::VerificationReport::detail);

  py::class_<gion::IdentityReport>(m, "IdentityReport")
      .def_readonly("ok", &gion::IdentityReport::ok)
      .def_readonly("detail", &gion::IdentityReport::detail);

  py::class_<gion::IrreducibilityCertificate>(m, "IrreducibilityCertificate")
      .def_property_readonly("verdict",
                             [](const gion::IrreducibilityCertificate& c) {
                               return gion::to_string(c.verdict);
                             })
      .def_readonly("witness_prime",
                    &gion::IrreducibilityCertificate::witness_prime)
      .def_property_readonly(
          "witness_root",
          [](const gion::IrreducibilityCertificate& c)
              -> std::optional<std::string> {
            if (!c.witness_root) {
              return std::nullopt;
            }
            return c.witness_root->str();
          })
      .def_readonly("detail", &gion::IrreducibilityCertificate::detail);

  m.def("constants", &gion::constants,
        py::return_value_policy::copy,
        "Feasibility limits q0, t0, r0, x0, phi0");
  m.def("quantities_from_phi", &gion::quantities_from_phi, py::arg("phi"));
  m.def("quantities_from_r", &gion::quantities_from_r, py::arg("r"));
  m.def("quantities_from_x", &gion::quantities_from_x, py::arg("x"));
  m.def("quantities_from_t_unit", &gion::quantities_from_t_unit,
        py::arg("t"));
  m.def("quantities_from_t_scaled", &gion::quantities_from_t_scaled,
        py::arg("t"));
  m.def(
      "pq_of_t",
      [](double t) {
        const auto pq = gion::pq_of_t(t);
        return py::make_tuple(pq.p, pq.q);
      },
      py::arg("t"), "Aggregates (p, q) of the natural-scale tuple at t");
  m.def("param_from_t", &gion::param_from_t, py::arg("t"));
  m.def("phi_of_q", &gion::phi_of_q, py::arg("q"));
  m.def("classify", &gion::classify, py::arg("p"), py::arg("q"));
  m.def(
      "isolate_root",
      [](const std::string& q, double tol) {
        return gion::isolate_root(rational_arg(q), tol);
      },
      py::arg("q"), py::arg("tol") = 1e-12,
      "Certified root isolation for an exact rational q such as '9/4'");
  m.def(
      "solve",
      [](double p, double q, double tol) { return gion::solve(p, q, tol); },
      py::arg("p"), py::arg("q"), py::arg("tol") = 1e-12);
  m.def(
      "solve",
      [](double p, const std::string& q, double tol) {
        return gion::solve(p, rational_arg(q), tol);
      },
      py::arg("p"), py::arg("q"), py::arg("tol") = 1e-12,
      "Same solver with q given exactly, e.g. '9/4' or '2.25'");
  m.def("roundtrip_error", &gion::roundtrip_error, py::arg("t"));
  m.def("construct_from_phi", &gion::construct_from_phi, py::arg("phi"));
  m.def("certify_polynomial_identity", &gion::certify_polynomial_identity);
  m.def("verify_solution", &gion::verify_solution, py::arg("solution"),
        py::arg("p"), py::arg("q"));
  m.def(
      "polynomial_coefficients",
      [](const std::string& q) {
        const auto poly = gion::gion_polynomial(rational_arg(q));
        std::vector<std::string> out;
        out.reserve(11);
        for (int k = 0; k <= 10; ++k) {
          out.push_back(poly.coeff(k).str());
        }
        return out;
      },
      py::arg("q"),
      "Exact coefficients (degree 0..10) of the defining polynomial at q");
  m.def(
      "irreducibility_certificate",
      [](const std::string& q) {
        return gion::irreducibility_certificate(
            gion::gion_polynomial(rational_arg(q)));
      },
      py::arg("q"),
      "One-sided irreducibility certificate of the polynomial at q");
  m.def(
      "scaled_quantities_exact",
      [](const std::string& t) {
        const auto exact = gion::scaled_quantities_exact(rational_arg(t));
        return py::make_tuple(exact.a.str(), exact.m.str(), exact.d.str());
      },
      py::arg("t"),
      "Exact rational (a, m, d) on the natural scale; s is irrational");
}
