#include <doctest.h>

#include "gion/errors.hpp"
#include "gion/oracle.hpp"

#include <cmath>
#include <numbers>
#include <string>

TEST_CASE("bisection construction reproduces the right-angle instance") {
  const auto built = gion::construct_from_phi(std::numbers::pi / 2);
  CHECK(built.a == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(built.m == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(built.s == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  CHECK(built.d == doctest::Approx(2 * std::sqrt(2.0) - 2).epsilon(1e-12));
  CHECK(built.theta == doctest::Approx(std::numbers::pi / 4).epsilon(1e-12));
  CHECK(built.delta == doctest::Approx(std::numbers::pi / 4).epsilon(1e-12));
  CHECK(built.max_constraint_residual <= 1e-12);
}

TEST_CASE("bisection construction matches the closed-form chain") {
  const double phi0 = gion::constants().phi0;
  for (int i = 1; i <= 100; ++i) {
    const double phi = i == 100 ? phi0 : 0.05 + (phi0 - 0.05) * i / 100.0;
    CAPTURE(phi);
    const auto built = gion::construct_from_phi(phi);
    const auto formula = gion::quantities_from_phi(phi);
    CHECK(std::abs(built.a - formula.a) <= 1e-10);
    CHECK(std::abs(built.m - formula.m) <= 1e-10);
    CHECK(std::abs(built.s - formula.s) <= 1e-10);
    CHECK(std::abs(built.d - formula.d) <= 1e-10);
    CHECK(built.max_constraint_residual <= 1e-10);
  }
}

TEST_CASE("bisection construction enforces the phi range") {
  const double phi0 = gion::constants().phi0;
  CHECK_NOTHROW(gion::construct_from_phi(phi0));
  CHECK_NOTHROW(gion::construct_from_phi(phi0 + 1e-13));
  CHECK_THROWS_AS(gion::construct_from_phi(phi0 + 1e-6),
                  gion::FeasibilityError);
  CHECK_THROWS_AS(gion::construct_from_phi(0.0), gion::FeasibilityError);
  CHECK_THROWS_AS(gion::construct_from_phi(-1.0), gion::FeasibilityError);
}

TEST_CASE("the radical-clearing identity holds exactly at the probe set") {
  const auto report = gion::certify_polynomial_identity();
  CHECK(report.ok);
  // one line per probe value of q
  int lines = 0;
  for (const char c : report.detail) {
    lines += c == '\n';
  }
  CHECK(lines >= 5);
  CHECK(report.detail.find("identity holds exactly") != std::string::npos);
}

TEST_CASE("verify_solution accepts genuine solutions") {
  for (const double q : {2.05, 2.1819805153394639, 2.25, 2.35}) {
    CAPTURE(q);
    const auto sol = gion::solve(3.0, q);
    const auto report = gion::verify_solution(sol, 3.0, q);
    CHECK(report.max_rel_deviation <= 1e-9);
    CHECK(report.constraint_residual <= 1e-10);
  }
}

TEST_CASE("verify_solution flags a corrupted solution") {
  const auto sol = gion::solve(3.0, 2.25);
  auto bad = sol;
  bad.a *= 1.01;
  const auto report = gion::verify_solution(bad, 3.0, 2.25);
  CHECK(report.max_rel_deviation > 1e-3);

  auto tiny = sol;
  tiny.m = 0.0;
  CHECK_THROWS_AS(gion::verify_solution(tiny, 3.0, 2.25),
                  std::invalid_argument);
  auto negative = sol;
  negative.s = -negative.s;
  CHECK_THROWS_AS(gion::verify_solution(negative, 3.0, 2.25),
                  std::invalid_argument);
}
