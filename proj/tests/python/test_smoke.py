import math

import pytest

import gion


def test_constants():
    c = gion.constants()
    assert c.q0 == pytest.approx(2.3949722745528794, rel=1e-14)
    assert c.t0 == pytest.approx(0.55753651583505141, rel=1e-14)
    assert c.phi0 == pytest.approx(math.pi / 2 + math.atan(0.5), rel=1e-14)


def test_solve_right_angle_instance():
    sol = gion.solve(4.5355339059327378, 2.1819805153394639)
    assert sol.a == pytest.approx(2.0, rel=1e-12)
    assert sol.m == pytest.approx(1.0, rel=1e-12)
    assert sol.s == pytest.approx(math.sqrt(0.5), rel=1e-12)
    assert sol.d == pytest.approx(2 * math.sqrt(2.0) - 2, rel=1e-12)
    assert sol.t == pytest.approx(math.sqrt(2.0) - 1, abs=1e-10)
    assert abs(sol.p_residual) < 1e-12
    lo, hi = sol.root_bracket
    assert lo <= sol.t <= hi


def test_solve_accepts_exact_strings():
    sol = gion.solve(1.0, "9/4")
    assert sol.t == pytest.approx(0.47629381878125278, abs=1e-12)
    assert sol.a + sol.m + sol.s + sol.d == pytest.approx(1.0, rel=1e-13)


def test_infeasible_raises():
    with pytest.raises(gion.FeasibilityError):
        gion.solve(1.0, 2.5)
    with pytest.raises(ValueError):
        gion.solve(-1.0, 2.2)
    verdict = gion.classify(1.0, 2.5)
    assert verdict.verdict == "QTooLarge"
    assert not verdict.feasible()
    assert verdict.bound == pytest.approx(gion.constants().q0)


def test_forward_chain_and_param_point():
    sq = gion.quantities_from_phi(math.pi / 2)
    assert sq.a == pytest.approx(2.0, rel=1e-14)
    assert sq.q() == pytest.approx(2.1819805153394639, rel=1e-13)
    point = gion.param_from_t(math.sqrt(2.0) - 1)
    assert point.phi == pytest.approx(math.pi / 2, rel=1e-13)
    assert point.r == pytest.approx(math.sqrt(2.0) - 1, rel=1e-13)
    p, q = gion.pq_of_t(0.5)
    assert p == pytest.approx(15.603465431395432, rel=1e-13)
    assert q == pytest.approx(2.2844884771318107, rel=1e-12)


def test_exact_helpers():
    coeffs = gion.polynomial_coefficients("9/4")
    assert coeffs[0] == "1/4"
    assert coeffs[10] == "8"
    a, m, d = gion.scaled_quantities_exact("1/2")
    assert (a, m, d) == ("6", "4", "3")
    iso = gion.isolate_root("9/4")
    assert iso.root_count == 1
    assert iso.t == pytest.approx(0.47629381878125278, abs=1e-12)
    cert = gion.irreducibility_certificate("9/4")
    assert cert.verdict == "Irreducible"
    assert cert.witness_prime == 13


def test_oracle_round_trip():
    report = gion.certify_polynomial_identity()
    assert report.ok
    sol = gion.solve(3.0, 2.25)
    verification = gion.verify_solution(sol, 3.0, 2.25)
    assert verification.max_rel_deviation < 1e-9
    built = gion.construct_from_phi(math.pi / 2)
    assert built.s == pytest.approx(math.sqrt(0.5), rel=1e-12)
    assert built.max_constraint_residual < 1e-12


def test_version():
    assert gion.__version__ == "1.0.0"
