"""Solver for the Gion shrine geometry problem.

Recovers the four lengths (a, m, s, d) of the configuration from the two
aggregates p = a+m+s+d and q = m/a + d/m + s/d, with exact-arithmetic
certificates for the root count and an independent geometric cross-check.
"""

from ._gion import (
    Constants,
    ConstructionResult,
    Feasibility,
    FeasibilityError,
    GionSolution,
    IdentityReport,
    IrreducibilityCertificate,
    ParamPoint,
    RootIsolation,
    Scale,
    SegmentQuantities,
    VerificationReport,
    __version__,
    certify_polynomial_identity,
    classify,
    constants,
    construct_from_phi,
    irreducibility_certificate,
    isolate_root,
    param_from_t,
    phi_of_q,
    polynomial_coefficients,
    pq_of_t,
    quantities_from_phi,
    quantities_from_r,
    quantities_from_t_scaled,
    quantities_from_t_unit,
    quantities_from_x,
    roundtrip_error,
    scaled_quantities_exact,
    solve,
    verify_solution,
)

__all__ = [
    "Constants",
    "ConstructionResult",
    "Feasibility",
    "FeasibilityError",
    "GionSolution",
    "IdentityReport",
    "IrreducibilityCertificate",
    "ParamPoint",
    "RootIsolation",
    "Scale",
    "SegmentQuantities",
    "VerificationReport",
    "__version__",
    "certify_polynomial_identity",
    "classify",
    "constants",
    "construct_from_phi",
    "irreducibility_certificate",
    "isolate_root",
    "param_from_t",
    "phi_of_q",
    "polynomial_coefficients",
    "pq_of_t",
    "quantities_from_phi",
    "quantities_from_r",
    "quantities_from_t_scaled",
    "quantities_from_t_unit",
    "quantities_from_x",
    "roundtrip_error",
    "scaled_quantities_exact",
    "solve",
    "verify_solution",
]
