"""Exact arithmetic for twisted (h,q)-Euler numbers and q-Bernstein polynomials.

The library computes in the field of rational functions in q extended by a
p-power root of unity, entirely with big-integer rationals: Euler numbers
and polynomials in dual (recurrence and closed) forms, Bernstein-type basis
polynomials, a moment functional for integrands against the alternating
p-adic measure, a numeric p-adic engine that evaluates the defining
truncated limit of that measure, and a machine-checkable catalog of exact
identities relating all of the above.
"""

from .cyclotomic import (
    CycloRF,
    PoleError,
    cyclo_arith,
    cyclo_inv,
    cyclo_linear_combination,
    euler_phi_prime_power,
    eval_at_q_rational,
    is_odd_prime,
    phi_cyclotomic,
    zeta_conj,
)
from .identities import (
    GridSpec,
    IdentityReport,
    MUTANTS,
    THEOREM_IDS,
    Workspace,
    default_grid,
    numeric_crosscheck,
    reports_to_json,
    run_grid,
    summary_table,
    verify,
)
from .padic import (
    ConvergenceProbe,
    NonUnitError,
    PadicConfig,
    PadicExt,
    convergence_probe,
    fermionic_integral_truncated,
    pad_arith,
    pad_inv,
    specialize,
)
from .qpoly import (
    QPoly,
    RatFuncQ,
    rf_arith,
    rf_linear_combination,
    rf_subst_q_inverse,
)
from .qspecial import (
    EulerCache,
    EulerParams,
    MomentPoly,
    bernstein,
    bernstein_moment_poly,
    classical_euler_numbers,
    euler_number,
    euler_number_closed,
    euler_poly,
    euler_poly_closed,
    integral_reflected_power,
    integrate_moments,
    q_number,
    q_number_inv_arg,
    q_pow,
)
from .serialize import (
    cyclo_from_text,
    cyclo_to_text,
    poly_from_text,
    poly_to_text,
    rat_func_from_text,
    rat_func_to_text,
)

__version__ = "0.1.0"

__all__ = [
    "CycloRF",
    "ConvergenceProbe",
    "EulerCache",
    "EulerParams",
    "GridSpec",
    "IdentityReport",
    "MUTANTS",
    "MomentPoly",
    "NonUnitError",
    "PadicConfig",
    "PadicExt",
    "PoleError",
    "QPoly",
    "RatFuncQ",
    "THEOREM_IDS",
    "Workspace",
    "bernstein",
    "bernstein_moment_poly",
    "classical_euler_numbers",
    "convergence_probe",
    "cyclo_arith",
    "cyclo_from_text",
    "cyclo_inv",
    "cyclo_linear_combination",
    "cyclo_to_text",
    "default_grid",
    "euler_number",
    "euler_number_closed",
    "euler_phi_prime_power",
    "euler_poly",
    "euler_poly_closed",
    "eval_at_q_rational",
    "fermionic_integral_truncated",
    "integral_reflected_power",
    "integrate_moments",
    "is_odd_prime",
    "numeric_crosscheck",
    "pad_arith",
    "pad_inv",
    "phi_cyclotomic",
    "poly_from_text",
    "poly_to_text",
    "q_number",
    "q_number_inv_arg",
    "q_pow",
    "rat_func_from_text",
    "rat_func_to_text",
    "reports_to_json",
    "rf_arith",
    "rf_linear_combination",
    "rf_subst_q_inverse",
    "run_grid",
    "specialize",
    "summary_table",
    "verify",
    "zeta_conj",
]
