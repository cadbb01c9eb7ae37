"""Zeros of the Riemann zeta function on the critical line.

Riemann-Siegel theta and its Lambert-W inverse, Gram points, zeta and
Hardy's Z on the line, a Gram-block zero scanner, and numerical checks of
the exact equation ``theta(t_n) + S(t_n) = (n - 3/2) pi``.
"""
from .errors import (
    AccuracyError,
    AtZeroError,
    BracketError,
    ConvergenceError,
    CritlineError,
    DomainError,
    MissedZeroError,
    NumericalError,
)
from .gram import GramRecord, classify_gram, gram_approx, gram_exact, gram_inverse_approx
from .special_fn import EvalConfig, frac_signed, lambert_w0, log_gamma
from .theta import theta, theta_approx, theta_approx_inv, theta_sign
from .zeros import (
    ConjectureReport,
    CurveSample,
    Variant,
    ZeroRecord,
    ZeroScanner,
    count_n0,
    count_riemann_von_mangoldt,
    export_curves,
    find_zero,
    s_n_formula,
    solve_asymptotic,
    t_cap,
    verify_arg_conjecture,
    verify_exact_equation,
    verify_membership,
    zeros_below,
)
from .zline import ArgValue, ZetaPoint, hardy_z, s_arg, s_arg_at_zero, zeta_half_line

__version__ = "0.1.0"
