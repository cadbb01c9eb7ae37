"""Scalar special functions: complex log-Gamma, Lambert W0, signed fractional part."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError

__all__ = ["EvalConfig", "DEFAULT_CONFIG", "log_gamma", "lambert_w0", "frac_signed"]


@dataclass(frozen=True)
class EvalConfig:
    """Tolerance and iteration budget shared by iterative evaluators."""

    target_abs_tol: float = 1e-13
    max_iter: int = 64

    def __post_init__(self):
        if not self.target_abs_tol > 0:
            raise DomainError(f"target_abs_tol must be positive, got {self.target_abs_tol}")
        if self.max_iter < 1:
            raise DomainError(f"max_iter must be >= 1, got {self.max_iter}")


DEFAULT_CONFIG = EvalConfig()

_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)

# B_2 .. B_20
_BERNOULLI = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
)
# B_2k / (2k (2k - 1))
_STIRLING_COEFFS = tuple(b / ((2 * k) * (2 * k - 1)) for k, b in enumerate(_BERNOULLI, start=1))
_SHIFT_RADIUS = 10.0


def log_gamma(z: complex) -> complex:
    """Principal branch of ``ln Gamma(z)`` for ``Re(z) > 0``.

    Small arguments are shifted up with ``ln Gamma(z) = ln Gamma(z + m) -
    sum ln(z + k)`` until ``|z| >= 10``, then the Stirling series with
    Bernoulli numbers ``B_2 .. B_20`` is summed. Because every logarithm
    involved has its argument in the right half-plane, the imaginary part
    is the continuous argument of Gamma along the ray from the real axis.

    Parameters
    ----------
    z : complex
        Argument with positive real part.

    Returns
    -------
    complex
        ``ln Gamma(z)``; real when ``z`` is a positive real.

    Raises
    ------
    DomainError
        If ``Re(z) <= 0`` (this includes the poles) or ``z`` is not finite.
    """
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"log_gamma argument must be finite, got {z}")
    if z.real <= 0.0:
        raise DomainError(f"log_gamma requires Re(z) > 0, got {z}")

    shift = 0j
    while abs(z) < _SHIFT_RADIUS:
        shift += cmath.log(z)
        z += 1.0

    inv = 1.0 / z
    inv2 = inv * inv
    series = 0j
    power = inv
    for c in _STIRLING_COEFFS:
        series += c * power
        power *= inv2
    value = (z - 0.5) * cmath.log(z) - z + _HALF_LOG_2PI + series - shift
    if z.imag == 0.0:
        value = complex(value.real, 0.0)
    return value


def _w0_seed(x: float) -> float:
    if x >= 0.0:
        return math.log1p(x)
    # series about the branch point -1/e
    p = math.sqrt(max(2.0 * (math.e * x + 1.0), 0.0))
    return -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p ** 3


def lambert_w0(x: float, config: EvalConfig = DEFAULT_CONFIG) -> float:
    """Principal real branch of the Lambert W function.

    Solves ``w * exp(w) = x`` with ``w >= -1`` by Halley iteration, seeded
    by ``log1p(x)`` for ``x >= 0`` and by the branch-point series otherwise.

    Raises
    ------
    DomainError
        For ``x < -1/e`` or non-finite ``x``.
    ConvergenceError
        If ``config.max_iter`` Halley steps do not reach the tolerance.
    """
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"lambert_w0 argument must be finite, got {x}")
    branch = -1.0 / math.e
    if x < branch:
        # absorb one ulp of rounding in callers computing -1/e themselves
        if branch - x > 4.0 * math.ulp(branch):
            raise DomainError(f"lambert_w0 requires x >= -1/e, got {x}")
        return -1.0
    if x == 0.0:
        return 0.0
    if x == branch:
        return -1.0

    tol = config.target_abs_tol * max(1.0, abs(x))
    w = _w0_seed(x)
    for _ in range(config.max_iter):
        ew = math.exp(w)
        r = w * ew - x
        wp1 = w + 1.0
        if r == 0.0 or wp1 == 0.0:
            return w
        step = r / (ew * wp1 - (w + 2.0) * r / (2.0 * wp1))
        w -= step
        if abs(step) <= 4.0 * math.ulp(max(abs(w), 1e-300)):
            break
    if abs(w * math.exp(w) - x) <= tol:
        return w
    raise ConvergenceError(f"lambert_w0({x}) did not converge in {config.max_iter} iterations")


def frac_signed(x: float) -> float:
    """Fractional part keeping the sign of ``x``.

    ``x - floor(x)`` for ``x >= 0`` and ``x - ceil(x)`` for ``x < 0``, so the
    result lies in ``(-1, 1)`` and ``frac_signed(-x) == -frac_signed(x)``.

    >>> frac_signed(-1.25)
    -0.25
    """
    return math.modf(x)[0]
