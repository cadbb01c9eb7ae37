"""Gram points: exact roots of ``theta(t) = (n-1) pi`` and their Lambert-W approximation.

Indexing follows ``theta(g(n)) = (n - 1) pi`` for ``n >= 1``, so ``g(1)``
is the point usually written ``g_0 = 17.8455...``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.optimize import brentq

from .errors import BracketError, DomainError
from .special_fn import lambert_w0
from .theta import TWO_PI_E, theta, theta_derivative
from .zline import zeta_half_line

__all__ = ["GramRecord", "gram_exact", "gram_approx", "gram_inverse_approx", "classify_gram"]

BRACKET_HALF_WIDTH = 0.01


@dataclass(frozen=True)
class GramRecord:
    n: int
    exact: float
    approx: float
    delta: float
    is_bad: bool


def _check_index(n) -> int:
    if int(n) != n or n < 1:
        raise DomainError(f"Gram index must be a positive integer, got {n}")
    return int(n)


def gram_approx(n: int) -> float:
    """Closed form ``(8n - 7) pi / (4 W0((8n - 7) / (8e)))``."""
    n = _check_index(n)
    return (8 * n - 7) * math.pi / (4.0 * lambert_w0((8 * n - 7) / (8.0 * math.e)))


def gram_inverse_approx(t: float) -> float:
    """Real-valued index ``t ln(t / (2 pi e)) / (2 pi) + 7/8`` (not rounded)."""
    if not t > 2.0 * math.pi:
        raise DomainError(f"gram_inverse_approx requires t > 2 pi, got {t}")
    return t * math.log(t / TWO_PI_E) / (2.0 * math.pi) + 7.0 / 8.0


def gram_exact(n: int) -> float:
    """Solve ``theta(t) = (n - 1) pi`` inside ``gram_approx(n) +- 0.01``.

    The bracket is refined with Brent's method to ~1e-13 and finished by
    one Newton step on the central-difference derivative of theta, kept
    only if it lowers the residual.
    """
    n = _check_index(n)
    target = (n - 1) * math.pi
    centre = gram_approx(n)
    lo, hi = centre - BRACKET_HALF_WIDTH, centre + BRACKET_HALF_WIDTH

    def f(t):
        return theta(t) - target

    f_lo, f_hi = f(lo), f(hi)
    if f_lo * f_hi > 0:
        raise BracketError(f"theta - {n - 1}*pi keeps its sign on [{lo}, {hi}]")
    t = brentq(f, lo, hi, xtol=1e-13, maxiter=200)
    r = f(t)
    polished = t - r / theta_derivative(t)
    if abs(f(polished)) < abs(r):
        t = polished
    return t


def classify_gram(n: int) -> GramRecord:
    """Build the :class:`GramRecord` for index ``n``.

    A Gram point is bad when ``Re zeta(1/2 + i g(n)) < 0``; zeta is real
    there, so its argument is ``pi`` instead of 0.
    """
    exact = gram_exact(n)
    approx = gram_approx(n)
    is_bad = zeta_half_line(exact).zeta.real < 0
    return GramRecord(n=int(n), exact=exact, approx=approx, delta=abs(exact - approx), is_bad=bool(is_bad))
