"""Riemann-Siegel theta, its Stirling approximation and the closed-form inverse."""
from __future__ import annotations

import math

from .errors import DomainError
from .special_fn import lambert_w0, log_gamma

__all__ = ["theta", "theta_approx", "theta_approx_inv", "theta_sign", "theta_derivative"]

_HALF_LOG_PI = 0.5 * math.log(math.pi)
TWO_PI_E = 2.0 * math.pi * math.e
# theta_approx attains its minimum -9*pi/8 at t = 2*pi
THETA_APPROX_MIN = -9.0 * math.pi / 8.0


def theta(t: float) -> float:
    """Riemann-Siegel theta, ``arg Gamma(1/4 + it/2) - t ln(pi) / 2``.

    Evaluated through :func:`log_gamma`, never through the asymptotic form.
    """
    if t < 0:
        raise DomainError(f"theta is exposed for t >= 0 only, got {t}")
    return log_gamma(complex(0.25, 0.5 * t)).imag - _HALF_LOG_PI * t


def theta_derivative(t: float, h: float = 1e-5) -> float:
    """Central-difference derivative of :func:`theta`."""
    h = min(h, 0.5 * t) if t > 0 else h
    if t - h < 0:
        return (theta(t + h) - theta(t)) / h
    return (theta(t + h) - theta(t - h)) / (2.0 * h)


def theta_approx(t: float) -> float:
    """``(t/2) ln(t / (2 pi e)) - pi/8``."""
    if not t > 0:
        raise DomainError(f"theta_approx requires t > 0, got {t}")
    return 0.5 * t * math.log(t / TWO_PI_E) - math.pi / 8.0


def theta_approx_inv(x: float) -> float:
    """Invert :func:`theta_approx` on the branch ``t >= 2 pi``.

    ``(pi + 8x) / (4 W0((pi + 8x) / (8 pi e)))``. At ``x = -pi/8`` the
    formula is 0/0 and its limit ``2 pi e`` is returned.
    """
    a = math.pi + 8.0 * x
    if a == 0.0:
        return TWO_PI_E
    arg = a / (8.0 * math.pi * math.e)
    if arg < -1.0 / math.e and x < THETA_APPROX_MIN:
        raise DomainError(f"theta_approx_inv requires x >= -9*pi/8, got {x}")
    return a / (4.0 * lambert_w0(arg))


def theta_sign(t: float) -> int:
    """Sign of ``theta(t)``; undefined (``DomainError``) where theta vanishes."""
    value = theta(t)
    if value == 0.0:
        raise DomainError(f"theta_sign is undefined where theta(t) = 0 (t = {t})")
    return 1 if value > 0 else -1
