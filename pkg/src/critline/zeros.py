"""Zeros of zeta on the critical line and checks of the exact equation.

Zeros are located by scanning Gram intervals for sign changes of Hardy's
Z, block by block between consecutive good Gram points. Each block must
contain as many zeros as the counting function predicts at its right end;
intervals are subdivided until it does.
"""
from __future__ import annotations

import math
import os
import threading
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum

from scipy.optimize import brentq

from .errors import AtZeroError, ConvergenceError, DomainError, MissedZeroError
from .gram import gram_exact, gram_inverse_approx
from .special_fn import DEFAULT_CONFIG, EvalConfig, frac_signed
from .theta import theta, theta_approx_inv, theta_sign
from .zline import DEFAULT_EPS_LADDER, hardy_z, s_arg, s_arg_at_zero, zeta_half_line

__all__ = [
    "Variant",
    "ZeroRecord",
    "Failure",
    "ConjectureReport",
    "CurveSample",
    "ZeroScanner",
    "default_scanner",
    "t_grid",
    "t_cap",
    "s_n_formula",
    "find_zero",
    "zeros_below",
    "verify_exact_equation",
    "verify_arg_conjecture",
    "verify_membership",
    "count_n0",
    "count_riemann_von_mangoldt",
    "solve_asymptotic",
    "export_curves",
    "max_scan_height",
]

RESIDUAL_TOL = 1e-3
MEMBERSHIP_TOL = 1e-6
SPLIT = 8
MAX_REFINE = 6


class Variant(str, Enum):
    """Readings of the closed form for the argument at the n-th zero."""

    ABSTRACT_PLUS = "abstract_plus"
    DEF_LINE2 = "def_line2"
    DEF_LINE3 = "def_line3"


@dataclass(frozen=True)
class ZeroRecord:
    n: int
    t_n: float
    theta_at: float
    s_at: float
    s_n_formula: float
    exact_residual: float
    variant_used: Variant
    conjecture2_pass: bool


@dataclass(frozen=True)
class Failure:
    key: float
    observed: float
    expected: float
    residual: float


@dataclass
class ConjectureReport:
    kind: str
    range_lo: float
    range_hi: float
    checked: int = 0
    passed: int = 0
    failures: list = field(default_factory=list)
    max_abs_residual: float = 0.0
    details: list = field(default_factory=list)
    distribution: dict | None = None

    def add(self, key, observed, expected, residual, ok, **detail):
        self.checked += 1
        self.max_abs_residual = max(self.max_abs_residual, abs(residual))
        if ok:
            self.passed += 1
        else:
            self.failures.append(Failure(key, observed, expected, residual))
        self.details.append({"key": key, "observed": observed, "expected": expected,
                             "residual": residual, "pass": bool(ok), **detail})

    @property
    def all_passed(self) -> bool:
        return self.passed == self.checked


@dataclass(frozen=True)
class CurveSample:
    n: int
    t: float
    s_n_value: float


def max_scan_height() -> float:
    return float(os.environ.get("CRITLINE_MAX_T", "10000"))


# -- closed forms -----------------------------------------------------------

def t_cap(n: int, t: float) -> int:
    """``1 + floor(gram_inverse_approx(t)) - n``."""
    return 1 + math.floor(gram_inverse_approx(t)) - int(n)


def s_n_formula(n: int, t: float, variant: Variant | str = Variant.ABSTRACT_PLUS) -> float:
    """Closed-form candidate for the argument of zeta at the n-th zero.

    With ``f = frac_signed(theta(t) / pi)`` and ``F = floor(gram_inverse_approx(t))``:

    - ``abstract_plus``: ``pi (3/2 - f + (F - n))``
    - ``def_line2``: ``pi (1/2 - f - (F - n + 1))``
    - ``def_line3``: ``pi (3/2 - f - (F - n))``

    The sign factor ``theta_sign(t)`` is not applied here.
    """
    variant = Variant(variant)
    f = frac_signed(theta(t) / math.pi)
    k = math.floor(gram_inverse_approx(t)) - int(n)
    if variant is Variant.ABSTRACT_PLUS:
        return math.pi * (1.5 - f + k)
    if variant is Variant.DEF_LINE2:
        return math.pi * (0.5 - f - (k + 1))
    return math.pi * (1.5 - f - k)


def count_n0(t: float, s_value: float) -> float:
    """``t/(2 pi) ln(t/(2 pi e)) + 7/8 + s_value/pi`` with the O(1/t) term dropped.

    ``s_value`` is the argument of zeta in radians.
    """
    return gram_inverse_approx(t) + s_value / math.pi


def count_riemann_von_mangoldt(t: float, s_value: float) -> float:
    """Riemann-von Mangoldt count of zeros in the strip; same closed form as :func:`count_n0`."""
    return gram_inverse_approx(t) + s_value / math.pi


# -- scanning ---------------------------------------------------------------

def _sign(x: float) -> int:
    return (x > 0) - (x < 0)


class ZeroScanner:
    """Incremental, thread-safe table of zeros ordered by height.

    The table grows one Rosser-style block at a time: from a good Gram
    point to the next good one. ``n_zeros`` in a block must equal the
    rounded counting function at its right end.
    """

    def __init__(self, max_t: float | None = None, xtol: float = 1e-12):
        self.max_t = max_scan_height() if max_t is None else float(max_t)
        self.xtol = xtol
        self._zeros: list[float] = []
        self._gram_index = 0  # last good Gram point scanned; 0 means t = 0
        self._frontier = 0.0
        self._z_frontier = hardy_z(0.0)
        self._lock = threading.Lock()

    @property
    def frontier(self) -> float:
        return self._frontier

    def zeros(self) -> list[float]:
        return list(self._zeros)

    def ensure_count(self, n: int) -> None:
        with self._lock:
            while len(self._zeros) < n:
                self._scan_block()

    def ensure_height(self, t: float) -> None:
        with self._lock:
            while self._frontier <= t:
                self._scan_block()

    def zero(self, n: int) -> float:
        self.ensure_count(n)
        return self._zeros[n - 1]

    def _scan_block(self) -> None:
        # collect Gram points up to the next good one
        points = [(self._frontier, self._z_frontier)]
        k = self._gram_index
        while True:
            k += 1
            g = gram_exact(k)
            if g > self.max_t:
                raise MissedZeroError(f"scan passed the height cap {self.max_t} (CRITLINE_MAX_T)")
            zeta = zeta_half_line(g)
            points.append((g, zeta.z))
            if zeta.zeta.real > 0:
                s_value = s_arg(g).value
                break
        expected = round(count_n0(g, s_value)) - len(self._zeros)

        brackets = self._brackets(points, expected)
        found = [brentq(hardy_z, a, b, xtol=self.xtol, maxiter=200) for a, b in brackets]
        self._zeros.extend(sorted(found))
        self._gram_index = k
        self._frontier, self._z_frontier = points[-1]

    def _brackets(self, points, expected):
        intervals = []
        for (a, za), (b, zb) in zip(points, points[1:]):
            if _sign(za) * _sign(zb) < 0:
                intervals.append([(a, za), (b, zb)])
            else:
                intervals.append(self._subdivide(a, za, b, zb, SPLIT))
        for level in range(MAX_REFINE + 1):
            brackets = [(p[0], q[0]) for iv in intervals for p, q in zip(iv, iv[1:])
                        if _sign(p[1]) * _sign(q[1]) < 0]
            if len(brackets) == expected:
                return brackets
            if len(brackets) > expected or level == MAX_REFINE:
                break
            # Rosser-type violation: refine every interval of the block
            intervals = [self._refine(iv) for iv in intervals]
        raise MissedZeroError(
            f"block [{points[0][0]:.6f}, {points[-1][0]:.6f}] holds {len(brackets)} sign changes, "
            f"counting function expects {expected}")

    @staticmethod
    def _subdivide(a, za, b, zb, parts):
        step = (b - a) / parts
        inner = [(a + i * step, hardy_z(a + i * step)) for i in range(1, parts)]
        return [(a, za), *inner, (b, zb)]

    @staticmethod
    def _refine(samples):
        out = [samples[0]]
        for (a, _), (b, zb) in zip(samples, samples[1:]):
            m = 0.5 * (a + b)
            out.append((m, hardy_z(m)))
            out.append((b, zb))
        return out


_DEFAULT_SCANNER: ZeroScanner | None = None
_DEFAULT_LOCK = threading.Lock()


def default_scanner() -> ZeroScanner:
    global _DEFAULT_SCANNER
    with _DEFAULT_LOCK:
        if _DEFAULT_SCANNER is None:
            _DEFAULT_SCANNER = ZeroScanner()
        return _DEFAULT_SCANNER


def _check_n(n) -> int:
    if int(n) != n or n < 1:
        raise DomainError(f"zero index must be a positive integer, got {n}")
    return int(n)


def find_zero(n: int, variant: Variant | str = Variant.ABSTRACT_PLUS,
              eps_ladder=DEFAULT_EPS_LADDER, scanner: ZeroScanner | None = None,
              tol: float = RESIDUAL_TOL) -> ZeroRecord:
    """Locate the n-th zero and evaluate the exact equation there.

    ``s_at`` is the half-sum argument from :func:`s_arg_at_zero`;
    ``s_n_formula`` already includes the ``theta_sign`` factor.
    """
    n = _check_n(n)
    variant = Variant(variant)
    scanner = scanner or default_scanner()
    t = scanner.zero(n)
    th = theta(t)
    s = s_arg_at_zero(t, eps_ladder).value
    formula = theta_sign(t) * s_n_formula(n, t, variant)
    return ZeroRecord(
        n=n,
        t_n=t,
        theta_at=th,
        s_at=s,
        s_n_formula=formula,
        exact_residual=th + s - (n - 1.5) * math.pi,
        variant_used=variant,
        conjecture2_pass=abs(s - formula) <= tol,
    )


def zeros_below(t: float, scanner: ZeroScanner | None = None) -> list[float]:
    """Heights of all zeros in ``(0, t)``."""
    scanner = scanner or default_scanner()
    scanner.ensure_height(t)
    return [z for z in scanner.zeros() if z < t]


# -- verifiers --------------------------------------------------------------

def _check_range(n_lo, n_hi):
    if not 1 <= n_lo <= n_hi:
        raise DomainError(f"need 1 <= n_lo <= n_hi, got [{n_lo}, {n_hi}]")


def verify_exact_equation(n_lo: int, n_hi: int, tol: float = RESIDUAL_TOL,
                          eps_ladder=DEFAULT_EPS_LADDER,
                          scanner: ZeroScanner | None = None) -> ConjectureReport:
    """Check ``|theta(t_n) + S(t_n) - (n - 3/2) pi| <= tol`` for each n in range."""
    _check_range(n_lo, n_hi)
    report = ConjectureReport("exact_equation", n_lo, n_hi)
    for n in range(n_lo, n_hi + 1):
        rec = find_zero(n, eps_ladder=eps_ladder, scanner=scanner)
        expected = (n - 1.5) * math.pi
        report.add(n, rec.theta_at + rec.s_at, expected, rec.exact_residual,
                   abs(rec.exact_residual) <= tol, t_n=rec.t_n)
    return report


def verify_arg_conjecture(n_lo: int, n_hi: int, variant: Variant | str = Variant.ABSTRACT_PLUS,
                          tol: float = RESIDUAL_TOL, eps_ladder=DEFAULT_EPS_LADDER,
                          scanner: ZeroScanner | None = None) -> ConjectureReport:
    """Compare ``S(t_n)`` against ``theta_sign(t_n) * s_n_formula(n, t_n)``.

    Every detail row also carries the other two variants and the
    half-difference of the one-sided arguments.
    """
    _check_range(n_lo, n_hi)
    variant = Variant(variant)
    scanner = scanner or default_scanner()
    report = ConjectureReport("arg_formula", n_lo, n_hi)
    for n in range(n_lo, n_hi + 1):
        t = scanner.zero(n)
        arg = s_arg_at_zero(t, eps_ladder)
        sign = theta_sign(t)
        alts = {v.value: sign * s_n_formula(n, t, v) for v in Variant}
        expected = alts[variant.value]
        residual = arg.value - expected
        report.add(n, arg.value, expected, residual, abs(residual) <= tol,
                   t_n=t, theta_sign=sign, half_difference=arg.half_difference,
                   variants=alts, variant=variant.value)
    return report


def verify_membership(t_samples, tol: float = MEMBERSHIP_TOL, skip_zeros: bool = False,
                      zero_guard: float = 1e-6) -> ConjectureReport:
    """Distance of ``frac_signed(theta/pi) + S/pi`` from ``{-1, 0, 1}``.

    Parameters
    ----------
    t_samples : iterable of float
        Heights, each away from zeros (``|Z(t)| > zero_guard``).
    skip_zeros : bool
        Drop offending samples instead of raising; the count lands in
        ``distribution["skipped"]``.

    Raises
    ------
    AtZeroError
        If a sample sits on a zero and ``skip_zeros`` is false.
    """
    samples = [float(t) for t in t_samples]
    lo = min(samples) if samples else 0.0
    hi = max(samples) if samples else 0.0
    report = ConjectureReport("membership", lo, hi)
    edges = [0.0, 1e-14, 1e-12, 1e-10, 1e-8, 1e-6, 1e-4, 1e-2, 0.5]
    bins = [0] * (len(edges) - 1)
    nearest = Counter()
    skipped = 0
    for t in samples:
        zp = zeta_half_line(t)
        if abs(zp.z) <= zero_guard:
            if skip_zeros:
                skipped += 1
                continue
            raise AtZeroError(f"membership sample t={t} lies on a zero (|Z| = {abs(zp.z):.2e})")
        m = frac_signed(theta(t) / math.pi) + s_arg(t).value / math.pi
        k = min((-1, 0, 1), key=lambda j: abs(m - j))
        d = abs(m - k)
        nearest[k] += 1
        idx = next((i for i in range(len(bins)) if d < edges[i + 1]), len(bins) - 1)
        bins[idx] += 1
        report.add(t, m, float(k), m - k, d <= tol)
    report.distribution = {
        "nearest": {str(k): nearest[k] for k in (-1, 0, 1)},
        "distance_edges": edges,
        "distance_counts": bins,
        "skipped": skipped,
    }
    return report


# -- asymptotic equation ------------------------------------------------------

def solve_asymptotic(n: int, config: EvalConfig = DEFAULT_CONFIG, xtol: float = 1e-10) -> float:
    """Solve ``t/(2 pi) ln(t/(2 pi e)) + S(t)/pi = n - 11/8`` for ``t``.

    The left side is a step function of t (it tracks the zero count), so
    the damped fixed-point map ``t <- t - lam * F(t) / F'(t)`` halves its
    damping every time ``F`` changes sign, homing in on the jump at the
    zero. Seeded at ``theta_approx_inv((n - 3/2) pi)``.

    Raises
    ------
    ConvergenceError
        If the step has not fallen below ``xtol`` after ``config.max_iter``
        iterations (at least 200).
    """
    n = _check_n(n)
    target = n - 11.0 / 8.0

    def residual(t):
        try:
            s = s_arg(t).value
        except AtZeroError:
            return 0.0
        return gram_inverse_approx(t) - 7.0 / 8.0 + s / math.pi - target

    t = theta_approx_inv((n - 1.5) * math.pi)
    lam = 1.0
    r = residual(t)
    prev_sign = _sign(r)
    for _ in range(max(config.max_iter, 200)):
        if r == 0.0:
            return t
        slope = math.log(t / (2.0 * math.pi)) / (2.0 * math.pi)
        step = lam * r / slope
        t -= step
        if abs(step) <= xtol:
            return t
        r = residual(t)
        sign = _sign(r)
        if sign != prev_sign:
            lam *= 0.5
        prev_sign = sign
    raise ConvergenceError(f"solve_asymptotic({n}) did not converge")


# -- figure data ------------------------------------------------------------

def t_grid(t_lo: float, t_hi: float, t_step: float) -> list[float]:
    if not t_step > 0:
        raise DomainError(f"t_step must be positive, got {t_step}")
    if t_hi < t_lo:
        raise DomainError(f"empty grid [{t_lo}, {t_hi}]")
    count = math.floor((t_hi - t_lo) / t_step + 1e-9) + 1
    return [t_lo + i * t_step for i in range(count)]


def export_curves(n_lo: int, n_hi: int, t_lo: float, t_hi: float, t_step: float,
                  variant: Variant | str = Variant.ABSTRACT_PLUS,
                  scanner: ZeroScanner | None = None):
    """Sample ``s_n_formula`` on a grid for every n in ``[n_lo, n_hi]``.

    Returns
    -------
    samples : list of CurveSample
        Sorted by ``(n, t)``.
    zero_lines : list of (int, float)
        ``(n, t_n)`` for every zero with ``t_lo <= t_n <= t_hi``.
    """
    if t_lo <= 2.0 * math.pi:
        raise DomainError(f"curves need t_lo > 2 pi, got {t_lo}")
    if n_hi < n_lo or n_lo < 0:
        raise DomainError(f"bad curve index range [{n_lo}, {n_hi}]")
    variant = Variant(variant)
    grid = t_grid(t_lo, t_hi, t_step)
    samples = [CurveSample(n, t, s_n_formula(n, t, variant))
               for n in range(n_lo, n_hi + 1) for t in grid]
    zero_lines = [(i, z) for i, z in enumerate(zeros_below(t_hi + 1e-12, scanner), start=1)
                  if z >= t_lo]
    return samples, zero_lines
