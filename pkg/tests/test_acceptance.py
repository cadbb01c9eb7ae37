"""Exit criteria. Each test logs one PASS/FAIL line, shown in the terminal summary."""
import cmath
import csv
import io
import json
import math
import time

import numpy as np
import pytest

from critline.cli import COLUMNS, run
from critline.gram import classify_gram, gram_approx, gram_exact
from critline.special_fn import lambert_w0, log_gamma
from critline.theta import theta, theta_approx, theta_approx_inv
from critline.zeros import (
    Variant,
    count_n0,
    find_zero,
    s_n_formula,
    verify_arg_conjecture,
    verify_exact_equation,
    verify_membership,
    zeros_below,
)
from critline.zline import s_arg, zeta_half_line

from .conftest import DATA

PAPER_BAD_GRAM = (126, 134)


def check(log, label, ok, detail):
    log.append(f"[{'PASS' if ok else 'FAIL'}] {label}: {detail}")
    print(log[-1])
    assert ok, detail


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def test_ac01_gram_gap_constants(acceptance_log):
    with Timer() as tm:
        d1 = abs(gram_exact(1) - gram_approx(1))
        d2 = abs(gram_exact(2) - gram_approx(2))
    ok = abs(d1 - 0.00223698) <= 1e-7 and abs(d2 - 0.00137812) <= 1e-7 and tm.elapsed < 1.0
    check(acceptance_log, "AC1 Gram gap constants", ok,
          f"delta1={d1:.10f} delta2={d2:.10f} ({tm.elapsed:.2f}s)")


def test_ac02_gap_monotone(acceptance_log):
    with Timer() as tm:
        deltas = [classify_gram(n).delta for n in range(1, 202)]
    bad = [n for n in range(1, 201) if not deltas[n] < deltas[n - 1]]
    check(acceptance_log, "AC2 gap monotonicity n in [1,200]", not bad and tm.elapsed < 10,
          f"violations={bad} ({tm.elapsed:.2f}s)")


def test_ac03_gram_defining_property(acceptance_log):
    with Timer() as tm:
        worst = max(abs(theta(gram_exact(n)) - (n - 1) * math.pi) for n in range(1, 501))
    check(acceptance_log, "AC3 theta(g(n)) = (n-1)pi, n in [1,500]", worst <= 1e-10 and tm.elapsed < 30,
          f"max residual={worst:.2e} ({tm.elapsed:.2f}s)")


def test_ac04_zeta_real_at_gram_points(acceptance_log):
    worst_im = 0.0
    worst_arg = 0.0
    for n in range(1, 201):
        zeta = zeta_half_line(gram_exact(n)).zeta
        worst_im = max(worst_im, abs(zeta.imag))
        a = abs(cmath.phase(zeta))
        worst_arg = max(worst_arg, min(a, abs(a - math.pi)))
    flagged = [n for n in range(120, 141) if classify_gram(n).is_bad]
    matched = all(any(abs(n - p) <= 1 for p in PAPER_BAD_GRAM) for n in flagged)
    ok = worst_im <= 1e-8 and worst_arg <= 1e-6 and len(flagged) == 2 and matched
    check(acceptance_log, "AC4 zeta real at Gram points, two bad in [120,140]", ok,
          f"max|Im|={worst_im:.2e} max arg dist={worst_arg:.2e} bad={flagged}")


def test_ac05_zero_oracle(acceptance_log, oracle):
    with Timer() as tm:
        worst = max(abs(find_zero(n).t_n - oracle["zeros"][n - 1]) for n in range(1, 201))
    check(acceptance_log, "AC5 zeros match oracle, n in [1,200]", worst <= 1e-8 and tm.elapsed < 120,
          f"max|dt|={worst:.2e} ({tm.elapsed:.2f}s)")


def test_ac06_exact_equation(acceptance_log):
    with Timer() as tm:
        report = verify_exact_equation(1, 200)
    failed = [(f.key, round(f.residual, 6)) for f in report.failures]
    check(acceptance_log, "AC6 exact equation residual <= 1e-3, n in [1,200]",
          report.all_passed and tm.elapsed < 120,
          f"{report.passed}/{report.checked} pass, failures (n, residual)={failed} ({tm.elapsed:.2f}s)")


def test_ac07_arg_formula(acceptance_log):
    bad = [g.n for g in map(classify_gram, range(1, 102)) if g.is_bad]
    report = verify_arg_conjecture(1, 100, Variant.ABSTRACT_PLUS)
    # no bad Gram point below 101, so every n in [1, 100] is outside their neighbourhoods
    relevant = [f for f in report.failures if all(abs(f.key - b) > 1 for b in bad)]
    failed = [(f.key, round(f.observed, 6), round(f.expected, 6)) for f in relevant]
    check(acceptance_log, "AC7a S(t_n) = s_theta S_n(t_n), n in [1,100]", not relevant,
          f"{report.passed}/{report.checked} pass, failures (n, S, formula)={failed}")


def test_ac07_bad_gram_window_report(acceptance_log):
    frozen = json.loads((DATA / "arg_window_120_140.json").read_text())
    report = verify_arg_conjecture(120, 140, Variant.ABSTRACT_PLUS)
    complete = [d["key"] for d in report.details] == list(range(120, 141)) and all(
        set(d["variants"]) == {v.value for v in Variant} for d in report.details)
    locked = all(d["pass"] == r["pass"] and abs(d["observed"] - r["observed"]) <= 1e-6
                 and abs(d["expected"] - r["expected"]) <= 1e-6
                 for d, r in zip(report.details, frozen["rows"]))
    check(acceptance_log, "AC7b window [120,140] diagnostics regression-locked", complete and locked,
          f"failing n={[f.key for f in report.failures]}")


def test_ac08_counting_saturation(acceptance_log):
    with Timer() as tm:
        rows = []
        for T in (50.0, 100.0, 200.0, 500.0):
            found = len(zeros_below(T))
            predicted = round(count_n0(T, s_arg(T).value))
            rows.append((T, found, predicted))
    ok = all(f == p for _, f, p in rows) and rows[1][1] == 29 and tm.elapsed < 180
    check(acceptance_log, "AC8 zeros below T = round(N0(T))", ok,
          f"(T, found, N0)={rows} ({tm.elapsed:.2f}s)")


def test_ac09_membership_distribution(acceptance_log):
    grid = np.round(np.arange(10.0, 100.0 + 1e-9, 0.1), 10)
    report = verify_membership(grid, skip_zeros=True)
    dist = report.distribution
    schema = (report.kind == "membership" and report.passed <= report.checked
              and len(report.failures) == report.checked - report.passed
              and sum(dist["distance_counts"]) == report.checked
              and report.checked + dist["skipped"] == len(grid))
    gram = verify_membership([gram_exact(n) for n in range(1, 30)])
    ok = schema and gram.max_abs_residual <= 1e-8
    check(acceptance_log, "AC9 membership distribution reported", ok,
          f"{report.passed}/{report.checked} within 1e-6, nearest={dist['nearest']}, "
          f"Gram max distance={gram.max_abs_residual:.1e}")


def test_ac10_property_suites(acceptance_log):
    timings = {}
    failures = []

    with Timer() as tm:
        for x in np.logspace(-6, 12, 2000):
            w = lambert_w0(x)
            if abs(w * math.exp(w) - x) > 1e-12 * max(1.0, x):
                failures.append(("lambert", x))
    timings["lambert"] = tm.elapsed

    with Timer() as tm:
        for re in np.linspace(0.25, 2.0, 8):
            for im in np.linspace(-100.0, 100.0, 101):
                z = complex(re, im)
                if abs(cmath.exp(log_gamma(z + 1) - log_gamma(z)) - z) > 1e-10 * abs(z):
                    failures.append(("recurrence", z))
                a, b = log_gamma(z.conjugate()), log_gamma(z).conjugate()
                if abs(a.real - b.real) > 1e-12 or abs(a.imag - b.imag) > 1e-12:
                    failures.append(("conjugate", z))
    timings["log_gamma"] = tm.elapsed

    with Timer() as tm:
        for t in np.geomspace(20.0, 1e6, 1000):
            if abs(theta_approx_inv(theta_approx(t)) - t) > 1e-9 * t:
                failures.append(("theta_inv", t))
    timings["theta_inv"] = tm.elapsed

    with Timer() as tm:
        for t in np.linspace(1.0, 500.0, 2000):
            if abs((cmath.exp(1j * theta(t)) * zeta_half_line(t).zeta).imag) > 1e-8:
                failures.append(("rotation", t))
    timings["rotation"] = tm.elapsed

    with Timer() as tm:
        for n in range(1, 60):
            for t in np.linspace(7.0, 500.0, 40):
                d = s_n_formula(n, t, Variant.DEF_LINE2) - (s_n_formula(n, t, Variant.DEF_LINE3) - 2 * math.pi)
                if abs(d) > 1e-9:
                    failures.append(("variant", (n, t)))
    timings["variant"] = tm.elapsed

    slow = {k: v for k, v in timings.items() if v >= 10}
    check(acceptance_log, "AC10 property suites", not failures and not slow,
          f"failures={failures[:5]} timings=" + ", ".join(f"{k} {v:.2f}s" for k, v in timings.items()))


def _plot_zero_lines(*argv):
    out = io.StringIO()
    assert run(["plot-data", "--curves", "zeros", *argv], stdout=out) == 0
    return [(int(r["n"]), float(r["t_n"])) for r in csv.DictReader(io.StringIO(out.getvalue()))]


def _plot_curves(*argv):
    out = io.StringIO()
    assert run(["plot-data", "--curves", "sn", *argv], stdout=out) == 0
    return list(csv.DictReader(io.StringIO(out.getvalue())))


@pytest.mark.parametrize("label, n_lo, n_hi, t_lo, t_hi", [
    ("Fig. 1", 0, 14, 10.0, 65.0),
    ("Fig. 2", 120, 140, 266.0, 304.0),
])
def test_ac11_figure_reproduction(acceptance_log, label, n_lo, n_hi, t_lo, t_hi):
    args = ["--n-from", str(n_lo), "--n-to", str(n_hi), "--t-from", str(t_lo),
            "--t-to", str(t_hi), "--t-step", "0.05"]
    lines = _plot_zero_lines(*args)
    curves = _plot_curves(*args)
    worst = max(abs(t - find_zero(n).t_n) for n, t in lines)
    ns = sorted({int(r["n"]) for r in curves})
    ok = (worst <= 1e-8 and ns == list(range(n_lo, n_hi + 1))
          and list(curves[0]) == COLUMNS["curves"] and len(lines) > 0)
    check(acceptance_log, f"AC11 {label} plot data", ok,
          f"{len(curves)} samples, {len(lines)} zero lines (n={lines[0][0]}..{lines[-1][0]}), "
          f"max|dt|={worst:.1e}")
