"""Command-line front end.

Exit status: 0 success, 1 verification failure (``verify`` only), 2 usage
error, 3 numerical failure.
"""
from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import math
import sys
from enum import Enum

from .errors import CritlineError, DomainError, NumericalError
from .gram import classify_gram
from .theta import theta, theta_approx
from .zeros import (
    Variant,
    default_scanner,
    export_curves,
    find_zero,
    t_grid,
    verify_arg_conjecture,
    verify_exact_equation,
    verify_membership,
)
from .zline import DEFAULT_EPS_LADDER, hardy_z, s_arg_at_zero

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3

VARIANTS = {"abstract": Variant.ABSTRACT_PLUS, "line2": Variant.DEF_LINE2, "line3": Variant.DEF_LINE3}
KINDS = {"exact": "exact_equation", "arg": "arg_formula", "membership": "membership"}

COLUMNS = {
    "theta": ["t", "theta", "theta_approx", "hardy_z"],
    "gram": ["n", "exact", "approx", "delta", "is_bad"],
    "zeros": ["n", "t_n", "theta", "S", "S_n", "residual", "variant", "pass"],
    "curves": ["n", "t", "s_n"],
    "zero_lines": ["n", "t_n"],
    "convergence": ["eps", "left", "right", "half_sum", "half_difference"],
    "failures": ["key", "observed", "expected", "residual"],
}


class UsageError(CritlineError):
    pass


def fmt(value):
    """Serialize one cell: 15 significant digits, lowercase exponent."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".15g")
    if isinstance(value, Enum):
        return value.value
    return str(value)


def _jsonable(value):
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        return float(format(value, ".15g")) if math.isfinite(value) else None
    if isinstance(value, Enum):
        return value.value
    if dataclasses.is_dataclass(value):
        return {f.name: _jsonable(getattr(value, f.name)) for f in dataclasses.fields(value)}
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return str(value)


def render(columns, rows, fmt_name):
    if fmt_name == "json":
        return json.dumps([_jsonable(dict(zip(columns, r))) for r in rows], indent=1) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for r in rows:
        writer.writerow([fmt(v) for v in r])
    return buf.getvalue()


def _eps_ladder(text):
    try:
        values = tuple(float(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad eps ladder {text!r}")
    return values


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default=None)
    common.add_argument("--output", "-o", default=None, help="output path (default: stdout)")
    common.add_argument("--variant", choices=tuple(VARIANTS), default="abstract")
    common.add_argument("--eps-ladder", type=_eps_ladder, default=DEFAULT_EPS_LADDER)

    idx = argparse.ArgumentParser(add_help=False)
    idx.add_argument("--from", dest="n_lo", type=int, default=1)
    idx.add_argument("--to", dest="n_hi", type=int, default=None)

    grid = argparse.ArgumentParser(add_help=False)
    grid.add_argument("--t-from", dest="t_lo", type=float, default=None)
    grid.add_argument("--t-to", dest="t_hi", type=float, default=None)
    grid.add_argument("--t-step", dest="t_step", type=float, default=None)

    parser = argparse.ArgumentParser(prog="critline", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("theta", parents=[common, grid], help="theta, theta_approx and Z on a t grid")
    sub.add_parser("gram", parents=[common, idx], help="Gram point table")
    sub.add_parser("zeros", parents=[common, idx], help="zero table with exact-equation residuals")
    p = sub.add_parser("verify", parents=[common, idx, grid], help="run a conjecture check")
    p.add_argument("--kind", choices=tuple(KINDS), required=True)
    p.add_argument("--tol", type=float, default=None)
    p = sub.add_parser("plot-data", parents=[common, grid], help="curve data behind the figures")
    p.add_argument("--curves", choices=("sn", "zeros", "convergence"), default="sn")
    p.add_argument("--n-from", dest="n_lo", type=int, default=0)
    p.add_argument("--n-to", dest="n_hi", type=int, default=None)
    return parser


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.command}: missing {', '.join('--' + m.replace('_', '-') for m in missing)}")


def _index_range(args):
    if args.n_hi is None:
        args.n_hi = args.n_lo
    if not 1 <= args.n_lo <= args.n_hi:
        raise UsageError(f"bad index range [{args.n_lo}, {args.n_hi}]")
    return range(args.n_lo, args.n_hi + 1)


def _grid(args):
    _need(args, "t_lo", "t_hi", "t_step")
    try:
        return t_grid(args.t_lo, args.t_hi, args.t_step)
    except DomainError as exc:
        raise UsageError(str(exc))


def cmd_theta(args):
    rows = [(t, theta(t), theta_approx(t) if t > 0 else float("nan"), hardy_z(t)) for t in _grid(args)]
    return render(COLUMNS["theta"], rows, args.format or "csv"), EXIT_OK


def cmd_gram(args):
    rows = []
    for n in _index_range(args):
        r = classify_gram(n)
        rows.append((r.n, r.exact, r.approx, r.delta, r.is_bad))
    return render(COLUMNS["gram"], rows, args.format or "csv"), EXIT_OK


def cmd_zeros(args):
    variant = VARIANTS[args.variant]
    rows = []
    for n in _index_range(args):
        r = find_zero(n, variant=variant, eps_ladder=args.eps_ladder)
        rows.append((r.n, r.t_n, r.theta_at, r.s_at, r.s_n_formula, r.exact_residual,
                     r.variant_used, r.conjecture2_pass))
    return render(COLUMNS["zeros"], rows, args.format or "csv"), EXIT_OK


def cmd_verify(args):
    kind = KINDS[args.kind]
    extra = {} if args.tol is None else {"tol": args.tol}
    if kind == "membership":
        report = verify_membership(_grid(args), skip_zeros=True, **extra)
    else:
        _index_range(args)
        if kind == "exact_equation":
            report = verify_exact_equation(args.n_lo, args.n_hi, eps_ladder=args.eps_ladder, **extra)
        else:
            report = verify_arg_conjecture(args.n_lo, args.n_hi, VARIANTS[args.variant],
                                           eps_ladder=args.eps_ladder, **extra)
    if (args.format or "json") == "json":
        text = json.dumps(_jsonable(report), indent=1) + "\n"
    else:
        rows = [(f.key, f.observed, f.expected, f.residual) for f in report.failures]
        text = render(COLUMNS["failures"], rows, "csv")
    return text, EXIT_OK if report.all_passed else EXIT_FAILED


def cmd_plot_data(args):
    fmt_name = args.format or "csv"
    if args.curves == "convergence":
        # eps-ladder diagnostics of the half-sum around one zero
        n = max(args.n_lo, 1)
        t0 = default_scanner().zero(n)
        arg = s_arg_at_zero(t0, args.eps_ladder)
        rows = [(e, l, r, 0.5 * (l + r), 0.5 * (r - l)) for e, l, r in arg.ladder]
        return render(COLUMNS["convergence"], rows, fmt_name), EXIT_OK
    _need(args, "t_lo", "t_hi", "t_step")
    if args.n_hi is None:
        args.n_hi = args.n_lo
    if args.n_lo < 0 or args.n_hi < args.n_lo:
        raise UsageError(f"bad curve index range [{args.n_lo}, {args.n_hi}]")
    try:
        samples, lines = export_curves(args.n_lo, args.n_hi, args.t_lo, args.t_hi, args.t_step,
                                       VARIANTS[args.variant])
    except DomainError as exc:
        raise UsageError(str(exc))
    if args.curves == "zeros":
        return render(COLUMNS["zero_lines"], lines, fmt_name), EXIT_OK
    rows = [(s.n, s.t, s.s_n_value) for s in samples]
    return render(COLUMNS["curves"], rows, fmt_name), EXIT_OK


COMMANDS = {"theta": cmd_theta, "gram": cmd_gram, "zeros": cmd_zeros,
            "verify": cmd_verify, "plot-data": cmd_plot_data}


def run(argv=None, stdout=None) -> int:
    """Parse ``argv``, execute the command and return the exit status."""
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        text, status = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"critline: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NumericalError, DomainError) as exc:
        print(f"critline: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
