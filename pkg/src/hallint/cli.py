"""Command line front end: scalar evaluation, identity sweeps, device metrics.

Subcommands::

    hallint eval EXPR [named args] [--tol T] [--format F]
    hallint verify [--identities a,b] [--grid 0.1,0.2,...] [--tol T] [--format F]
    hallint device (--re R --rd R --rsh R | --alpha A --beta B) [--tol T] [--format F]

Data goes to stdout, diagnostics (including the verify summary line) to
stderr.  Exit codes: 0 all good, 1 at least one identity row failed (rows are
still emitted), 2 domain error or bad invocation, 3 accuracy failure.
Numbers are printed with 17 significant digits in csv/json output and 10 in
human tables.  The environment variable ``HALLINT_EVAL_BUDGET`` caps the
number of integrand evaluations per integral.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from dataclasses import dataclass

from . import device as dev
from . import elliptic as el
from . import integrals as ig
from .errors import AccuracyError, DomainError, EvaluationError
from .identities import (
    IdentityReport,
    make_report,
    operator_residual_d1,
    operator_residual_kernel,
    recip_residual,
    vanishing_residual,
    wronskian_residual,
)

__all__ = ["main", "VerifyConfig", "REGISTERED_IDENTITIES", "run_identity"]

DEFAULT_GRID = tuple(round(0.1 * k, 1) for k in range(1, 10))
DEFAULT_EVAL_TOL = 1e-9
FORMATS = ("csv", "json", "table")

# ---------------------------------------------------------------------------
# identity registry


@dataclass(frozen=True)
class VerifyConfig:
    """Sweep configuration for the identity suite."""

    grid_points: tuple[float, ...] = DEFAULT_GRID
    tolerance: float | None = None  # None: each identity's documented default
    identities: tuple[str, ...] = ()  # empty: all registered
    output_format: str = "table"

    def __post_init__(self):
        for v in self.grid_points:
            if not (math.isfinite(v) and 0.0 < v < 1.0):
                raise DomainError(f"grid values must lie in (0, 1), got {v!r}")
        if self.tolerance is not None and not self.tolerance > 0.0:
            raise DomainError(f"tolerance must be positive, got {self.tolerance!r}")
        if self.output_format not in FORMATS:
            raise DomainError(f"output format must be one of {FORMATS}, got {self.output_format!r}")
        for name in self.identities:
            if name not in REGISTERED_IDENTITIES:
                raise DomainError(
                    f"unknown identity {name!r}; registered: {', '.join(sorted(REGISTERED_IDENTITIES))}"
                )


def _subtol(tol: float, parts: int = 4) -> float:
    return max(min(1e-9, tol / parts), 1e-13)


def _ordered_pairs(grid):
    return [(a, b) for a in grid for b in grid if b < a]


def _rows_a_symmetry(grid, tol):
    qtol = _subtol(tol)
    rows = []
    for p in grid:
        for q in grid:
            lhs = ig.a_double(p, q, qtol)
            rhs = ig.a_double(math.sqrt(1.0 - p * p), math.sqrt(1.0 - q * q), qtol)
            rows.append(((("p", p), ("q", q)), make_report("A-symmetry", lhs, rhs, tol)))
    return rows


def _rows_i_symmetry(grid, tol):
    qtol = _subtol(tol)
    rows = []
    for alpha, beta in _ordered_pairs(grid):
        lhs = ig.i_direct(alpha, beta, qtol)
        rhs = ig.i_direct(1.0 - beta, 1.0 - alpha, qtol)
        rows.append(
            ((("alpha", alpha), ("beta", beta)), make_report("I-symmetry", lhs, rhs, tol))
        )
    return rows


def _rows_i_diagonal(grid, tol):
    qtol = _subtol(tol)
    return [
        ((("alpha", a),), make_report("I-diagonal", ig.i_direct(a, a, qtol), 0.0, tol))
        for a in grid
    ]


def _rows_route_equivalence(grid, tol):
    qtol = _subtol(tol)
    rows = []
    for alpha, beta in _ordered_pairs(grid):
        lhs = ig.i_direct(alpha, beta, qtol)
        rhs = ig.i1a_representation(alpha, beta, qtol) - ig.i2_representation(alpha, beta, qtol)
        rows.append(
            ((("alpha", alpha), ("beta", beta)), make_report("route-equivalence", lhs, rhs, tol))
        )
    return rows


def _rows_reciprocity(grid, tol):
    return [
        ((("alpha", a), ("beta", b)), recip_residual(a, b, tol))
        for a, b in _ordered_pairs(grid)
    ]


def _rows_vanishing(grid, tol):
    return [((("alpha", a),), vanishing_residual(a, tol)) for a in grid]


def _rows_wronskian(grid, tol):
    return [((("lambda", m),), wronskian_residual(m, tol)) for m in grid]


def _rows_operator_d1(grid, tol):
    return [
        ((("alpha", a), ("beta", b)), operator_residual_d1(a, b, tol=tol))
        for a in grid
        for b in grid
    ]


def _duhamel_kernel(a: float, t: float) -> float:
    return 1.0 / ((math.sqrt(t) + math.sqrt(a)) * math.sqrt(t))


def _rows_operator_kernel(grid, tol):
    return [
        ((("alpha", a), ("beta", b)), operator_residual_kernel(a, b, _duhamel_kernel, tol=tol))
        for a in grid
        for b in grid
    ]


def _rows_snr_complement(grid, tol):
    qtol = _subtol(tol)
    rows = []
    for alpha, beta in _ordered_pairs(grid):
        lhs = dev.snr_3c(alpha, beta, qtol)
        rhs = dev.snr_3c(1.0 - beta, 1.0 - alpha, qtol)
        rows.append(
            ((("alpha", alpha), ("beta", beta)), make_report("snr-complement", lhs, rhs, tol))
        )
    return rows


# name -> (row builder, default tolerance)
REGISTERED_IDENTITIES = {
    "A-symmetry": (_rows_a_symmetry, 1e-8),
    "I-symmetry": (_rows_i_symmetry, 1e-8),
    "I-diagonal": (_rows_i_diagonal, 1e-9),
    "route-equivalence": (_rows_route_equivalence, 1e-7),
    "reciprocity": (_rows_reciprocity, 1e-8),
    "vanishing": (_rows_vanishing, 1e-8),
    "wronskian": (_rows_wronskian, 1e-10),
    "operator-d1": (_rows_operator_d1, 1e-5),
    "operator-kernel": (_rows_operator_kernel, 1e-5),
    "snr-complement": (_rows_snr_complement, 1e-8),
}


def run_identity(name: str, grid, tol: float | None = None):
    """All report rows for one registered identity over a parameter grid.

    Returns a list of (params, report) with params a tuple of (name, value)
    pairs; rows come back sorted by parameter values.
    """
    if name not in REGISTERED_IDENTITIES:
        raise DomainError(
            f"unknown identity {name!r}; registered: {', '.join(sorted(REGISTERED_IDENTITIES))}"
        )
    builder, default_tol = REGISTERED_IDENTITIES[name]
    rows = builder(tuple(grid), default_tol if tol is None else float(tol))
    rows.sort(key=lambda row: tuple(v for _, v in row[0]))
    return rows


# ---------------------------------------------------------------------------
# formatting


def _fmt(x: float) -> str:
    return format(x, ".17g")


def _fmt_table(x: float) -> str:
    return format(x, ".10g")


def _params_string(params) -> str:
    return ";".join(f"{k}={_fmt(v)}" for k, v in params)


def _report_fields(params, rep: IdentityReport) -> list[str]:
    return [
        rep.name,
        _params_string(params),
        _fmt(rep.lhs),
        _fmt(rep.rhs),
        _fmt(rep.abs_residual),
        _fmt(rep.rel_residual),
        _fmt(rep.tolerance),
        "true" if rep.passed else "false",
    ]


CSV_HEADER = ["identity", "params", "lhs", "rhs", "abs_residual", "rel_residual", "tol", "passed"]


def _emit_reports(rows, fmt: str, out) -> None:
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for params, rep in rows:
            writer.writerow(_report_fields(params, rep))
    elif fmt == "json":
        payload = [
            {
                "identity": rep.name,
                "params": {k: v for k, v in params},
                "lhs": rep.lhs,
                "rhs": rep.rhs,
                "abs_residual": rep.abs_residual,
                "rel_residual": rep.rel_residual,
                "tol": rep.tolerance,
                "passed": rep.passed,
            }
            for params, rep in rows
        ]
        json.dump(payload, out, indent=2, sort_keys=True)
        out.write("\n")
    else:
        header = f"{'identity':<18} {'params':<42} {'lhs':>17} {'rhs':>17} {'abs_res':>10} {'rel_res':>10} {'tol':>8} verdict"
        out.write(header + "\n")
        out.write("-" * len(header) + "\n")
        for params, rep in rows:
            out.write(
                f"{rep.name:<18} {_params_string(params):<42} "
                f"{_fmt_table(rep.lhs):>17} {_fmt_table(rep.rhs):>17} "
                f"{rep.abs_residual:>10.3e} {rep.rel_residual:>10.3e} "
                f"{rep.tolerance:>8.0e} {'PASS' if rep.passed else 'FAIL'}\n"
            )


# ---------------------------------------------------------------------------
# subcommands

_EVAL_SIGNATURES = {
    "K": ("lam",),
    "Kprime": ("lam",),
    "E": ("lam",),
    "F": ("phi", "lam"),
    "nome": ("lam",),
    "A": ("p", "q"),
    "I": ("alpha", "beta"),
    "G3C": ("alpha", "beta"),
    "G4C": ("p", "f"),
    "SNR3C": ("alpha", "beta"),
    "SNR4C": ("p", "f"),
}

_FLAG_OF = {
    "lam": "--lambda",
    "phi": "--phi",
    "p": "--p",
    "q": "--q",
    "f": "--f",
    "alpha": "--alpha",
    "beta": "--beta",
}


def _cmd_eval(args, out) -> int:
    expr = args.expr
    needed = _EVAL_SIGNATURES[expr]
    got = {}
    for name in ("lam", "phi", "p", "q", "f", "alpha", "beta"):
        value = getattr(args, name)
        if value is None:
            continue
        if name not in needed:
            raise DomainError(f"{expr} does not take {_FLAG_OF[name]}")
        got[name] = value
    missing = [n for n in needed if n not in got]
    if missing:
        raise DomainError(f"{expr} requires {', '.join(_FLAG_OF[n] for n in missing)}")
    tol = args.tol if args.tol is not None else DEFAULT_EVAL_TOL
    eps_like = 4.0 * math.ulp(1.0)

    if expr == "K":
        value, err = el.complete_k(got["lam"]), None
    elif expr == "Kprime":
        value, err = el.complete_kprime(got["lam"]), None
    elif expr == "E":
        value, err = el.complete_e(got["lam"]), None
    elif expr == "nome":
        value, err = el.nome(got["lam"]), None
    elif expr == "F":
        value, err = el.incomplete_f(got["phi"], got["lam"]), None
    elif expr == "A":
        value, err = ig.a_double(got["p"], got["q"], tol), tol
    elif expr == "I":
        value, err = ig.i_direct(got["alpha"], got["beta"], tol), tol
    elif expr == "G3C":
        value, err = dev.g_h0_3c(got["alpha"], got["beta"], tol), tol
    elif expr == "G4C":
        value, err = dev.g_h0_4c(got["p"], got["f"], tol), tol
    elif expr == "SNR3C":
        value, err = dev.snr_3c(got["alpha"], got["beta"], tol), tol
    else:
        value, err = dev.snr_4c(got["p"], got["f"], tol), tol
    if err is None:
        err = eps_like * abs(value)

    if args.format == "json":
        json.dump({"expr": expr, "value": value, "abs_error_estimate": err}, out)
        out.write("\n")
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["expr", "value", "abs_error_estimate"])
        writer.writerow([expr, _fmt(value), _fmt(err)])
    else:
        out.write(_fmt(value) + "\n")
        print(f"abs error estimate <= {err:.3e}", file=sys.stderr)
    return 0


def _cmd_verify(args, out) -> int:
    names = tuple(args.identities.split(",")) if args.identities else ()
    grid = (
        tuple(float(v) for v in args.grid.split(","))
        if args.grid
        else DEFAULT_GRID
    )
    config = VerifyConfig(
        grid_points=grid,
        tolerance=args.tol,
        identities=names,
        output_format=args.format or "table",
    )
    selected = config.identities or tuple(sorted(REGISTERED_IDENTITIES))
    rows = []
    for name in selected:
        rows.extend(run_identity(name, config.grid_points, config.tolerance))
    rows.sort(key=lambda row: (row[1].name, tuple(v for _, v in row[0])))
    _emit_reports(rows, config.output_format, out)

    failed = [row for row in rows if not row[1].passed]
    worst = max(rows, key=lambda row: row[1].abs_residual)
    print(
        f"verify: {len(rows)} rows, {len(failed)} failed, "
        f"max |residual| = {worst[1].abs_residual:.3e} "
        f"({worst[1].name}, {_params_string(worst[0])})",
        file=sys.stderr,
    )
    return 1 if failed else 0


def _cmd_device(args, out) -> int:
    by_resistance = any(v is not None for v in (args.re, args.rd, args.rsh))
    by_params = args.alpha is not None or args.beta is not None
    if by_resistance and by_params:
        raise DomainError("give either --re/--rd/--rsh or --alpha/--beta, not both")
    if by_resistance:
        if None in (args.re, args.rd, args.rsh):
            raise DomainError("resistance input needs all of --re, --rd, --rsh")
        pair = dev.params_from_resistances(dev.Resistances3C(args.re, args.rd, args.rsh))
    elif by_params:
        if args.alpha is None or args.beta is None:
            raise DomainError("parameter input needs both --alpha and --beta")
        pair = ig.ParamPair(args.alpha, args.beta)
    else:
        raise DomainError("device needs --re/--rd/--rsh or --alpha/--beta")

    tol = args.tol if args.tol is not None else DEFAULT_EVAL_TOL
    geometry = dev.g_h0_3c(pair.alpha, pair.beta, tol)
    snr = dev.snr_3c(pair.alpha, pair.beta, tol)
    comp = dev.complement_device(pair)
    comp_snr = dev.snr_3c(comp.alpha, comp.beta, tol)
    diff = snr - comp_snr

    if args.format == "json":
        json.dump(
            {
                "alpha": pair.alpha,
                "beta": pair.beta,
                "geometry_factor": geometry,
                "snr": snr,
                "complement": {"alpha": comp.alpha, "beta": comp.beta, "snr": comp_snr},
                "snr_difference": diff,
            },
            out,
            indent=2,
            sort_keys=True,
        )
        out.write("\n")
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(
            ["alpha", "beta", "geometry_factor", "snr",
             "complement_alpha", "complement_beta", "complement_snr", "snr_difference"]
        )
        writer.writerow(
            [_fmt(pair.alpha), _fmt(pair.beta), _fmt(geometry), _fmt(snr),
             _fmt(comp.alpha), _fmt(comp.beta), _fmt(comp_snr), _fmt(diff)]
        )
    else:
        rows = [
            ("alpha", pair.alpha),
            ("beta", pair.beta),
            ("G_H0(3C)", geometry),
            ("SNR (unit constant)", snr),
            ("complement alpha", comp.alpha),
            ("complement beta", comp.beta),
            ("complement SNR", comp_snr),
            ("SNR difference", diff),
        ]
        for label, value in rows:
            out.write(f"{label:<20} {_fmt_table(value)}\n")
    return 0


# ---------------------------------------------------------------------------
# entry point


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hallint",
        description="Iterated elliptic integrals, identity sweeps, Hall-device metrics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one quantity")
    p_eval.add_argument("expr", choices=sorted(_EVAL_SIGNATURES))
    p_eval.add_argument("--lambda", dest="lam", type=float, help="elliptic parameter in [0,1]")
    p_eval.add_argument("--phi", type=float, help="amplitude in [0, pi/2]")
    p_eval.add_argument("--p", type=float)
    p_eval.add_argument("--q", type=float)
    p_eval.add_argument("--f", type=float)
    p_eval.add_argument("--alpha", type=float)
    p_eval.add_argument("--beta", type=float)
    p_eval.add_argument("--tol", type=float)
    p_eval.add_argument("--format", choices=FORMATS, default="table")

    p_verify = sub.add_parser("verify", help="run identity sweeps over a grid")
    p_verify.add_argument("--identities", help="comma-separated identity names (default: all)")
    p_verify.add_argument("--grid", help="comma-separated grid values in (0,1)")
    p_verify.add_argument("--tol", type=float, help="override every identity's tolerance")
    p_verify.add_argument("--format", choices=FORMATS, default="table")

    p_device = sub.add_parser("device", help="3-contact device metrics and complement")
    p_device.add_argument("--re", type=float, help="contact resistance R_e (ohm)")
    p_device.add_argument("--rd", type=float, help="branch resistance R_d (ohm)")
    p_device.add_argument("--rsh", type=float, help="sheet resistance R_sh (ohm)")
    p_device.add_argument("--alpha", type=float)
    p_device.add_argument("--beta", type=float)
    p_device.add_argument("--tol", type=float)
    p_device.add_argument("--format", choices=FORMATS, default="table")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "eval":
            return _cmd_eval(args, out)
        if args.command == "verify":
            return _cmd_verify(args, out)
        return _cmd_device(args, out)
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 2
    except (AccuracyError, EvaluationError) as exc:
        print(f"accuracy failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
