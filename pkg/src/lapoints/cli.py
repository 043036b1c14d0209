"""Command-line front end.

Exit codes: 0 ok, 2 usage, 3 math domain, 4 nonconvergence, 5 bound violation.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from . import apoints, calibration, lfunc, theorem
from .characters import CharacterError, character
from .special import PoleError, SpecialDomainError

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_NONCONV, EXIT_BOUND = 0, 2, 3, 4, 5


class UsageError(Exception):
    pass


def parse_complex(text: str) -> complex:
    """'a+bi', 'a', 'bi', '-2.5e-1-3i'; j works in place of i."""
    t = text.strip().replace(" ", "").replace("i", "j")
    # complex() wants '1j', not a bare 'j'
    t = re.sub(r"(^|[+-])j", r"\g<1>1j", t)
    try:
        return complex(t)
    except ValueError:
        raise UsageError(f"cannot parse complex number {text!r}") from None


def parse_real(text: str) -> float:
    """A float, or sqrt(x)."""
    m = re.match(r"^\s*sqrt\((.+)\)\s*$", text)
    try:
        return math.sqrt(float(m.group(1))) if m else float(text)
    except ValueError:
        raise UsageError(f"cannot parse real number {text!r}") from None


def parse_grid(text: str) -> list[float]:
    items = [x for x in text.split(",") if x.strip()]
    if not items:
        raise UsageError("empty T grid")
    return [parse_real(x) for x in items]


@dataclass
class RunConfig:
    q: int
    char_index: int
    a: complex = 0j
    X: float = 1.0
    T_grid: list = field(default_factory=list)
    mode: str = "theorem1"
    phase_sign: str = "minus"
    sieve_limit: int = 10**6
    cache_dir: Path | None = None
    output_format: str = "csv"

    def character(self, need_primitive: bool = False):
        try:
            chi = character(self.q, self.char_index)
        except CharacterError as exc:
            raise UsageError(str(exc)) from None
        if need_primitive and not chi.is_primitive:
            raise UsageError(f"character ({self.q}, {self.char_index}) is not primitive")
        return chi


def _fmt(x: float) -> str:
    return f"{x:.15g}"


def _cx(z: complex) -> dict:
    return {"re": z.real, "im": z.imag}


def _print_json(obj, out):
    out.write(json.dumps(obj, indent=1) + "\n")


# --------------------------------------------------------------------------
# subcommands


_METHODS = {"reference": lfunc.Method.HURWITZ_DIRECT, "rane": lfunc.Method.RANE_AFE,
            "lprime-afe": lfunc.Method.LPRIME_AFE}


def cmd_eval(args, out) -> int:
    cfg = RunConfig(args.q, args.chi)
    chi = cfg.character()
    s = parse_complex(args.s)
    ev = lfunc.evaluate(s, chi, args.deriv, _METHODS[args.method])
    _print_json({"s": _cx(ev.s), "value": _cx(ev.value), "est_error": ev.est_error, "method": ev.method.value,
                 "deriv": args.deriv, "char_id": chi.char_id}, out)
    return EXIT_OK


def _cache_dir(args):
    return apoints.cache_dir(args.cache_dir)


def cmd_scan(args, out) -> int:
    cfg = RunConfig(args.q, args.chi, parse_complex(args.a))
    chi = cfg.character(need_primitive=True)
    T = apoints.safe_height(args.t_max, chi, cfg.a) if args.t_max >= apoints.LOW_REGION else args.t_max
    cache = apoints.APointCache(chi, cfg.a, _cache_dir(args))
    pts = cache.points_upto(T)
    rep = apoints.count_apoints(chi, cfg.a, T)
    nontriv = apoints.nontrivial(pts)
    _print_json({
        "char_id": chi.char_id, "a": _cx(cfg.a), "T_used": T, "strip": list(rep.strip),
        "exact_count": rep.exact_count, "main_term": rep.main_term, "c_a": rep.c_a,
        "discrepancy": rep.exact_count - rep.main_term,
        "located": len(pts), "located_nontrivial": len(nontriv), "cache": str(cache.path),
    }, out)
    if sum(p.multiplicity for p in pts) != rep.exact_count:
        out.write("located points do not match the winding count\n")
        return EXIT_NONCONV
    return EXIT_OK


CSV_COLUMNS = ["T_used", "X", "a_re", "a_im", "mode", "phase_sign", "emp_re", "emp_im", "rhs_re", "rhs_im",
               "residual", "normalized_residual", "n_points"]


def rows_to_csv(rows, timestamp: bool = True) -> str:
    buf = io.StringIO()
    if timestamp:
        buf.write(f"# generated {datetime.now(timezone.utc).isoformat(timespec='seconds')}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rows:
        w.writerow([_fmt(r.T), _fmt(r.X), _fmt(r.a.real), _fmt(r.a.imag), r.mode,
                    "plus" if r.phase_sign > 0 else "minus",
                    _fmt(r.empirical.real), _fmt(r.empirical.imag), _fmt(r.rhs.real), _fmt(r.rhs.imag),
                    _fmt(r.residual), _fmt(r.normalized_residual), r.n_points])
    return buf.getvalue()


def rows_to_json(rows) -> list:
    return [{
        "T_used": r.T, "X": r.X, "a": _cx(r.a), "mode": r.mode, "phase_sign": "plus" if r.phase_sign > 0 else "minus",
        "empirical": _cx(r.empirical), "rhs": _cx(r.rhs), "residual": r.residual,
        "normalized_residual": r.normalized_residual, "n_points": r.n_points, "envelope": r.envelope,
        "error": r.error,
    } for r in rows]


def _row_violates(r, mode) -> bool:
    if not r.ok:
        return False
    if mode == "corollary":
        c = calibration.corollary_c()
        env = theorem.corollary_envelope(r.T, c if c is not None else 0.0)
        return r.residual > env
    return r.normalized_residual > calibration.theorem_bound()


def cmd_verify(args, out) -> int:
    mode = args.mode.replace("-", "_")
    cfg = RunConfig(args.q, args.chi, parse_complex(args.a), parse_real(args.X), parse_grid(args.t_grid), mode,
                    args.phase_sign, args.sieve_limit, args.cache_dir, args.format)
    chi = cfg.character(need_primitive=True)
    signs = {"minus": [-1], "plus": [1], "both": [-1, 1]}[cfg.phase_sign]
    coeffs = theorem.stieltjes(chi, 1) if mode == "corollary" else None
    status = EXIT_OK
    tables = []
    for sign in signs:
        rows = theorem.residual_table(chi, cfg.a, cfg.X, cfg.T_grid, mode, sign, args.include_trivial,
                                      _cache_dir(args), args.normalization, coeffs, calibration.corollary_c())
        tables.append((sign, rows))
        if any(not r.ok and "NonConvergence" in (r.error or "") for r in rows):
            status = max(status, EXIT_NONCONV)
        elif any(not r.ok for r in rows):
            status = max(status, EXIT_DOMAIN)
        if any(_row_violates(r, mode) for r in rows):
            status = EXIT_BOUND
    for sign, rows in tables:
        tag = "plus" if sign > 0 else "minus"
        if cfg.output_format == "json":
            text = json.dumps(rows_to_json(rows), indent=1) + "\n"
        else:
            text = rows_to_csv(rows, timestamp=not args.no_timestamp)
        if args.out:
            path = Path(args.out)
            if len(tables) > 1:
                path = path.with_name(f"{path.stem}_{tag}{path.suffix}")
            path.write_text(text)
        else:
            out.write(text)
        if args.plot:
            ppath = Path(args.plot)
            if len(tables) > 1:
                ppath = ppath.with_name(f"{ppath.stem}_{tag}{ppath.suffix}")
            ppath.write_text("".join(f"{_fmt(r.T)} {_fmt(r.normalized_residual)}\n" for r in rows))
    return status


def cmd_stieltjes(args, out) -> int:
    cfg = RunConfig(args.q, args.chi)
    chi = cfg.character()
    if chi.is_principal:
        raise UsageError("Stieltjes coefficients need a nonprincipal character")
    if not 0 <= args.n_max <= 4:
        raise UsageError("--n-max must be in 0..4")
    try:
        co = theorem.stieltjes(chi, args.n_max)
    except theorem.ConsistencyError as exc:
        out.write(f"{exc}\n")
        return EXIT_BOUND
    _print_json({"char_id": co.char_id, "values": [_cx(v) for v in co.values], "method_gap": co.method_gap,
                 "smoothed_values": [_cx(v) for v in co.smoothed_values]}, out)
    return EXIT_OK


def cmd_calibrate(args, out) -> int:
    data = calibration.calibrate(args.out, _cache_dir(args))
    _print_json(data, out)
    return EXIT_OK


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lapoints", description="Dirichlet L-functions and their a-points")
    sub = p.add_subparsers(dest="command", required=True)

    def char_args(sp):
        sp.add_argument("--q", type=int, required=True)
        sp.add_argument("--chi", type=int, required=True, help="character index mod q")

    e = sub.add_parser("eval", help="evaluate L or L'")
    char_args(e)
    e.add_argument("--s", required=True, help='complex point, e.g. "0.5+14i"')
    e.add_argument("--deriv", type=int, choices=(0, 1), default=0)
    e.add_argument("--method", choices=sorted(_METHODS), default="reference")
    e.set_defaults(func=cmd_eval)

    s = sub.add_parser("scan", help="locate and count a-points up to --t-max")
    char_args(s)
    s.add_argument("--a", default="0")
    s.add_argument("--t-max", type=float, required=True)
    s.add_argument("--cache-dir")
    s.set_defaults(func=cmd_scan)

    v = sub.add_parser("verify", help="residual table for the explicit formulas")
    char_args(v)
    v.add_argument("--mode", choices=("theorem1", "lemma-zero", "corollary"), default="theorem1")
    v.add_argument("--a", default="0")
    v.add_argument("--X", default="1")
    v.add_argument("--t-grid", required=True)
    v.add_argument("--phase-sign", choices=("plus", "minus", "both"), default="minus")
    v.add_argument("--normalization", choices=("printed", "gauss"), default="printed")
    v.add_argument("--include-trivial", action="store_true", help="also sum over a-points with beta <= 0")
    v.add_argument("--sieve-limit", type=int, default=10**6)
    v.add_argument("--format", choices=("csv", "json"), default="csv")
    v.add_argument("--out")
    v.add_argument("--plot", help="two-column (T, normalized_residual) data file")
    v.add_argument("--no-timestamp", action="store_true")
    v.add_argument("--cache-dir")
    v.set_defaults(func=cmd_verify)

    st = sub.add_parser("stieltjes", help="twisted Stieltjes coefficients C_0..C_n")
    char_args(st)
    st.add_argument("--n-max", type=int, default=1)
    st.set_defaults(func=cmd_stieltjes)

    c = sub.add_parser("calibrate", help="re-measure and rewrite the calibration file")
    c.add_argument("--out")
    c.add_argument("--cache-dir")
    c.set_defaults(func=cmd_calibrate)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except (apoints.NonConvergenceError, apoints.ContourTooCloseError, apoints.MismatchError) as exc:
        sys.stderr.write(f"nonconvergence: {exc}\n")
        for w in getattr(exc, "windows", ()):
            sys.stderr.write(f"  window {w}\n")
        return EXIT_NONCONV
    except theorem.ConsistencyError as exc:
        sys.stderr.write(f"bound violation: {exc}\n")
        return EXIT_BOUND
    except (PoleError, SpecialDomainError, lfunc.LDomainError, theorem.TheoremDomainError,
            apoints.APointDomainError, ValueError, ArithmeticError) as exc:
        sys.stderr.write(f"math domain error: {exc}\n")
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
