"""Command-line front end.  Every subcommand prints CSV (default) or JSON rows.

Exit status: 0 success, 2 bad flag / domain error, 3 scan exhausted.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from . import equilibrium, golden, gram, gram_sums, scaled_integral, specfun
from .errors import ConvergenceError, DomainError, ScanExhaustedError, ToleranceError

COMMANDS = ("theta", "z", "xi", "gram", "psi", "omega", "verify", "sums", "asym")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunConfig:
    command: str
    fmt: str = "csv"
    threads: int = 1
    golden_path: str | None = None
    constants: dict = field(default_factory=dict)


def fmt_num(x) -> str:
    if isinstance(x, bool):
        return str(int(x))
    if isinstance(x, int):
        return str(x)
    if isinstance(x, float):
        return "nan" if math.isnan(x) else format(x, ".15g")
    return str(x)


def _json_num(x):
    if isinstance(x, float):
        return None if math.isnan(x) else float(format(x, ".15g"))
    return x


def emit(columns: list[str], rows: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps([{c: _json_num(r.get(c, math.nan)) for c in columns} for r in rows], indent=1))
        out.write("\n")
        return
    out.write(",".join(columns) + "\n")
    for r in rows:
        out.write(",".join(fmt_num(r.get(c, math.nan)) for c in columns) + "\n")


def _pmap(fn, items, threads):
    if threads <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as ex:
        return list(ex.map(fn, items))


def _tol(x: str) -> float:
    v = float(x)
    if not 1e-12 <= v <= 1e-2:
        raise argparse.ArgumentTypeError("tol must lie in [1e-12, 1e-2]")
    return v


def _eps(x: str) -> float:
    v = float(x)
    if not 0.05 <= v <= 0.5:
        raise argparse.ArgumentTypeError("epsilon must lie in [0.05, 0.5]")
    return v


def _positive_int(x: str) -> int:
    v = int(x)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted before or after the subcommand
    common = _Parser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--format", choices=("csv", "json"))
    common.add_argument("--threads", type=_positive_int)
    common.add_argument("--golden", metavar="PATH",
                        help="write calibration constants here, or compare against them if the file exists")
    p = _Parser(prog="xieq", description=__doc__, parents=[common])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    _add = sub.add_parser

    def add_parser(name, **kw):
        return _add(name, parents=[common], **kw)
    sub.add_parser = add_parser

    s = sub.add_parser("theta", help="theta, theta', theta'' and log Gamma(1/4 + it/2)")
    s.add_argument("--t", type=float, nargs="+", required=True)
    s.add_argument("--mode", choices=("exact", "asymptotic"), default="exact")

    s = sub.add_parser("z", help="Hardy Z, or its sign changes with --between")
    s.add_argument("--t", type=float, nargs="+")
    s.add_argument("--method", choices=("auto", "em", "rs"), default="auto")
    s.add_argument("--rs-order", type=int, choices=(0, 1), default=1)
    s.add_argument("--between", type=float, nargs=2, metavar=("A", "B"))

    s = sub.add_parser("xi", help="Xi(t) as sign and log-magnitude")
    s.add_argument("--t", type=float, nargs="+", required=True)

    s = sub.add_parser("gram", help="Gram points by index or in a window")
    s.add_argument("--nu", type=int, nargs="+")
    s.add_argument("--T", type=float)
    s.add_argument("--H", type=float)

    s = sub.add_parser("psi", help="scaled tail integral by explicit formula and/or quadrature")
    s.add_argument("--t", type=float, nargs="+", required=True)
    s.add_argument("--method", choices=("explicit", "quad", "both"), default="both")
    s.add_argument("--kind", choices=("psi", "phi1"), default="psi")
    s.add_argument("--tol", type=_tol, default=1e-9)
    s.add_argument("--at-gram", type=int, metavar="NU",
                   help="evaluate Psi(t_NU) with coefficients frozen at --t")

    for name, hlp in (("omega", "equilibrium points"), ("verify", "per-interval area and zero reports")):
        s = sub.add_parser(name, help=hlp)
        s.add_argument("--start", type=float, default=200.0)
        s.add_argument("--count", type=_positive_int, default=10)
        s.add_argument("--validate", action=argparse.BooleanOptionalAction, default=True)
        s.add_argument("--epsilon", type=_eps, default=0.1)

    s = sub.add_parser("sums", help="Gram-point sums of Psi and w1..w4")
    s.add_argument("--T", type=float, required=True)
    s.add_argument("--H", type=float, required=True)
    s.add_argument("--coefs", action="store_true", help="print the a_n, b_n arrays instead")

    s = sub.add_parser("asym", help="even/odd Gram-index sums against their predicted main terms")
    s.add_argument("--T", type=float, required=True)
    s.add_argument("--epsilon", type=_eps, default=0.3)
    s.add_argument("--psi", choices=("gram", "quad"), default="gram")
    return p


def _cmd_theta(a, cfg):
    def row(t):
        jet = specfun.theta_jet(t, a.mode)
        lg = specfun.log_gamma(complex(0.25, 0.5 * t))
        return {"t": t, "mode": jet.mode.value, "theta": jet.theta, "dtheta": jet.dtheta,
                "d2theta": jet.d2theta, "lngamma_re": lg.real, "lngamma_im": lg.imag}
    return ["t", "mode", "theta", "dtheta", "d2theta", "lngamma_re", "lngamma_im"], _pmap(row, a.t, cfg.threads)


def _cmd_z(a, cfg):
    if a.between:
        return ["zero"], [{"zero": c} for c in equilibrium.z_sign_changes(*a.between)]
    if not a.t:
        raise UsageError("z needs --t or --between")
    fns = {"auto": specfun.z, "em": specfun.z_em, "rs": lambda t: specfun.z_rs(t, a.rs_order)}

    def row(t):
        return {"t": t, "method": a.method, "z": float(fns[a.method](t))}
    return ["t", "method", "z"], _pmap(row, a.t, cfg.threads)


def _cmd_xi(a, cfg):
    def row(t):
        v = specfun.xi_scaled(t)
        return {"t": t, "sign": v.sign, "log_mag": v.log_mag}
    return ["t", "sign", "log_mag"], _pmap(row, a.t, cfg.threads)


def _cmd_gram(a, cfg):
    if a.nu:
        pts = gram.gram_points(a.nu)
    elif a.T is not None and a.H is not None:
        pts = gram.gram_points_in(a.T, a.H)
    else:
        raise UsageError("gram needs --nu or both --T and --H")
    return ["nu", "t", "residual"], [{"nu": g.nu, "t": g.t, "residual": g.residual} for g in pts]


def _cmd_psi(a, cfg):
    if a.at_gram is not None:
        gp = gram.gram_point(a.at_gram)
        rows = [{"nu": gp.nu, "t": gp.t, "T": T, "psi": scaled_integral.psi_at_gram(gp, T)} for T in a.t]
        return ["nu", "t", "T", "psi"], rows
    explicit = scaled_integral.psi_explicit if a.kind == "psi" else scaled_integral.phi1_scaled_explicit
    quad = scaled_integral.psi_quad if a.kind == "psi" else scaled_integral.phi1_scaled_quad

    def row(T):
        r = {"t": T, "kind": a.kind}
        if a.method in ("explicit", "both"):
            r["explicit"] = explicit(T)
        if a.method in ("quad", "both"):
            q = quad(T, a.tol)
            r.update(quad=q.value, err_est=q.err_est, tail_bound=q.tail_bound, evals=q.evals)
        if a.method == "both":
            r["difference"] = r["explicit"] - r["quad"]
        return r
    cols = ["t", "kind", "explicit", "quad", "err_est", "tail_bound", "evals", "difference"]
    return cols, _pmap(row, a.t, cfg.threads)


def _omegas(a, cfg):
    return equilibrium.find_omegas(a.start, a.count, a.validate, K=cfg.constants["K"])


def _cmd_omega(a, cfg):
    cols = ["n", "omega", "bracket_lo", "bracket_hi", "psi_residual"]
    return cols, [{c: getattr(p, c) for c in cols} for p in _omegas(a, cfg)]


VERIFY_COLUMNS = ["n", "omega_lo", "omega_hi", "gap", "gap_ratio", "pos_area", "neg_area",
                  "cancellation", "zero_count"]


def _cmd_verify(a, cfg):
    pts = _omegas(a, cfg)
    reps = equilibrium.interval_reports(pts, a.epsilon, cfg.threads)
    return VERIFY_COLUMNS, [{c: getattr(r, c) for c in VERIFY_COLUMNS} for r in reps]


def _cmd_sums(a, cfg):
    if a.coefs:
        c = gram_sums.coefficients(a.T)
        return ["n", "a", "b"], [{"n": int(n), "a": float(x), "b": float(y)} for n, x, y in zip(c.n, c.a, c.b)]
    r = gram_sums.gram_sum_psi(a.T, a.H)
    ws = gram_sums.w_sums(a.T, a.H)
    row = {"T": r.T, "H": r.H, "count": r.count, "sum_plain": r.sum_plain, "sum_alt": r.sum_alt,
           "main_term": r.main_term}
    for i in range(4):
        row[f"w{i + 1}"] = ws.direct[i]
        row[f"w{i + 1}_abel"] = ws.abel[i]
    cols = ["T", "H", "count", "sum_plain", "sum_alt", "main_term",
            *[f"w{i}" for i in range(1, 5)], *[f"w{i}_abel" for i in range(1, 5)]]
    return cols, [row]


def _cmd_asym(a, cfg):
    cols = ["parity", "T", "H", "epsilon", "count", "total", "main_term", "ratio"]
    rows = [{**{c: getattr(p, c) for c in cols}} for p in gram_sums.asymptotic_check(a.T, a.epsilon, a.psi)]
    return cols, rows


HANDLERS = {name: globals()[f"_cmd_{name}"] for name in COMMANDS}


def _constants(path: str | None, err) -> dict[str, float]:
    if path is None:
        return golden.load()
    p = Path(path)
    fresh = golden.calibrate()
    if not p.exists():
        p.write_text(golden.dump(fresh))
        return fresh
    stored = golden.load(p)
    bad = golden.compare(stored, fresh)
    if bad:
        raise DomainError(f"golden constants drifted: {', '.join(bad)}")
    return stored


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        a = build_parser().parse_args(argv)
        cfg = RunConfig(a.command, getattr(a, "format", "csv"), getattr(a, "threads", 1),
                        getattr(a, "golden", None))
        cfg.constants = _constants(cfg.golden_path, err)
        cols, rows = HANDLERS[a.command](a, cfg)
    except ScanExhaustedError as e:
        err.write(f"xieq: {e}\n")
        return 3
    except (UsageError, DomainError, ConvergenceError, ToleranceError, ValueError) as e:
        err.write(f"xieq: {e}\n")
        return 2
    emit(cols, rows, cfg.fmt, out)
    return 0


def main() -> None:
    sys.exit(run())
