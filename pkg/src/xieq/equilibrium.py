"""Equilibrium points: zeros of the scaled tail integral Psi, and the
per-interval area/zero bookkeeping between consecutive ones."""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from . import golden
from .errors import DomainError, ScanExhaustedError
from .scaled_integral import ALPHA, BETA, integrate_scaled_xi, psi_explicit, psi_quad
from .specfun import dtheta, z

BRACKET_WIDTH = 5e-10
Z_BRACKET_WIDTH = 1e-9
ROOT_TOL = 1e-10
SCAN_CHUNK = 256


@dataclass(frozen=True)
class EquilibriumPoint:
    n: int
    omega: float
    bracket_lo: float
    bracket_hi: float
    psi_residual: float


@dataclass
class IntervalReport:
    n: int
    omega_lo: float
    omega_hi: float
    gap: float
    gap_ratio: float
    pos_area: float
    neg_area: float
    cancellation: float
    zeros: list[float] = field(default_factory=list)

    @property
    def zero_count(self) -> int:
        return len(self.zeros)


def scan_step(t: float) -> float:
    return math.pi / (4 * dtheta(t))


def scan_grid(start: float, stop: float, refine: int = 0) -> np.ndarray:
    pts = [start]
    while pts[-1] < stop:
        pts.append(pts[-1] + scan_step(pts[-1]) / 2**refine)
    return np.array(pts)


def bisect(f, lo: float, hi: float, f_lo: float, width: float) -> tuple[float, float]:
    """Plain bisection keeping a sign-change bracket; returns the final bracket."""
    s_lo = f_lo > 0
    while hi - lo > width:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if (f(mid) > 0) == s_lo:
            lo = mid
        else:
            hi = mid
    return lo, hi


def _psi_q(t: float) -> float:
    return psi_quad(t, ROOT_TOL).value


def remainder_band(t: float, K: float) -> float:
    return 2 * K * t ** -0.25


def find_omegas(T_start: float, count: int, validate: bool = True,
                refine: int = 0, K: float | None = None) -> list[EquilibriumPoint]:
    """First `count` sign changes of Psi above T_start.

    Psi is scanned with the explicit formula on steps pi/(4 theta'(t)).
    With `validate`, grid signs inside the remainder band 2 K T^{-1/4} are
    taken from quadrature instead, and roots are bisected on the quadrature
    value; otherwise roots are bisected on the explicit formula.
    """
    if not T_start >= 200:
        raise DomainError("find_omegas requires T_start >= 200")
    if not 1 <= count <= 10_000:
        raise DomainError("count must be in [1, 10000]")
    K = golden.load()["K"] if K is None else K
    limit = T_start + 100.0 * count
    out: list[EquilibriumPoint] = []

    def signed(t, e):
        if validate and abs(e) < remainder_band(t, K):
            return _psi_q(t)
        return e

    prev_t = T_start
    prev_v = signed(T_start, psi_explicit(T_start))
    while len(out) < count:
        if prev_t >= limit:
            raise ScanExhaustedError(
                f"only {len(out)} sign changes of Psi in [{T_start}, {limit}]")
        ts = [prev_t]
        for _ in range(SCAN_CHUNK):
            ts.append(ts[-1] + scan_step(ts[-1]) / 2**refine)
        ts = np.array(ts[1:])
        es = psi_explicit(ts)
        for t, e in zip(ts, es):
            v = signed(float(t), float(e))
            if (v > 0) != (prev_v > 0):
                pt = _refine(prev_t, float(t), validate, len(out) + 1)
                if pt is not None:
                    out.append(pt)
                    if len(out) == count:
                        return out
            prev_t, prev_v = float(t), v
    return out


def _refine(lo: float, hi: float, validate: bool, n: int) -> EquilibriumPoint | None:
    if validate:
        f_lo, f_hi = _psi_q(lo), _psi_q(hi)
        if (f_lo > 0) == (f_hi > 0):
            # explicit-formula sign was wrong at an endpoint; no quadrature root here
            return None
        a, b = bisect(_psi_q, lo, hi, f_lo, BRACKET_WIDTH)
        omega = 0.5 * (a + b)
        return EquilibriumPoint(n, omega, a, b, abs(psi_quad(omega, 1e-8).value))
    a, b = bisect(psi_explicit, lo, hi, psi_explicit(lo), BRACKET_WIDTH)
    return EquilibriumPoint(n, 0.5 * (a + b), a, b, math.nan)


def z_sign_changes(a: float, b: float) -> list[float]:
    """Sign changes of Z on (a, b), bisected to 1e-9."""
    if not 200 <= a < b or b - a > 100:
        raise DomainError("z_sign_changes requires 200 <= a < b <= a + 100")
    h = min(0.05, math.pi / (8 * dtheta(a)))
    m = max(2, math.ceil((b - a) / h))
    ts = np.linspace(a, b, m + 1)
    zs = z(ts)
    pos = zs > 0
    roots = []
    for i in np.nonzero(pos[:-1] != pos[1:])[0]:
        lo, hi = bisect(z, float(ts[i]), float(ts[i + 1]), float(zs[i]), Z_BRACKET_WIDTH)
        roots.append(0.5 * (lo + hi))
    return roots


def interval_report(lo: EquilibriumPoint, hi: EquilibriumPoint, epsilon: float = 0.1) -> IntervalReport:
    """Positive/negative Xi areas on [omega_lo, omega_hi], both scaled at omega_lo."""
    if not hi.omega > lo.omega:
        raise DomainError("interval_report needs hi.omega > lo.omega")
    zeros = z_sign_changes(lo.omega, hi.omega)
    cuts = [lo.omega, *zeros, hi.omega]
    pos, neg = [], []
    for a, b in zip(cuts[:-1], cuts[1:]):
        v, _ = integrate_scaled_xi(a, b, lo.omega)
        (pos if v > 0 else neg).append(v)
    pos_area = math.fsum(pos)
    neg_area = math.fsum(neg)
    denom = max(pos_area, -neg_area)
    canc = abs(pos_area + neg_area) / denom if denom > 0 else math.nan
    gap = hi.omega - lo.omega
    return IntervalReport(
        n=lo.n, omega_lo=lo.omega, omega_hi=hi.omega, gap=gap,
        gap_ratio=gap / lo.omega ** (1 / 6 + epsilon),
        pos_area=pos_area, neg_area=neg_area, cancellation=canc, zeros=zeros,
    )


def interval_reports(points: list[EquilibriumPoint], epsilon: float = 0.1, threads: int = 1) -> list[IntervalReport]:
    pairs = list(zip(points[:-1], points[1:]))
    if threads <= 1:
        return [interval_report(a, b, epsilon) for a, b in pairs]
    from concurrent.futures import ThreadPoolExecutor
    with ThreadPoolExecutor(max_workers=threads) as ex:
        return list(ex.map(lambda p: interval_report(p[0], p[1], epsilon), pairs))


def zero_count_histogram(reports: list[IntervalReport]) -> dict[int, int]:
    return dict(sorted(Counter(r.zero_count for r in reports).items()))


def telescoped_area(reports: list[IntervalReport]) -> float:
    """Signed area over consecutive intervals, rescaled to the first omega."""
    w0 = reports[0].omega_lo
    return math.fsum(
        (r.pos_area + r.neg_area) * math.exp(-ALPHA * (r.omega_lo - w0) + BETA * math.log(r.omega_lo / w0))
        for r in reports
    )
