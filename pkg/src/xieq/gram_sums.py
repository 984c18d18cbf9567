"""Sums of Psi over Gram points and their exponential-sum pieces w1..w4."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, WindowError
from .gram import gram_points_in
from .scaled_integral import A_XI, ALPHA, gram_window, psi_at_gram_many, psi_quad
from .specfun import compensated_sum, dtheta


@dataclass(frozen=True)
class Coefs:
    T: float
    n: np.ndarray
    a: np.ndarray
    b: np.ndarray

    def a_increasing(self) -> bool:
        return bool(np.all(np.diff(self.a) > 0))

    def ab_decreasing(self) -> bool:
        return bool(np.all(np.diff(self.a * self.b) < 0))


@dataclass(frozen=True)
class SumReport:
    T: float
    H: float
    count: int
    sum_plain: float
    sum_alt: float
    main_term: float
    w: tuple[float, float, float, float]
    lead: float
    alt_count: int

    def plain_decomposed(self) -> float:
        """lead * sum (-1)^nu + w1 + w2."""
        return math.fsum([self.lead * self.alt_count, self.w[0], self.w[1]])

    def alt_decomposed(self) -> float:
        """lead * count + w3 + w4."""
        return math.fsum([self.lead * self.count, self.w[2], self.w[3]])


@dataclass(frozen=True)
class WSums:
    direct: tuple[float, float, float, float]
    abel: tuple[float, float, float, float]


@dataclass(frozen=True)
class ParitySum:
    parity: int
    T: float
    H: float
    epsilon: float
    count: int
    total: float
    main_term: float

    @property
    def ratio(self) -> float:
        return abs(self.total) / abs(self.main_term)


def p0(T: float) -> float:
    return math.sqrt(T / (2 * math.pi))


def coefficients(T: float) -> Coefs:
    """a_n = (2a/alpha)/(1 + (theta'(T) - ln n)^2/alpha^2), b_n = (theta'(T) - ln n)/alpha, 2 <= n < P0."""
    if not T >= 200:
        raise DomainError("coefficients require T >= 200")
    P = p0(T)
    n = np.arange(2, math.floor(P) + 1, dtype=float)
    n = n[n < P]
    f = dtheta(T) - np.log(n)
    a = (2 * A_XI / ALPHA) / (1 + f * f / ALPHA**2)
    return Coefs(T=T, n=n, a=a, b=f / ALPHA)


def leading_coefficient(T: float) -> float:
    d = dtheta(T)
    return (2 * A_XI / ALPHA) / (1 + d * d / ALPHA**2)


def _check_window(T: float, H: float):
    if not T >= 200:
        raise DomainError("Gram sums require T >= 200")
    if not H > 0:
        raise DomainError("H must be positive")
    limit = min(T ** 0.5, gram_window(T))
    if H > limit:
        raise WindowError(f"H={H} exceeds the frozen-coefficient window {limit:.6g} at T={T}")


def _gram_window_points(T: float, H: float):
    pts = gram_points_in(T, H)
    return (np.array([g.nu for g in pts], dtype=np.int64),
            np.array([g.t for g in pts], dtype=float))


def _inner_sums(coefs: Coefs, nus: np.ndarray, ts: np.ndarray):
    """Per-n inner sums over Gram points, each divided by sqrt(n):
    (-1)^nu cos, (-1)^nu sin, cos, sin of t_nu ln n."""
    k = coefs.n.size
    if ts.size == 0:
        z = np.zeros(k)
        return z, z, z, z
    ph = ts[:, None] * np.log(coefs.n)[None, :]
    c, s = np.cos(ph), np.sin(ph)
    sgn = np.where(nus % 2 == 0, 1.0, -1.0)[:, None]
    root = np.sqrt(coefs.n)
    return (compensated_sum(sgn * c, axis=0) / root, compensated_sum(sgn * s, axis=0) / root,
            compensated_sum(c, axis=0) / root, compensated_sum(s, axis=0) / root)


def _abel(weights: np.ndarray, inner: np.ndarray) -> float:
    """sum_n u_n v_n as u_M V_M - sum_{n<M} (u_{n+1} - u_n) V_n, V the partial sums of v."""
    if weights.size == 0:
        return 0.0
    V = np.cumsum(inner)
    return math.fsum([weights[-1] * V[-1], *(-(np.diff(weights) * V[:-1])).tolist()])


def w_sums(T: float, H: float) -> WSums:
    _check_window(T, H)
    coefs = coefficients(T)
    nus, ts = _gram_window_points(T, H)
    inner = _inner_sums(coefs, nus, ts)
    weights = (coefs.a, coefs.a * coefs.b, coefs.a, coefs.a * coefs.b)
    direct = tuple(math.fsum((u * v).tolist()) for u, v in zip(weights, inner))
    abel = tuple(_abel(u, v) for u, v in zip(weights, inner))
    return WSums(direct=direct, abel=abel)


def gram_sum_psi(T: float, H: float) -> SumReport:
    _check_window(T, H)
    nus, ts = _gram_window_points(T, H)
    psi = psi_at_gram_many(nus, ts, T) if ts.size else np.zeros(0)
    sgn = np.where(nus % 2 == 0, 1.0, -1.0)
    lead = leading_coefficient(T)
    d = dtheta(T)
    main = 2 * A_XI / (math.pi * ALPHA) * H * math.log(p0(T)) / (1 + d * d / ALPHA**2)
    return SumReport(
        T=T, H=H, count=int(ts.size),
        sum_plain=math.fsum(psi.tolist()),
        sum_alt=math.fsum((sgn * psi).tolist()),
        main_term=main,
        w=w_sums(T, H).direct,
        lead=lead,
        alt_count=int(sgn.sum()),
    )


def parity_main_term(T: float, H: float) -> float:
    """(a alpha / pi) H / ln P0, the even-index prediction; odd is its negative."""
    return A_XI * ALPHA / math.pi * H / math.log(p0(T))


def asymptotic_check(T: float, epsilon: float, psi: str = "gram") -> tuple[ParitySum, ParitySum]:
    """Even- and odd-index sums of Psi(t_nu) over [T, T + T^{1/6+eps}/3].

    psi="gram" uses the frozen-coefficient Gram-point formula; windows wider
    than sqrt(T)/ln T are tiled and each tile freezes its coefficients at its
    own left end.  psi="quad" evaluates Psi(t_nu) by quadrature instead (slow:
    one quadrature per Gram point).
    """
    if psi not in ("gram", "quad"):
        raise DomainError("psi must be 'gram' or 'quad'")
    if not T >= 1e4:
        raise DomainError("asymptotic_check requires T >= 1e4")
    if not 0.1 <= epsilon <= 0.5:
        raise DomainError("epsilon must lie in [0.1, 0.5]")
    Hbar = T ** (1 / 6 + epsilon) / 3
    tiles = max(1, math.ceil(Hbar / gram_window(T)))
    width = Hbar / tiles
    parts = {0: [], 1: []}
    counts = {0: 0, 1: 0}
    for k in range(tiles):
        Tk = T + k * width
        nus, ts = _gram_window_points(Tk, width)
        if k < tiles - 1:
            keep = ts < Tk + width  # half-open tiles, last one closed
            nus, ts = nus[keep], ts[keep]
        if ts.size == 0:
            continue
        if psi == "gram":
            vals = psi_at_gram_many(nus, ts, Tk)
        else:
            vals = np.array([psi_quad(t, 1e-8).value for t in ts])
        for par in (0, 1):
            sel = nus % 2 == par
            parts[par].extend(vals[sel].tolist())
            counts[par] += int(sel.sum())
    main = parity_main_term(T, Hbar)
    even = ParitySum(0, T, Hbar, epsilon, counts[0], math.fsum(parts[0]), main)
    odd = ParitySum(1, T, Hbar, epsilon, counts[1], math.fsum(parts[1]), -main)
    return even, odd
