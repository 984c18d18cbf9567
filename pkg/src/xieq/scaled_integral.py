"""The scaled tail integral Psi(T) = e^{alpha T} T^{-beta} int_T^oo Xi(t) dt.

Two routes: panel quadrature of the exact integrand (`psi_quad`,
`phi1_scaled_quad`) and the explicit trigonometric sum (`psi_explicit`,
`phi1_scaled_explicit`).  Values are only ever carried in the scaled form;
the unscaled integral underflows doubles past T ~ 880.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .errors import DomainError, ToleranceError, WindowError
from .gram import GramPoint
from .quadrature import integrate, panel_edges
from .specfun import Z_CROSSOVER, compensated_sum, dtheta, theta, xi_log_mag_damped, z

ALPHA = math.pi / 4
BETA = 7.0 / 4.0
A_XI = -((math.pi / 2) ** 0.25)

# |Z(t)| <= C_Z t^{1/4}; checked empirically on [50, 1e6] by the test suite
C_Z = 4.0
# sup_{t >= 50} (t^2+1/4)|Gamma(1/4+it/2)| e^{pi t/4} / (2 pi^{1/4}) / ((pi/2)^{1/4} t^{7/4})
GAMMA_FACTOR_BOUND = 1.01

MAX_REFINE = 3


@dataclass(frozen=True)
class QuadResult:
    value: float
    err_est: float
    tail_bound: float
    evals: int


def _check_T(T: float, floor: float = 50.0):
    if not T >= floor:
        raise DomainError(f"T must be >= {floor:g}, got {T}")


def _check_tol(tol: float):
    if not 1e-12 <= tol <= 1e-2:
        raise DomainError("tol must lie in [1e-12, 1e-2]")


def breakpoints(a: float, b: float) -> list[float]:
    """Points in (a, b) where the Z model jumps: the Euler-Maclaurin /
    Riemann-Siegel crossover and the term-count changes t = 2 pi n^2."""
    pts = [Z_CROSSOVER] if a < Z_CROSSOVER < b else []
    n = max(1, math.ceil(math.sqrt(max(a, Z_CROSSOVER) / (2 * math.pi))))
    while 2 * math.pi * n * n < b:
        x = 2 * math.pi * n * n
        if x > a and x >= Z_CROSSOVER:
            pts.append(x)
        n += 1
    return pts


def scaled_xi(t, T_ref: float):
    """Xi(t) e^{alpha T_ref} T_ref^{-beta}, evaluated in log space."""
    t = np.asarray(t, dtype=float)
    zv = z(t)
    with np.errstate(divide="ignore", over="ignore"):
        lm = xi_log_mag_damped(t, zv) - ALPHA * (t - T_ref) - BETA * math.log(T_ref)
        return -np.sign(zv) * np.exp(lm)


def scaled_z_weight(t, T_ref: float):
    """e^{-alpha (t - T_ref)} (t/T_ref)^beta Z(t)."""
    t = np.asarray(t, dtype=float)
    return np.exp(-ALPHA * (t - T_ref) + BETA * np.log(t / T_ref)) * z(t)


def tail_bound(T: float, X: float, factor: float) -> float:
    """Bound on the scaled integral over [X, oo) of factor * C_Z * t^2 T^{-beta} e^{-alpha(t-T)}.

    Uses t^beta t^{1/4} = t^2 and the closed form of int_X^oo t^2 e^{-alpha t} dt.
    """
    poly = X * X / ALPHA + 2 * X / ALPHA**2 + 2 / ALPHA**3
    return factor * C_Z * math.exp(-ALPHA * (X - T) - BETA * math.log(T)) * poly


def truncation_length(T: float, tol: float, factor: float) -> float:
    target = 0.5 * tol

    def g(L):
        return math.log(tail_bound(T, T + L, factor)) - math.log(target)

    hi = 10.0
    while g(hi) > 0:
        hi *= 2
    return brentq(g, 0.0, hi, xtol=1e-6) if g(0.0) > 0 else 0.0


def _quad(integrand, T: float, tol: float, factor: float) -> QuadResult:
    L = truncation_length(T, tol, factor)
    tb = tail_bound(T, T + L, factor)
    bps = breakpoints(T, T + L)
    evals = 0
    value = err = math.nan
    for refine in range(MAX_REFINE + 1):
        value, err, n = integrate(integrand, panel_edges(T, T + L, bps, refine))
        evals += n
        if err + tb <= tol:
            return QuadResult(value, err, tb, evals)
    raise ToleranceError(f"quadrature at T={T} missed tol={tol}", value, err + tb)


def psi_quad(T: float, tol: float = 1e-10) -> QuadResult:
    """Psi(T) by panel quadrature of the exact Xi integrand."""
    _check_T(T)
    _check_tol(tol)
    return _quad(lambda t: scaled_xi(t, T), T, tol, (math.pi / 2) ** 0.25 * GAMMA_FACTOR_BOUND)


def phi1_scaled_quad(T: float, tol: float = 1e-10) -> QuadResult:
    """e^{alpha T} T^{-beta} int_T^oo e^{-alpha t} t^beta Z(t) dt by quadrature."""
    _check_T(T)
    _check_tol(tol)
    return _quad(lambda t: scaled_z_weight(t, T), T, tol, 1.0)


def integrate_scaled_xi(a: float, b: float, T_ref: float, cuts=(), refine: int = 0):
    """int_a^b Xi(t) dt scaled by e^{alpha T_ref} T_ref^{-beta}; returns (value, err_est)."""
    value, err, _ = integrate(lambda t: scaled_xi(t, T_ref),
                              panel_edges(a, b, [*breakpoints(a, b), *cuts], refine))
    return value, err


def unscaled_phi(T: float, tol: float = 1e-10) -> float:
    """int_T^oo Xi(t) dt itself; only representable for T <= 600."""
    if T > 600:
        raise DomainError("unscaled tail integral is only exposed for T <= 600")
    return psi_quad(T, tol).value * math.exp(-ALPHA * T) * T**BETA


def explicit_terms(T: float):
    """Leading term and per-n terms of the explicit formula, before the
    overall factor 2/alpha.  The n-sum runs over 2 <= n <= sqrt(T/2pi)."""
    th = theta(T)
    d = dtheta(T)
    lead = (math.cos(th) - d / ALPHA * math.sin(th)) / (1 + d * d / ALPHA**2)
    nmax = math.floor(math.sqrt(T / (2 * math.pi)))
    n = np.arange(2, nmax + 1, dtype=float)
    ln_n = np.log(n)
    f = d - ln_n
    ph = th - T * ln_n
    terms = (np.cos(ph) - f / ALPHA * np.sin(ph)) / (np.sqrt(n) * (1 + f * f / ALPHA**2))
    return lead, terms


def _explicit(T, scale: float):
    T = np.asarray(T, dtype=float)
    if np.any(T < 50):
        raise DomainError("explicit formula requires T >= 50")
    tt = np.atleast_1d(T)
    th = theta(tt)
    d = dtheta(tt)
    s = (np.cos(th) - d / ALPHA * np.sin(th)) / (1 + d * d / ALPHA**2)
    c = np.zeros_like(tt)
    nmax = np.floor(np.sqrt(tt / (2 * math.pi))).astype(int)
    for n in range(2, int(nmax.max()) + 1):
        ln_n = math.log(n)
        f = d - ln_n
        ph = th - tt * ln_n
        term = np.where(n <= nmax,
                        (np.cos(ph) - f / ALPHA * np.sin(ph)) / (math.sqrt(n) * (1 + f * f / ALPHA**2)),
                        0.0)
        tot = s + term
        c += np.where(np.abs(s) >= np.abs(term), (s - tot) + term, (term - tot) + s)
        s = tot
    out = scale * (s + c)
    return float(out[0]) if T.ndim == 0 else out


def psi_explicit(T):
    """Psi(T) from the explicit trigonometric sum (remainder O(T^{-1/4}) dropped).  Vectorised."""
    return _explicit(T, 2 * A_XI / ALPHA)


def phi1_scaled_explicit(T):
    return _explicit(T, 2 / ALPHA)


def gram_window(T: float) -> float:
    """Width sqrt(T)/ln T of the window where coefficients may be frozen at T."""
    return math.sqrt(T) / math.log(T)


def psi_at_gram_many(nus, ts, T: float) -> np.ndarray:
    """Psi(t_nu) with coefficients frozen at T, for arrays of Gram indices/abscissae."""
    ts = np.asarray(ts, dtype=float)
    nus = np.asarray(nus, dtype=np.int64)
    W = gram_window(T)
    if np.any(ts < T) or np.any(ts > T + W):
        raise WindowError(f"Gram point outside [T, T + sqrt(T)/ln T] = [{T}, {T + W}]")
    d = dtheta(T)
    sgn = np.where(nus % 2 == 0, 1.0, -1.0)
    p0 = math.sqrt(T / (2 * math.pi))
    n = np.arange(2, math.ceil(p0), dtype=float)
    n = n[n < p0]
    f = d - np.log(n)
    weight = 1.0 / (np.sqrt(n) * (1 + f * f / ALPHA**2))
    ph = ts[:, None] * np.log(n)[None, :]
    terms = (np.cos(ph) + (f / ALPHA)[None, :] * np.sin(ph)) * weight[None, :]
    lead = np.ones_like(ts) / (1 + d * d / ALPHA**2)
    body = compensated_sum(np.concatenate([lead[:, None], terms], axis=1), axis=1)
    return 2 * A_XI / ALPHA * sgn * np.atleast_1d(body)


def psi_at_gram(gp: GramPoint, T: float) -> float:
    return float(psi_at_gram_many([gp.nu], [gp.t], T)[0])
