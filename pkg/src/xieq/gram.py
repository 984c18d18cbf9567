"""Gram points: solutions of theta(t) = pi * nu."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import lambertw

from .errors import ConvergenceError, DomainError
from .specfun import dtheta, theta

MAX_NEWTON = 12
RESIDUAL_TOL = 1e-9


@dataclass(frozen=True)
class GramPoint:
    nu: int
    t: float
    residual: float


def initial_guess(nu):
    """Invert theta(t) ~ t/2 ln(t/(2 pi e)) - pi/8 exactly via Lambert W."""
    c = 2 * math.pi * np.asarray(nu, dtype=float) + math.pi / 4
    two_pi_e = 2 * math.pi * math.e
    return two_pi_e * np.exp(np.real(lambertw(c / two_pi_e)))


def _solve(nus: np.ndarray) -> np.ndarray:
    target = math.pi * nus
    t = initial_guess(nus)
    for _ in range(MAX_NEWTON):
        step = (theta(t) - target) / dtheta(t)
        t = t - step
        if np.all(np.abs(step) <= 1e-13 * t):
            break
    else:
        bad = int(np.argmax(np.abs(step) / t))
        raise ConvergenceError(f"Newton did not converge in {MAX_NEWTON} steps for nu={int(nus[bad])}")
    return _polish(t, target)


def _polish(t: np.ndarray, target: np.ndarray, reach: int = 8) -> np.ndarray:
    """Pick, among the doubles within `reach` ulps of t, the one whose
    computed theta is closest to the target (theta is rounding-noisy at the
    last-ulp level once pi*nu is in the millions)."""
    ulp = np.spacing(t)
    cand = t[:, None] + ulp[:, None] * np.arange(-reach, reach + 1)[None, :]
    res = np.abs(theta(cand) - target[:, None])
    return cand[np.arange(t.size), np.argmin(res, axis=1)]


def gram_points(nus) -> list[GramPoint]:
    """Vectorised Newton solve for an array of indices."""
    nus = np.asarray(nus, dtype=np.int64)
    if nus.size == 0:
        return []
    if np.any(nus < 0):
        raise DomainError("Gram index must be >= 0")
    t = _solve(nus.astype(float))
    res = np.abs(theta(t) - math.pi * nus)
    return [GramPoint(int(n), float(x), float(r)) for n, x, r in zip(nus, t, res)]


def gram_point(nu: int) -> GramPoint:
    if nu < 0:
        raise DomainError("Gram index must be >= 0")
    return gram_points([nu])[0]


def gram_index_range(T: float, H: float) -> tuple[int, int]:
    """Inclusive (nu_lo, nu_hi) of Gram points in [T, T+H]; nu_hi < nu_lo when empty."""
    lo = math.ceil(theta(T) / math.pi)
    hi = math.floor(theta(T + H) / math.pi)
    return lo, hi


def gram_points_in(T: float, H: float) -> list[GramPoint]:
    if not T >= 50:
        raise DomainError("gram_points_in requires T >= 50")
    if not 0 < H <= T:
        raise DomainError("gram_points_in requires 0 < H <= T")
    lo, hi = gram_index_range(T, H)
    pts = gram_points(np.arange(lo, hi + 1))
    # index from the rounded theta; trim any point the solver places a hair outside
    return [g for g in pts if T <= g.t <= T + H]


def expected_count(T: float, H: float) -> float:
    """(1/pi) H ln P0 with P0 = sqrt(T / 2 pi)."""
    return H * 0.5 * math.log(T / (2 * math.pi)) / math.pi
