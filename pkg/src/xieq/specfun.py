"""Special functions on the critical line.

log-Gamma (Lanczos), the Riemann-Siegel theta function with derivatives,
Hardy's Z-function by Euler-Maclaurin (accurate, slow) and by the
Riemann-Siegel main sum (fast), and a log-scaled Xi-function.

Everything accepts numpy arrays where it makes sense; the scalar entry
points (`theta_jet`, `xi_scaled`) return small dataclasses.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DomainError

LN_PI = math.log(math.pi)
LN_2PI = math.log(2.0 * math.pi)
HALF_LN_2PI = 0.5 * LN_2PI

# Godfrey's coefficients, g = 607/128, 15 terms
_LANCZOS_G = 607.0 / 128.0
_LANCZOS_COEF = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)

THETA_EXACT_BELOW = 1.0e4
ZEM_MAX_T = 1.0e5
Z_CROSSOVER = 200.0


class ThetaMode(str, Enum):
    EXACT = "exact"
    ASYMPTOTIC = "asymptotic"


def compensated_sum(terms, axis=-1):
    """Neumaier summation along `axis`.

    The loop runs over the summation axis, so it is vectorised over the
    remaining axes.  Summation order is fixed, which keeps results
    bit-reproducible.
    """
    terms = np.moveaxis(np.asarray(terms, dtype=float), axis, 0)
    s = np.zeros(terms.shape[1:])
    c = np.zeros(terms.shape[1:])
    for x in terms:
        t = s + x
        big = np.abs(s) >= np.abs(x)
        c += np.where(big, (s - t) + x, (x - t) + s)
        s = t
    total = s + c
    return float(total) if total.ndim == 0 else total


def _lanczos_series(z):
    ser = np.full_like(z, _LANCZOS_COEF[0], dtype=complex)
    for k, c in enumerate(_LANCZOS_COEF[1:], start=1):
        ser = ser + c / (z + k)
    return ser


def log_gamma(z):
    """Principal-branch log Gamma for Re z > 0.

    The imaginary part is the continuous one (no 2*pi jumps along vertical
    lines), which is what the theta function needs.
    """
    z = np.asarray(z, dtype=complex)
    if np.any(z.real <= 0):
        raise DomainError("log_gamma requires Re z > 0")
    w = z + _LANCZOS_G + 0.5
    out = (z + 0.5) * np.log(w) - w + HALF_LN_2PI + np.log(_lanczos_series(z)) - np.log(z)
    return complex(out) if out.ndim == 0 else out


def log_abs_gamma_quarter_damped(t):
    """Re log Gamma(1/4 + i t/2) + pi t/4, free of the cancellation
    between the two large terms (needed for t up to 1e8)."""
    t = np.asarray(t, dtype=float)
    y = 0.5 * t
    z = 0.25 + 1j * y
    a = _LANCZOS_G + 0.75  # Re w
    # Re[(z+1/2) log w] + pi*y/2 = 3/4 ln|w| + y * atan(a/y)
    lead = 0.75 * 0.5 * np.log(a * a + y * y) + y * np.arctan2(a, y)
    ser = _lanczos_series(z)
    out = lead - a + HALF_LN_2PI + np.log(np.abs(ser)) - 0.5 * np.log(0.0625 + y * y)
    return float(out) if out.ndim == 0 else out


def _theta_exact(t):
    t = np.asarray(t, dtype=float)
    return -0.5 * t * LN_PI + np.imag(log_gamma(0.25 + 0.5j * t))


def _theta_asymptotic(t):
    t = np.asarray(t, dtype=float)
    return (0.5 * t * np.log(t / (2 * math.pi)) - 0.5 * t - math.pi / 8
            + 1.0 / (48.0 * t) + 7.0 / (5760.0 * t**3))


def theta(t, mode: ThetaMode | str | None = None):
    """Riemann-Siegel theta.  With mode=None the exact form is used below
    1e4 and the asymptotic series above it."""
    t = np.asarray(t, dtype=float)
    if mode is None:
        if t.ndim == 0:
            out = _theta_exact(t) if t < THETA_EXACT_BELOW else _theta_asymptotic(t)
        else:
            out = np.where(t < THETA_EXACT_BELOW, _theta_exact(np.minimum(t, THETA_EXACT_BELOW)),
                           _theta_asymptotic(t))
    elif ThetaMode(mode) is ThetaMode.EXACT:
        out = _theta_exact(t)
    else:
        out = _theta_asymptotic(t)
    return float(out) if np.ndim(out) == 0 else out


def dtheta(t):
    t = np.asarray(t, dtype=float)
    out = 0.5 * np.log(t / (2 * math.pi)) - 1.0 / (48.0 * t**2) - 7.0 / (1920.0 * t**4)
    return float(out) if out.ndim == 0 else out


def d2theta(t):
    t = np.asarray(t, dtype=float)
    out = 0.5 / t + 1.0 / (24.0 * t**3) + 7.0 / (480.0 * t**5)
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class ThetaJet:
    t: float
    theta: float
    dtheta: float
    d2theta: float
    mode: ThetaMode


def theta_jet(t: float, mode: ThetaMode | str = ThetaMode.EXACT) -> ThetaJet:
    if not t >= 20:
        raise DomainError(f"theta_jet needs t >= 20, got {t}")
    mode = ThetaMode(mode)
    return ThetaJet(t=float(t), theta=theta(t, mode), dtheta=dtheta(t),
                    d2theta=d2theta(t), mode=mode)


# B_2 .. B_12
_BERNOULLI = (1 / 6, -1 / 30, 1 / 42, -1 / 30, 5 / 66, -691 / 2730)


def em_terms(t: float) -> int:
    return max(20, math.ceil(2.0 * t))


def zeta_em(t: float, n_terms: int | None = None) -> complex:
    """zeta(1/2 + it) by Euler-Maclaurin with corrections through B_12."""
    s = complex(0.5, t)
    N = em_terms(t) if n_terms is None else n_terms
    n = np.arange(1, N, dtype=float)
    ln_n = np.log(n)
    mag = np.exp(-0.5 * ln_n)
    ph = t * ln_n
    re = math.fsum((mag * np.cos(ph)).tolist())
    im = -math.fsum((mag * np.sin(ph)).tolist())
    ln_N = math.log(N)
    N_s = complex(math.exp(-0.5 * ln_N) * math.cos(t * ln_N), -math.exp(-0.5 * ln_N) * math.sin(t * ln_N))
    tail = [N * N_s / (s - 1), 0.5 * N_s]
    # T_k = B_2k/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
    rising = s
    fact = 2.0
    for k, b in enumerate(_BERNOULLI, start=1):
        tail.append(b / fact * rising * N_s / N ** (2 * k - 1))
        rising *= (s + 2 * k - 1) * (s + 2 * k)
        fact *= (2 * k + 1) * (2 * k + 2)
    re = math.fsum([re] + [x.real for x in tail])
    im = math.fsum([im] + [x.imag for x in tail])
    return complex(re, im)


def z_em(t, n_terms: int | None = None):
    """Hardy Z by Euler-Maclaurin: Z(t) = Re(exp(i theta) zeta(1/2+it))."""
    arr = np.asarray(t, dtype=float)
    if np.any(arr <= 0) or np.any(arr > ZEM_MAX_T):
        raise DomainError(f"z_em is limited to 0 < t <= {ZEM_MAX_T:g}")
    if arr.ndim == 0:
        tv = float(arr)
        rot = theta(tv)
        zz = zeta_em(tv, n_terms)
        return zz.real * math.cos(rot) - zz.imag * math.sin(rot)
    return np.array([z_em(float(x), n_terms) for x in arr.ravel()]).reshape(arr.shape)


def _rs_c0(p):
    """C0(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p), removable
    singularities at p = 1/4, 3/4 handled by symmetric averaging."""
    p = np.asarray(p, dtype=float)

    def raw(q):
        return np.cos(2 * math.pi * (q * q - q - 0.0625)) / np.cos(2 * math.pi * q)

    near = np.abs(np.cos(2 * math.pi * p)) < 1e-6
    if not np.any(near):
        return raw(p)
    d = 1e-4
    with np.errstate(divide="ignore", invalid="ignore"):
        direct = raw(np.where(near, 0.0, p))
    return np.where(near, 0.5 * (raw(p - d) + raw(p + d)), direct)


def z_rs(t, order: int = 1):
    """Hardy Z from the Riemann-Siegel main sum, optionally with the C0
    correction term (order=1)."""
    arr = np.asarray(t, dtype=float)
    if np.any(arr < 50):
        raise DomainError("z_rs requires t >= 50")
    if order not in (0, 1):
        raise DomainError("z_rs order must be 0 or 1")
    tt = np.atleast_1d(arr)
    x = np.sqrt(tt / (2 * math.pi))
    nmax = np.floor(x).astype(int)
    th = theta(tt)
    s = np.zeros_like(tt)
    c = np.zeros_like(tt)
    for n in range(1, int(nmax.max()) + 1):
        term = np.where(n <= nmax, 2.0 / math.sqrt(n) * np.cos(th - tt * math.log(n)), 0.0)
        tot = s + term
        c += np.where(np.abs(s) >= np.abs(term), (s - tot) + term, (term - tot) + s)
        s = tot
    out = s + c
    if order == 1:
        sign = np.where(nmax % 2 == 1, 1.0, -1.0)  # (-1)^(N-1)
        out = out + sign * (tt / (2 * math.pi)) ** -0.25 * _rs_c0(x - nmax)
    return float(out[0]) if arr.ndim == 0 else out.reshape(arr.shape)


def z(t):
    """Z dispatcher: Euler-Maclaurin below 200, Riemann-Siegel (order 1) above."""
    arr = np.asarray(t, dtype=float)
    if np.any(arr < 10):
        raise DomainError("z requires t >= 10")
    if arr.ndim == 0:
        return z_em(float(arr)) if arr < Z_CROSSOVER else z_rs(float(arr), 1)
    out = np.empty_like(arr)
    lo = arr < Z_CROSSOVER
    if np.any(lo):
        out[lo] = z_em(arr[lo])
    if np.any(~lo):
        out[~lo] = z_rs(arr[~lo], 1)
    return out


@dataclass(frozen=True)
class ScaledValue:
    sign: int
    log_mag: float

    def value(self) -> float:
        return 0.0 if self.sign == 0 else self.sign * math.exp(self.log_mag)


XI_LOG_CONST = -math.log(2.0) - 0.25 * LN_PI


def xi_log_mag_damped(t, zval):
    """ln|Xi(t)| + pi t/4, given Z(t) values.  Vectorised."""
    t = np.asarray(t, dtype=float)
    with np.errstate(divide="ignore"):
        return (np.log(t * t + 0.25) + log_abs_gamma_quarter_damped(t) + XI_LOG_CONST
                + np.log(np.abs(zval)))


def xi_scaled(t: float) -> ScaledValue:
    """Xi(t) = -(t^2 + 1/4) |Gamma(1/4 + it/2)| Z(t) / (2 pi^{1/4}) in
    sign / log-magnitude form."""
    if not t >= 20:
        raise DomainError("xi_scaled requires t >= 20")
    zv = z(t)
    sign = -int(np.sign(zv))
    if sign == 0:
        return ScaledValue(0, -math.inf)
    return ScaledValue(sign, float(xi_log_mag_damped(t, zv)) - math.pi / 4 * t)
