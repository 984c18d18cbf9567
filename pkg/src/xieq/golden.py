"""Calibration constants K, Kprime, C_Z as a `name=value` text file."""
from __future__ import annotations

import math
from importlib import resources
from pathlib import Path

KEYS = ("K", "Kprime", "C_Z")
CALIBRATION_GRID = (500.0, 1000.0, 2000.0, 5000.0, 1.0e4)
CALIBRATION_TOL = 1e-9


def parse(text: str) -> dict[str, float]:
    out = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        name, sep, value = line.partition("=")
        if not sep or name.strip() not in KEYS:
            raise ValueError(f"bad golden line: {line!r}")
        out[name.strip()] = float(value)
    missing = set(KEYS) - out.keys()
    if missing:
        raise ValueError(f"golden file lacks {sorted(missing)}")
    return out


def dump(values: dict[str, float]) -> str:
    return "".join(f"{k}={values[k]!r}\n" for k in KEYS)


def load(path: str | Path | None = None) -> dict[str, float]:
    if path is None:
        text = resources.files("xieq").joinpath("golden.txt").read_text()
    else:
        text = Path(path).read_text()
    return parse(text)


def remainder_ratios(grid=CALIBRATION_GRID, tol: float = CALIBRATION_TOL):
    """Per-T values |explicit - quad| * T^{1/4} for Psi and for Phi1 (scaled)."""
    from .scaled_integral import phi1_scaled_explicit, phi1_scaled_quad, psi_explicit, psi_quad

    psi = [abs(psi_explicit(T) - psi_quad(T, tol).value) * T**0.25 for T in grid]
    phi1 = [abs(phi1_scaled_explicit(T) - phi1_scaled_quad(T, tol).value) * T**0.25 for T in grid]
    return psi, phi1


def calibrate() -> dict[str, float]:
    from .scaled_integral import C_Z

    psi, phi1 = remainder_ratios()
    return {"K": max(psi), "Kprime": max(phi1), "C_Z": C_Z}


def compare(a: dict[str, float], b: dict[str, float], rel: float = 1e-9) -> list[str]:
    """Names whose values differ by more than `rel` relative."""
    return [k for k in KEYS if not math.isclose(a[k], b[k], rel_tol=rel)]
