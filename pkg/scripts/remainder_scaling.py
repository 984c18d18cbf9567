"""Explicit-formula error of Psi and Phi1 against quadrature, scaled by T^{1/4}."""
import argparse

import numpy as np

from xieq.scaled_integral import phi1_scaled_explicit, phi1_scaled_quad, psi_explicit, psi_quad


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--lo", type=float, default=200.0)
    p.add_argument("--hi", type=float, default=1e5)
    p.add_argument("--n", type=int, default=40)
    p.add_argument("--tol", type=float, default=1e-9)
    a = p.parse_args(argv)

    print("T,psi_err_scaled,phi1_err_scaled")
    for T in np.geomspace(a.lo, a.hi, a.n):
        dp = abs(psi_explicit(T) - psi_quad(T, a.tol).value) * T**0.25
        d1 = abs(phi1_scaled_explicit(T) - phi1_scaled_quad(T, a.tol).value) * T**0.25
        print(f"{T:.6g},{dp:.6g},{d1:.6g}")


if __name__ == "__main__":
    main()
