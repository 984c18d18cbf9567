"""Recompute K, Kprime and C_Z and write them as a golden file.

    python3 scripts/calibrate_constants.py --out src/xieq/golden.txt
"""
import argparse
import sys

import numpy as np

from xieq import golden
from xieq.specfun import z


def empirical_cz(lo: float, hi: float, n: int) -> float:
    ts = np.geomspace(lo, hi, n)
    return float(np.max(np.abs(z(ts)) / ts**0.25))


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--out", default="-")
    p.add_argument("--cz-samples", type=int, default=200_000)
    a = p.parse_args(argv)

    psi, phi1 = golden.remainder_ratios()
    for T, x, y in zip(golden.CALIBRATION_GRID, psi, phi1):
        print(f"T={T:>8g}  |D_psi|T^1/4={x:.6f}  |D_phi1|T^1/4={y:.6f}", file=sys.stderr)
    print(f"max |Z|/t^1/4 on [200, 1e6]: {empirical_cz(200, 1e6, a.cz_samples):.4f}", file=sys.stderr)

    text = golden.dump(golden.calibrate())
    if a.out == "-":
        sys.stdout.write(text)
    else:
        with open(a.out, "w") as fh:
            fh.write(text)


if __name__ == "__main__":
    main()
