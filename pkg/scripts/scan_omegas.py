"""Find equilibrium points and summarise gaps, cancellation and Z-zero counts."""
import argparse
import time

import numpy as np

from xieq.equilibrium import find_omegas, interval_reports, telescoped_area, zero_count_histogram


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--start", type=float, default=200.0)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--epsilon", type=float, default=0.1)
    p.add_argument("--threads", type=int, default=4)
    a = p.parse_args(argv)

    t0 = time.perf_counter()
    pts = find_omegas(a.start, a.count)
    reps = interval_reports(pts, a.epsilon, a.threads)
    gaps = np.array([r.gap for r in reps])
    ratios = np.array([r.gap_ratio for r in reps])
    print(f"{len(pts)} points in [{pts[0].omega:.4f}, {pts[-1].omega:.4f}] ({time.perf_counter() - t0:.1f}s)")
    print(f"gap mean {gaps.mean():.3f}, median {np.median(gaps):.3f}, max {gaps.max():.3f}")
    print(f"gaps over omega^(1/6+{a.epsilon}): {int((ratios >= 1).sum())}/{len(reps)}, max ratio {ratios.max():.3f}")
    print(f"max cancellation {max(r.cancellation for r in reps):.2e}")
    print(f"zero-count histogram {zero_count_histogram(reps)}")
    print(f"telescoped area over first 10 intervals {telescoped_area(reps[:10]):.2e}")


if __name__ == "__main__":
    main()
