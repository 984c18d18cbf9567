import time

import pytest

from xieq.equilibrium import find_omegas, interval_reports

TIMINGS = {}


@pytest.fixture(scope="session")
def omegas100():
    t0 = time.perf_counter()
    pts = find_omegas(200.0, 100, validate=True)
    TIMINGS["omegas100"] = time.perf_counter() - t0
    return pts


@pytest.fixture(scope="session")
def reports99(omegas100):
    t0 = time.perf_counter()
    reps = interval_reports(omegas100, epsilon=0.1)
    TIMINGS["reports99"] = time.perf_counter() - t0
    return reps
