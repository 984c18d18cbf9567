import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from xieq.errors import DomainError
from xieq.gram import expected_count, gram_point, gram_points, gram_points_in
from xieq.specfun import dtheta, theta

from oracles import bisect, theta_oracle

# bisection of the exact theta on [10, 30]
GRAM_0 = 17.845599540410895
GRAM_1 = 23.170282701246343


def test_oracle_values():
    assert bisect(theta_oracle, 10, 20) == pytest.approx(GRAM_0, abs=1e-12)
    assert bisect(lambda t: theta_oracle(t) - math.pi, 20, 30) == pytest.approx(GRAM_1, abs=1e-12)


@pytest.mark.parametrize("nu, expected", [(0, GRAM_0), (1, GRAM_1)])
def test_first_gram_points(nu, expected):
    assert gram_point(nu).t == pytest.approx(expected, abs=1e-10)


@given(st.integers(min_value=0, max_value=2_000_000))
def test_defining_equation(nu):
    g = gram_point(nu)
    assert round(theta(g.t) / math.pi) == nu
    assert g.residual < 1e-9


def test_negative_index():
    with pytest.raises(DomainError):
        gram_point(-1)


def test_window_count():
    pts = gram_points_in(1e4, 1e3)
    assert abs(len(pts) - expected_count(1e4, 1e3)) / expected_count(1e4, 1e3) < 0.01
    assert abs(len(pts) - expected_count(1e4, 1e3)) <= 2 + 1e3**2 / 1e4


def test_narrow_window():
    assert len(gram_points_in(1e4, 0.1)) <= 1


def test_window_is_contiguous_in_index():
    pts = gram_points_in(5000.0, 200.0)
    nus = [g.nu for g in pts]
    assert nus == list(range(nus[0], nus[-1] + 1))
    assert [g.t for g in pts] == [g.t for g in gram_points(nus)]
    # nothing missed just outside
    assert gram_point(nus[0] - 1).t < 5000.0 < pts[0].t
    assert pts[-1].t <= 5200.0 < gram_point(nus[-1] + 1).t


def test_spacing_mean_value():
    pts = gram_points_in(1e4, 100.0)
    for a, b in zip(pts[:-1], pts[1:]):
        assert (b.t - a.t) == pytest.approx(math.pi / dtheta(a.t), rel=0.2)


def test_spacing_decreases_on_average():
    t = np.array([g.t for g in gram_points(np.arange(1000, 10001))])
    gaps = np.diff(t)
    slope = np.polyfit(np.arange(gaps.size), gaps, 1)[0]
    assert slope < 0
    assert gaps[:100].mean() > gaps[-100:].mean()


def test_domain():
    with pytest.raises(DomainError):
        gram_points_in(10.0, 1.0)
    with pytest.raises(DomainError):
        gram_points_in(100.0, 0.0)
