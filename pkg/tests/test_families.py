from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradfit.errors import InvalidSpec
from gradfit.families import FAMILIES, get_family

RNG = np.random.default_rng(2024)


def test_registry_names():
    assert set(FAMILIES) == {"circle", "ellipse", "hyperbola", "parabola",
                             "line"}


def test_unknown_family_rejected():
    with pytest.raises(InvalidSpec):
        get_family("banana")


@pytest.mark.parametrize("name", sorted(FAMILIES))
def test_sampled_theta_is_valid(name):
    fam = get_family(name)
    for _ in range(20):
        fam.validate(fam.sample_theta(RNG))


@pytest.mark.parametrize("name", sorted(FAMILIES))
def test_point_at_lies_on_curve(name):
    fam = get_family(name)
    lo, hi = fam.t_range
    for _ in range(10):
        theta = fam.sample_theta(RNG)
        P = fam.poly(theta)
        for t in np.linspace(lo, hi, 17):
            x, y = fam.point_at(theta, float(t))
            assert abs(P.eval(x, y)) < 1e-10


@pytest.mark.parametrize("name", sorted(FAMILIES))
def test_poly_dtheta_matches_coefficient_differences(name):
    fam = get_family(name)
    h = 1e-6
    for _ in range(5):
        theta = fam.sample_theta(RNG)
        for p in fam.param_names:
            up = dict(theta, **{p: theta[p] + h})
            dn = dict(theta, **{p: theta[p] - h})
            fd = (fam.poly(up) - fam.poly(dn)) * (1.0 / (2.0 * h))
            dP = fam.poly_dtheta(theta, p)
            diff = fd - dP
            assert diff.max_coeff_mag() < 1e-6


def test_poly_dtheta_unknown_parameter():
    with pytest.raises(InvalidSpec):
        get_family("circle").poly_dtheta({"a": 0, "b": 0, "R": 1}, "z")


def test_exact_mode_converts_floats_as_dyadics():
    P = get_family("circle").poly({"a": 0.5, "b": 0.25, "R": 1.0}, exact=True)
    assert P.exact
    # 0.25 + 0.0625 - 1 with no rounding anywhere
    assert P.coeff(0, 0) == Fraction(-11, 16)
    assert P.coeff(1, 0) == Fraction(-1, 1)


@pytest.mark.parametrize("name,theta", [
    ("circle", {"a": 0.0, "b": 0.0}),                      # missing R
    ("circle", {"a": 0.0, "b": 0.0, "R": 0.0}),
    ("circle", {"a": 0.0, "b": 0.0, "R": -2.0}),
    ("circle", {"a": float("nan"), "b": 0.0, "R": 1.0}),
    ("ellipse", {"a": 1.0, "b": 1.0, "c": -1.0}),          # circle in disguise
    ("ellipse", {"a": 1.0, "b": 0.0, "c": -1.0}),
    ("hyperbola", {"a": 1.0, "b": -1.0, "c": 0.0}),
    ("parabola", {"c": 0.0}),
    ("line", {"u": 0.0, "v": 0.0, "w": 1.0}),
])
def test_invalid_thetas_rejected(name, theta):
    with pytest.raises(InvalidSpec):
        get_family(name).validate(theta)


@settings(max_examples=40, deadline=None)
@given(a=st.floats(-2, 2), b=st.floats(-2, 2),
       R=st.floats(0.1, 3), t=st.floats(0, 7))
def test_circle_points_at_exact_distance(a, b, R, t):
    fam = get_family("circle")
    x, y = fam.point_at({"a": a, "b": b, "R": R}, t)
    assert abs(np.hypot(x - a, y - b) - R) < 1e-12
