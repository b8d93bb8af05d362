import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from transmarkov.geometry import (
    Branch,
    SampledCurve,
    bad_zones,
    check_geometric_braid,
    check_transversal,
    circle,
    format_curve,
    local_model,
    local_model_point,
    model_identity_error,
    parse_curve,
    planar_self_crossings,
    tangency_violation,
    verify_model_identity,
)


def curve_from_theta(theta, r=2.0, z=None):
    theta = np.asarray(theta)
    z = np.zeros_like(theta) if z is None else z
    return SampledCurve((np.column_stack([r * np.cos(theta), r * np.sin(theta), z]),))


def piecewise_theta(knots, samples=600):
    """Closed theta profile through (s, theta) knots, s in [0, 1)."""
    s = np.arange(samples) / samples
    xs = [k[0] for k in knots] + [1.0]
    ys = [k[1] for k in knots] + [knots[0][1] + 2 * math.pi]
    return np.interp(s, xs, ys)


def test_standard_circle():
    c = circle(64)
    assert check_transversal(c)
    assert tuple(check_geometric_braid(c)) == (True, 1)
    assert bad_zones(c).empty


def test_reversed_circle_fails():
    c = circle(64, reverse=True)
    assert not check_transversal(c)
    ok, deg = check_geometric_braid(c)
    assert not ok and deg is None


def test_double_cover():
    s = np.arange(128) / 128 * 4 * math.pi
    eps = 0.05
    c = SampledCurve((np.column_stack([np.cos(s), np.sin(s), eps * np.sin(s)]),))
    assert tuple(check_geometric_braid(c)) == (True, 2)
    assert check_transversal(c)


def test_vertical_round_trip():
    m = 40
    rise = np.column_stack([np.full(m, 3.0), np.zeros(m), np.linspace(0, 1, m, endpoint=False)])
    back_t = np.linspace(0, -2 * math.pi, 4 * m, endpoint=False)
    back = np.column_stack([3 * np.cos(back_t), 3 * np.sin(back_t), np.ones(4 * m)])
    down = np.column_stack([np.full(m, 3.0), np.zeros(m), np.linspace(1, 0, m, endpoint=False)])
    c = SampledCurve((np.vstack([rise, back, down]),))
    rep = check_transversal(c)
    assert not rep
    failing = set(rep.failing(0).tolist())
    assert failing & set(range(m + 1, 5 * m - 1))
    assert not failing & set(range(1, m - 1))


def test_degenerate_spacing_and_axis():
    pts = circle(32).components[0].copy()
    pts[5] = pts[4]
    with pytest.raises(ValueError):
        check_transversal(SampledCurve((pts,)))
    near_axis = circle(32).components[0].copy()
    near_axis[3] = [0.0, 0.0, 0.0]
    with pytest.raises(ValueError):
        check_geometric_braid(SampledCurve((near_axis,)))
    with pytest.raises(ValueError):
        SampledCurve((np.zeros((5, 3)),))


def test_kink_breaks_braid_property():
    theta = piecewise_theta([(0.0, 0.0), (0.5, 1.75 * math.pi), (0.7, 1.25 * math.pi)])
    ok, deg = check_geometric_braid(curve_from_theta(theta))
    assert not ok and deg is None


def test_simple_zone():
    theta = piecewise_theta([(0.0, 0.0), (0.5, 1.75 * math.pi), (0.7, 1.25 * math.pi)])
    rep = bad_zones(curve_from_theta(theta))
    (zones,) = rep.zones
    assert len(zones) == 1
    assert zones[0].theta_increment == pytest.approx(-math.pi / 2, abs=1e-9)
    assert zones[0].simple
    assert zones[0].start == 300 and zones[0].stop == 420


def test_non_simple_zone():
    theta = piecewise_theta([(0.0, 0.0), (0.4, 4 * math.pi), (0.7, math.pi)])
    (zones,) = bad_zones(curve_from_theta(theta)).zones
    assert len(zones) == 1
    assert zones[0].theta_increment == pytest.approx(-3 * math.pi, abs=1e-9)
    assert not zones[0].simple


def test_zone_wrapping_past_the_seam():
    theta = piecewise_theta([(0.0, 0.0), (0.5, 1.75 * math.pi), (0.7, 1.25 * math.pi)])
    rolled = np.roll(theta, -350)
    (zones,) = bad_zones(curve_from_theta(rolled)).zones
    assert len(zones) == 1
    assert zones[0].start > zones[0].stop
    assert zones[0].theta_increment == pytest.approx(-math.pi / 2, abs=1e-9)


@settings(max_examples=40)
@given(st.floats(0, 2 * math.pi), st.integers(1, 3), st.integers(16, 200))
def test_degree_invariance(angle, turns, samples):
    samples = max(samples, 8 * turns + 16)
    c = circle(samples, turns=turns, z=0.3)
    ok, deg = check_geometric_braid(c)
    assert ok and deg == turns
    assert tuple(check_geometric_braid(c.rotated(angle))) == (True, turns)
    assert tuple(check_geometric_braid(c.refined())) == (True, turns)


@settings(max_examples=60)
@given(st.floats(0.2, 0.9), st.integers(0, 5))
def test_zones_empty_iff_braid(amp, seed):
    rng = np.random.default_rng(seed)
    s = np.arange(256) / 256 * 2 * math.pi
    theta = s + amp * np.sin(s * rng.integers(1, 4))
    c = curve_from_theta(theta, z=0.1 * np.cos(s))
    ok, _ = check_geometric_braid(c)
    assert bad_zones(c).empty == ok


@settings(max_examples=60)
@given(st.floats(0.5, 3.0), st.floats(0.0, 1.0), st.integers(1, 3))
def test_braid_with_rising_z_is_transversal(r, climb, k):
    s = np.arange(200) / 200 * 2 * math.pi
    z = climb * np.sin(k * s) ** 2
    z = z - z.min()
    c = SampledCurve((np.column_stack([r * np.cos(s), r * np.sin(s), z]),))
    assert check_geometric_braid(c).ok
    d = np.roll(z, -1) - np.roll(z, 1)
    if np.all(d >= 0):
        assert check_transversal(c)


def test_model_identity():
    x, y, _ = local_model_point(0.0, 1.0)
    assert float(model_identity_error(0.0, 1.0)) == 0.0
    # x y' - y x' at (s, tau) = (1, 0) equals 3
    x, y, _ = local_model_point(1.0, 0.0)
    assert float(x * (0 - 3) - y * (-6)) == pytest.approx(3.0)
    grid = np.linspace(-2, 2, 101)
    assert verify_model_identity(grid, grid) < 1e-9


def test_local_model():
    frag = local_model(0.5, z0=0.2, samples=64)
    assert not frag.closed
    assert check_transversal(frag)
    x, y, _ = local_model_point(0.0, 0.0)
    assert (float(x), float(y)) == (0.0, 0.0)
    assert planar_self_crossings(local_model(0.5)) == 1
    assert planar_self_crossings(local_model(-0.5)) == 0
    with pytest.raises(ValueError):
        local_model(0.5, samples=8)


@settings(max_examples=300)
@given(st.floats(0.2, 3.0), st.floats(0.05, 0.95), st.floats(-3.0, -0.01),
       st.floats(0.01, 5.0), st.floats(-4.0, 4.0).filter(lambda v: abs(v) > 1e-3))
def test_tangency_sign_rule(big_r, frac, dtheta, extra, lam):
    outer = Branch(big_r, dtheta, -big_r ** 2 * dtheta + extra)
    assert outer.alpha > 0
    inner = Branch(big_r * frac, lam * dtheta, lam * outer.dz)
    if inner.alpha > 0:
        assert inner.dtheta < 0
    assert not tangency_violation(outer, inner)


def test_sign_rule_needs_the_radius_order():
    # with the shadowing arc inside, a positive inner branch is possible,
    # which is why the rule is stated for the outer arc only
    outer = Branch(1.0, -1.0, 1.5)
    inner = Branch(2.0, 1.0, -1.5)
    assert outer.alpha > 0 and inner.alpha > 0 and inner.dtheta > 0
    assert not tangency_violation(outer, inner)
    # a non-transversal branch is outside the rule
    assert not tangency_violation(Branch(2.0, -1.0, 5.0), Branch(1.0, 1.0, -5.0))


def test_curve_text_round_trip():
    c = SampledCurve((circle(20).components[0], circle(24, radius=2.0, z=1.0).components[0]))
    back = parse_curve(format_curve(c))
    assert len(back.components) == 2
    for a, b in zip(c.components, back.components):
        assert np.array_equal(a, b)
    frag = local_model(0.3)
    again = parse_curve(format_curve(frag))
    assert not again.closed and np.array_equal(again.components[0], frag.components[0])
    with pytest.raises(ValueError):
        parse_curve("1 2 3\n")
    with pytest.raises(ValueError):
        parse_curve("component\n1 2\n")
