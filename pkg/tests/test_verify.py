import math

import numpy as np
import pytest

from subordination.dominant import DominantSpec, JanowskiParams
from subordination.errors import DegenerateCurve, ZeroEncountered
from subordination.hypergeom import HypergeomParams
from subordination.targets import BoundaryCurve, Tag, TargetFunction, target_boundary_curve
from subordination.thresholds import sharp_threshold
from subordination.verify import (
    TaylorFunction,
    check_lemma_hypotheses,
    check_starlike_bound,
    circle,
    dominant_boundary_curve,
    is_subordinate_numeric,
    polygon_area,
    starlike_premise,
    starlikeness_order,
    winding_numbers,
)


def curve(points):
    points = np.asarray(points, dtype=complex)
    return BoundaryCurve(2 * np.pi * np.arange(len(points)) / len(points), points)


def ray_cast_inside(pts, poly):
    """Even-odd rule with a horizontal ray to +infinity (independent of winding_numbers)."""
    x, y = pts.real[:, None], pts.imag[:, None]
    a, b = poly, np.roll(poly, -1)
    straddle = (a.imag > y) != (b.imag > y)
    with np.errstate(divide="ignore", invalid="ignore"):
        xc = a.real + (y - a.imag) * (b.real - a.real) / (b.imag - a.imag)
    crossings = np.sum(straddle & (x < xc), axis=1)
    return crossings % 2 == 1


def test_concentric_circles():
    small, big = curve(circle(1.0, 2048)), curve(circle(2.0, 2048))
    inside, margin = is_subordinate_numeric(small, big)
    assert inside and margin == pytest.approx(1.0, abs=1e-5)
    inside, margin = is_subordinate_numeric(big, small)
    assert not inside and margin == pytest.approx(-1.0, abs=1e-5)


def test_curve_inside_itself():
    c = curve(circle(1.0, 256))
    inside, margin = is_subordinate_numeric(c, c)
    assert inside and margin == 0.0


def test_degenerate_outer():
    flat = curve(np.linspace(-1, 1, 32) + 0j)
    with pytest.raises(DegenerateCurve):
        is_subordinate_numeric(curve(circle(0.1, 32)), flat)


def test_orientation_does_not_matter():
    c = circle(1.0, 64)
    assert polygon_area(curve(c)) > 0 > polygon_area(curve(c[::-1]))
    assert is_subordinate_numeric(curve(circle(0.5, 64)), curve(c[::-1])).contained


def test_winding_agrees_with_ray_casting():
    rng = np.random.default_rng(2024)
    disagreements = 0
    for _ in range(100):
        th = 2 * np.pi * np.arange(256) / 256
        k, amp, phase = rng.integers(2, 6), rng.uniform(0, 0.4), rng.uniform(0, 2 * np.pi)
        outer = curve((1 + amp * np.cos(k * th + phase)) * np.exp(1j * th))
        center = 0.6 * rng.uniform() * np.exp(2j * np.pi * rng.uniform())
        inner = curve(center + rng.uniform(0.05, 1.0) * circle(1.0, 10_000))
        got = is_subordinate_numeric(inner, outer).contained
        want = bool(ray_cast_inside(inner.points, outer.points).all())
        disagreements += got != want
    assert disagreements == 0


def test_winding_numbers_of_double_loop():
    loop = circle(1.0, 64)
    double = BoundaryCurve(np.arange(128.0), np.concatenate([loop, loop]))
    assert winding_numbers(np.array([0j, 3 + 0j]), double).tolist() == [2, 0]


def test_exponential_threshold_curves_touch():
    p = JanowskiParams(1.0, 0.0)
    t = TargetFunction(Tag.EXPONENTIAL)
    beta = sharp_threshold(t, p).beta_star
    inside, margin = is_subordinate_numeric(
        dominant_boundary_curve(DominantSpec(beta, p), 2048), target_boundary_curve(t, 2048)
    )
    assert inside and 0 <= margin <= 1e-3


def test_dominant_curve_b_minus_one_backs_off():
    c = dominant_boundary_curve(DominantSpec(1.0, JanowskiParams(1.0, -1.0)), 64)
    assert c.radius < 1 and np.all(np.isfinite(c.points))


# --- starlikeness


def test_identity_order_is_one():
    assert starlikeness_order(TaylorFunction.class_a([1.0]), 0.5, 32) == pytest.approx(1.0)


def test_geometric_series_order():
    f = TaylorFunction.class_a(np.ones(4096))
    assert starlikeness_order(f, 0.99, 240) == pytest.approx(0.5025, abs=1e-4)


def test_koebe_order():
    f = TaylorFunction.class_a(np.arange(1, 4097, dtype=float))
    assert starlikeness_order(f, 0.99, 240) == pytest.approx(0.005, abs=1e-4)


def test_sixty_four_terms_are_not_enough():
    # z^64 is still ~0.53 at radius 0.99, so the truncated series is a different function
    f = TaylorFunction.class_a(np.ones(64))
    assert abs(starlikeness_order(f, 0.99, 720) - 0.5025) > 0.1


def test_zero_on_grid_detected():
    # z + 4z^2 vanishes at z = -1/4, a point of the 4 x 4 grid of radius 1/4
    with pytest.raises(ZeroEncountered):
        starlikeness_order(TaylorFunction.class_a([1.0, 4.0]), 0.25, 4)


def test_taylor_normalisation_enforced():
    with pytest.raises(ValueError):
        TaylorFunction(np.array([0.0, 2.0]))
    with pytest.raises(ValueError):
        TaylorFunction(np.array([1.0, 0.5]), "H", n=2)
    TaylorFunction(np.array([1.0, 0.0, 0.5]), "H", n=2)


def test_starlike_bound_dominant_specialisation():
    beta = 1.0
    hp = HypergeomParams(2.0, 2 + 1 / beta, 3 + 1 / beta)
    rep = check_starlike_bound(hp, 0.5, 0.99)
    assert rep.passed and not rep.upper_checked
    assert rep.estimate >= beta / (2 + 5 * beta) - 1e-3
    assert beta / (2 + 5 * beta) - 1e-3 == pytest.approx(0.1418571, abs=1e-7)


def test_starlike_bound_coincident_bounds():
    rep = check_starlike_bound(HypergeomParams(1, 1, 1), 1.0, 0.9)
    assert rep.lower == rep.upper == 0.5
    assert rep.passed


def test_starlike_bound_degenerate_a():
    rep = check_starlike_bound(HypergeomParams(1e-6, 1, 1), 1.0, 0.9)
    assert rep.lower == pytest.approx(1.0, abs=1e-6) and rep.upper == pytest.approx(1.0, abs=1e-6)
    assert rep.estimate == pytest.approx(1.0, abs=1e-5)


def test_starlike_bound_preconditions():
    with pytest.raises(ValueError):
        check_starlike_bound(HypergeomParams(2, 1, 3), 1.0, 0.9)
    with pytest.raises(ValueError):
        check_starlike_bound(HypergeomParams(1, 1, 2), 1.5, 0.9)


def test_lemma_monomial_case():
    rep = check_lemma_hypotheses(DominantSpec(1.0, JanowskiParams(1.0, 0.0)), 360)
    assert rep.passed
    assert rep.min_starlike == pytest.approx(1.0, abs=1e-12)
    assert rep.min_h_ratio == pytest.approx(2.0, abs=1e-12)


def test_lemma_negative_b():
    rep = check_lemma_hypotheses(DominantSpec(1.0, JanowskiParams(1.0, -0.5)), 720)
    assert rep.passed and rep.min_starlike > 0 and rep.min_h_ratio > 0


# --- premise of the starlikeness corollary


def test_premise_identity_function():
    res = starlike_premise(TaylorFunction.class_a([1.0]), 2.0, JanowskiParams(1.0, 0.0))
    assert res.inside and res.margin == pytest.approx(1.0) and res.identity_error <= 1e-15


def test_premise_small_perturbation():
    res = starlike_premise(TaylorFunction.class_a([1.0, 0.1]), 1.0, JanowskiParams(1.0, 0.0), 360)
    assert res.inside and 0 < res.margin < 1
    assert res.identity_error <= 1e-9


def test_premise_koebe_fails():
    f = TaylorFunction.class_a(np.arange(1, 4097, dtype=float))
    res = starlike_premise(f, 1.0, JanowskiParams(1.0, 0.0), 360)
    assert not res.inside
    assert res.identity_error <= 1e-9


def test_premise_half_plane_case():
    res = starlike_premise(TaylorFunction.class_a([1.0]), 1.0, JanowskiParams(1.0, -1.0))
    assert res.inside and res.margin == pytest.approx(1.0)


def test_premise_requires_class_a():
    with pytest.raises(ValueError):
        starlike_premise(TaylorFunction(np.array([1.0, 0.0, 0.3]), "H", 2), 1.0, JanowskiParams(1.0, 0.0))
