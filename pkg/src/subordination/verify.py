"""Independent numerical checks: curve containment, starlikeness order,
the hypergeometric starlikeness bounds, and the dominant's lemma hypotheses.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from numpy.polynomial import polynomial as npoly

from .dominant import DominantSpec, JanowskiParams, q_beta_derivatives, q_beta_eval
from .errors import DegenerateCurve, ZeroEncountered
from .hypergeom import (
    DEFAULT_SERIES,
    HypergeomParams,
    SeriesTolerance,
    gauss_2f1,
    gauss_2f1_derivative,
)
from .targets import BoundaryCurve

ZERO_TOL = 1e-12
LEMMA_TOL = 1e-6
BOUND_SLACK = 1e-3
IDENTITY_TOL = 1e-9
# radius used for B = -1, where q_beta is singular at z = -1
SINGULAR_RADIUS = 1.0 - 1e-3


class Containment(NamedTuple):
    contained: bool
    margin: float


class PremiseResult(NamedTuple):
    inside: bool
    margin: float
    identity_error: float


@dataclass(frozen=True)
class TaylorFunction:
    """Polynomial c_0 + c_1 z + ... standing in for a normalised analytic function.

    normalization is "A" (f(0) = 0, f'(0) = 1) or "H" (p(0) = 1 and the
    coefficients c_1 .. c_{n-1} vanish).
    """

    coefficients: np.ndarray
    normalization: str = "A"
    n: int = 1

    def __post_init__(self):
        c = np.asarray(self.coefficients, dtype=complex)
        object.__setattr__(self, "coefficients", c)
        if self.normalization == "A":
            if len(c) < 2 or c[0] != 0 or c[1] != 1:
                raise ValueError("class-A normalisation needs f(0) = 0 and f'(0) = 1")
        elif self.normalization == "H":
            if len(c) < 1 or c[0] != 1 or np.any(c[1 : self.n] != 0):
                raise ValueError(f"H[1,{self.n}] needs p(0) = 1 and c_1..c_{self.n - 1} = 0")
        else:
            raise ValueError(f"unknown normalization {self.normalization!r}")

    @classmethod
    def class_a(cls, coeffs) -> "TaylorFunction":
        """From a_1, a_2, ... (coefficient of z first)."""
        return cls(np.concatenate([[0.0], np.asarray(coeffs, dtype=complex)]), "A")

    def derivative(self, k: int = 1) -> np.ndarray:
        return npoly.polyder(self.coefficients, k)

    def __call__(self, z, k: int = 0):
        c = self.coefficients if k == 0 else self.derivative(k)
        return npoly.polyval(np.asarray(z, dtype=complex), c)


def polar_grid(radius: float, n: int) -> np.ndarray:
    """n radii in (0, radius] times n angles, the outer circle included."""
    radii = radius * np.arange(1, n + 1) / n
    angles = 2 * np.pi * np.arange(n) / n
    return (radii[:, None] * np.exp(1j * angles)[None, :]).ravel()


def circle(radius: float, n: int) -> np.ndarray:
    return radius * np.exp(2j * np.pi * np.arange(n) / n)


# --------------------------------------------------------------------------
# containment


def _segments(curve: BoundaryCurve):
    a = curve.points
    return a, np.roll(a, -1)


def winding_numbers(points: np.ndarray, curve: BoundaryCurve, chunk: int = 256) -> np.ndarray:
    """Winding number of the closed polygon through curve.points about each point."""
    a, b = _segments(curve)
    ax, ay, bx, by = a.real, a.imag, b.real, b.imag
    out = np.empty(len(points), dtype=int)
    for start in range(0, len(points), chunk):
        p = points[start : start + chunk]
        px, py = p.real[:, None], p.imag[:, None]
        left = (bx - ax) * (py - ay) - (px - ax) * (by - ay)
        up = (ay <= py) & (by > py) & (left > 0)
        down = (ay > py) & (by <= py) & (left < 0)
        out[start : start + chunk] = up.sum(axis=1) - down.sum(axis=1)
    return out


def distance_to_polygon(points: np.ndarray, curve: BoundaryCurve, chunk: int = 256) -> np.ndarray:
    a, b = _segments(curve)
    ab = b - a
    ab2 = np.abs(ab) ** 2
    ab2 = np.where(ab2 == 0, 1.0, ab2)
    out = np.empty(len(points))
    for start in range(0, len(points), chunk):
        p = points[start : start + chunk, None]
        s = np.clip(((p - a) * np.conj(ab)).real / ab2, 0.0, 1.0)
        out[start : start + chunk] = np.abs(p - (a + s * ab)).min(axis=1)
    return out


def polygon_area(curve: BoundaryCurve) -> float:
    a, b = _segments(curve)
    return 0.5 * float(np.sum(a.real * b.imag - b.real * a.imag))


def is_subordinate_numeric(inner: BoundaryCurve, outer: BoundaryCurve) -> Containment:
    """Do all inner samples lie inside or on the outer polygon?

    margin is the minimum signed distance from the inner points to the outer
    polygon, positive inside and negative outside.
    """
    scale = float(np.max(np.abs(outer.points)))
    if abs(polygon_area(outer)) <= 1e-14 * max(scale, 1.0) ** 2:
        raise DegenerateCurve("outer curve encloses no area")
    pts = inner.points
    dist = distance_to_polygon(pts, outer)
    on_edge = dist <= 1e-12 * max(scale, 1.0)
    inside = (winding_numbers(pts, outer) != 0) | on_edge
    signed = np.where(inside, dist, -dist)
    return Containment(bool(inside.all()), float(signed.min()))


def dominant_boundary_curve(d: DominantSpec, n: int, t: SeriesTolerance = DEFAULT_SERIES) -> BoundaryCurve:
    radius = 1.0 if abs(d.params.B) < 1.0 else SINGULAR_RADIUS
    thetas = 2 * np.pi * np.arange(n) / n
    return BoundaryCurve(thetas, q_beta_eval(d, radius * np.exp(1j * thetas), t), radius)


# --------------------------------------------------------------------------
# order of starlikeness


def starlikeness_order(f: TaylorFunction, radius: float, n: int) -> float:
    """min Re(z f'/f) over an n x n polar grid of the disc |z| <= radius."""
    if not 0 < radius < 1:
        raise ValueError("radius must lie in (0, 1)")
    if f.coefficients[0] != 0 or f.coefficients[1] == 0:
        raise ValueError("need f(0) = 0 and f'(0) != 0")
    z = polar_grid(radius, n)
    fz = f(z)
    if np.min(np.abs(fz)) < ZERO_TOL:
        raise ZeroEncountered("f vanishes on the sampled grid")
    return float(np.min((z * f(z, 1) / fz).real))


@dataclass
class StarlikeBoundReport:
    estimate: float
    lower: float
    upper: float
    radius: float
    upper_checked: bool
    passed: bool


def starlike_bounds(hp: HypergeomParams) -> tuple[float, float]:
    """(1 - ab/(b+c), 1 - ab/(2c)) bracketing sigma(z F(a,b;c;z))."""
    a, b, c = hp.a, hp.b, hp.c
    return 1 - a * b / (b + c), 1 - a * b / (2 * c)


def check_starlike_bound(hp: HypergeomParams, scale: float, radius: float,
                         n: int = 128, t: SeriesTolerance = DEFAULT_SERIES) -> StarlikeBoundReport:
    """Grid estimate of sigma(z F(a,b;c; scale z)) against the two-sided bound.

    The upper bound concerns the unscaled function, so it is only tested when
    |scale| = 1 and the grid reaches radius 0.999.
    """
    if not (0 < hp.a <= hp.b <= hp.c):
        raise ValueError("need 0 < a <= b <= c")
    if abs(scale) > 1:
        raise ValueError("|scale| <= 1 required")
    if not 0 < radius < 1:
        raise ValueError("radius must lie in (0, 1)")
    z = polar_grid(radius, n)
    w = scale * z
    F = gauss_2f1(hp, w, t)
    if np.min(np.abs(F)) < ZERO_TOL:
        raise ZeroEncountered("F vanishes on the sampled grid")
    ratio = 1 + w * gauss_2f1_derivative(hp, w, t) / F
    estimate = float(np.min(ratio.real))
    lower, upper = starlike_bounds(hp)
    upper_checked = abs(scale) == 1 and radius >= 0.999
    passed = estimate >= lower - BOUND_SLACK
    if upper_checked:
        passed = passed and estimate <= upper + BOUND_SLACK
    return StarlikeBoundReport(estimate, lower, upper, radius, upper_checked, passed)


# --------------------------------------------------------------------------
# hypotheses of the first-order subordination lemma


@dataclass
class LemmaReport:
    min_starlike: float  # min Re(z Q'/Q)
    min_h_ratio: float  # min Re(z h'/Q)
    radius: float
    passed: bool


def check_lemma_hypotheses(d: DominantSpec, n: int = 720,
                           t: SeriesTolerance = DEFAULT_SERIES) -> LemmaReport:
    """Sample Q = beta z q_beta' and h = q_beta + Q near the unit circle."""
    radius = 1.0 if abs(d.params.B) < 1.0 else SINGULAR_RADIUS
    z = circle(radius, n)
    dq, d2q = q_beta_derivatives(d, z, t)
    Q = d.beta * z * dq
    dQ = d.beta * (dq + z * d2q)
    zQ = z * dQ / Q
    zh = (z * dq + z * dQ) / Q
    lo_q, lo_h = float(zQ.real.min()), float(zh.real.min())
    return LemmaReport(lo_q, lo_h, radius, lo_q > -LEMMA_TOL and lo_h > -LEMMA_TOL)


# --------------------------------------------------------------------------
# starlikeness premise for p = z f'/f


def janowski_margin(w: np.ndarray, p: JanowskiParams) -> np.ndarray:
    """Signed distance-like margin of w inside the closed Janowski image."""
    if p.B <= -1.0:
        return w.real - (1 - p.A) / 2
    center, rad = p.disk
    return rad - np.abs(w - center)


def starlike_premise(f: TaylorFunction, beta: float, p: JanowskiParams, n: int = 360,
                     radius: float = 0.99) -> PremiseResult:
    """Sample z/f ((1+beta) f' + beta z (f'' - f'^2/f)) on |z| = radius.

    The same quantity is recomputed as p + beta z p' with p = z f'/f through
    the quotient rule; their largest relative gap is reported.
    """
    if f.normalization != "A":
        raise ValueError("f must be class-A normalised")
    z = circle(radius, n)
    f0, f1, f2 = f(z), f(z, 1), f(z, 2)
    if np.min(np.abs(f0)) < ZERO_TOL or np.min(np.abs(f1)) < ZERO_TOL:
        raise ZeroEncountered("f or f' vanishes on the sampled circle")
    premise = (z / f0) * ((1 + beta) * f1 + beta * z * (f2 - f1**2 / f0))

    num, dnum = z * f1, f1 + z * f2
    pz = num / f0
    dp = (dnum * f0 - num * f1) / f0**2
    other = pz + beta * z * dp
    err = np.abs(premise - other) / np.maximum(1.0, np.abs(premise))

    margin = float(np.min(janowski_margin(premise, p)))
    return PremiseResult(margin >= 0, margin, float(err.max()))
