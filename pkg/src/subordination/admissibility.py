"""Admissibility data for q(z) = e^z and the second/third-order sufficient conditions.

Boundary data at theta with multiplier m >= 1:

    r = exp(e^{i theta}),  s = m e^{i theta} r,
    Re(1 + t/s) >= m (1 + cos theta),
    Re(u/s) >= m cos 2 theta   (third order, with cos 2 theta >= 0).

A psi avoids Omega on all such data if a lower bound on |psi - 1| (or |psi|)
exceeds the radius that keeps it outside Omega.  The bounds reduce to the
minimum over x = cos theta of quadratics g(x) and m(x).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np
from scipy.optimize import minimize_scalar

from .errors import InadmissibleSample

E = math.e
BETA0 = 0.475319
EXP_RADIUS = E - 1
SUFFICIENCY_TOL = 1e-9


@dataclass(frozen=True)
class AdmissibleSample:
    theta: float
    m: float
    r: complex
    s: complex
    t: complex
    u: Optional[complex]
    third_order: bool

    def violations(self) -> list[str]:
        """Names of the admissibility constraints this sample breaks."""
        th, m = self.theta, self.m
        bad = []
        if not 0 < th < 2 * math.pi:
            bad.append("theta in (0, 2pi)")
        if m < 1:
            bad.append("m >= 1")
        r = np.exp(np.exp(1j * th))
        if abs(self.r - r) > 1e-12 * abs(r):
            bad.append("r = exp(e^{i theta})")
        if abs(self.s - m * np.exp(1j * th) * r) > 1e-12 * abs(self.s):
            bad.append("s = m e^{i theta} r")
        if (1 + self.t / self.s).real < m * (1 + math.cos(th)) - 1e-12 * m:
            bad.append("Re(1 + t/s) >= m(1 + cos theta)")
        if self.third_order:
            c2 = math.cos(2 * th)
            if c2 < 0:
                bad.append("cos 2theta >= 0")
            if self.u is None or (self.u / self.s).real < m * c2 - 1e-12 * m:
                bad.append("Re(u/s) >= m cos 2theta")
        return bad


def admissible_sample(theta: float, m: float = 1.0, third_order: bool = False,
                      t_excess: complex = 0.0, u_excess: complex = 0.0,
                      enforce_side: bool = True) -> AdmissibleSample:
    """Build the data at (theta, m) with t/s and u/s at their bounds plus the excess.

    Real parts of the excesses must be nonnegative.  ``enforce_side=False``
    skips the cos 2 theta >= 0 requirement, for points the proofs' minimisation
    over all of [-1, 1] reaches.
    """
    c2 = math.cos(2 * theta)
    if third_order and enforce_side and c2 < 0:
        raise InadmissibleSample(f"cos 2theta = {c2:.3g} < 0 at theta = {theta:.6g}")
    if m < 1:
        raise InadmissibleSample("m >= 1 required")
    if complex(t_excess).real < 0 or complex(u_excess).real < 0:
        raise InadmissibleSample("excess over the admissibility bounds must have Re >= 0")
    zeta = complex(math.cos(theta), math.sin(theta))
    r = complex(np.exp(zeta))
    s = m * zeta * r
    t = s * (m * (1 + math.cos(theta)) - 1 + t_excess)
    u = s * (m * c2 + u_excess) if third_order else None
    return AdmissibleSample(theta, m, r, s, t, u, third_order)


def _third_order_theta(rng: np.random.Generator) -> float:
    # cos 2theta >= 0 on [0, pi/4] u [3pi/4, 5pi/4] u [7pi/4, 2pi)
    while True:
        th = rng.uniform(0.0, 2 * math.pi)
        if th > 0 and math.cos(2 * th) >= 0:
            return th


def sample_admissible(n: int, third_order: bool = False, slack: float = 0.0,
                      seed: int = 0, m_max: float = 3.0) -> list[AdmissibleSample]:
    """n samples; the first sits at theta = pi, m = 1 where the proofs are tight.

    With slack = 0 every sample has m = 1 and t, u on their bounds.  With
    slack > 0, m is drawn from [1, 1 + slack (m_max - 1)] and t/s, u/s get
    excesses with real part in [0, slack] and imaginary part in [-slack, slack].
    """
    if n < 1:
        raise ValueError("n >= 1 required")
    rng = np.random.default_rng(seed)
    out = [admissible_sample(math.pi, 1.0, third_order)]
    while len(out) < n:
        if third_order:
            th = _third_order_theta(rng)
        else:
            th = rng.uniform(0.0, 2 * math.pi)
            if th == 0.0:
                continue
        if slack > 0:
            m = 1.0 + slack * (m_max - 1.0) * rng.uniform()
            te = complex(slack * rng.uniform(), slack * rng.uniform(-1, 1))
            ue = complex(slack * rng.uniform(), slack * rng.uniform(-1, 1))
        else:
            m, te, ue = 1.0, 0.0, 0.0
        out.append(admissible_sample(th, m, third_order, te, ue))
    return out


# --------------------------------------------------------------------------
# second order: |1 + alpha z p' + z^2 p''| < e  =>  p < e^z


SECOND_ORDER_ALPHA = E * (E - 1) + 1


def check_second_order(alpha: float, samples: list[AdmissibleSample]) -> tuple[bool, float]:
    """min |psi - 1| for psi = 1 + alpha s + t, compared with e - 1."""
    vals = [abs(alpha * x.s + x.t) for x in samples]
    lo = min(vals)
    return lo >= EXP_RADIUS - SUFFICIENCY_TOL, lo


# --------------------------------------------------------------------------
# third order


def gmin_closed_form(alpha: float, beta: float, gamma: float) -> float:
    """min over [-1, 1] of g(x) = alpha(2x^2 - 1) + beta(1 + x) + gamma - beta."""
    if not alpha > 0:
        raise ValueError("alpha > 0 required")
    if beta <= 4 * alpha:
        return gamma - alpha - beta**2 / (8 * alpha)
    return alpha - beta + gamma


def mmin_closed_form(alpha: float, beta: float) -> float:
    """min over [-1, 1] of m(x) = beta(1 + x) + alpha(2x^2 - 1)."""
    if not alpha > 0:
        raise ValueError("alpha > 0 required")
    if beta <= 4 * alpha:
        return beta - alpha - beta**2 / (8 * alpha)
    return alpha


class Kind(str, Enum):
    JANOWSKI = "janowski"  # 1 + Az, Omega = {|w - 1| < A}
    EXPONENTIAL = "exponential"  # e^z, Omega = {|log w| < 1}
    SIGMOID = "sigmoid"  # 2/(1 + e^{-z}), Omega = {|log(w/(2 - w))| < 1}


class Form(str, Enum):
    LINEAR = "linear"  # alpha z^3 p''' + beta z^2 p'' + gamma z p' (+1)
    RATIO = "ratio"  # alpha z^3 p'''/(z p') + beta (z p'/p + 1) (+1)


@dataclass(frozen=True)
class SufficiencyQuery:
    kind: Kind
    form: Form
    alpha: float
    beta: float
    gamma: float = 0.0
    A: float = 1.0
    beta0: float = BETA0

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        object.__setattr__(self, "form", Form(self.form))
        if min(self.alpha, self.beta) < 0 or (self.form is Form.LINEAR and self.gamma < 0):
            raise ValueError("alpha, beta, gamma must be nonnegative")
        if self.kind is Kind.JANOWSKI and not 0 < self.A <= 1:
            raise ValueError("0 < A <= 1 required")

    @property
    def radius(self) -> float:
        """How large the bound must be to keep psi outside Omega."""
        if self.kind is Kind.JANOWSKI:
            return self.A
        if self.kind is Kind.EXPONENTIAL:
            return EXP_RADIUS
        return self.beta0

    def with_gamma(self, gamma: float) -> "SufficiencyQuery":
        return SufficiencyQuery(self.kind, self.form, self.alpha, self.beta, gamma, self.A, self.beta0)


@dataclass
class ConditionReport:
    passed: bool
    value: float
    required: float
    case: str


def _case(q: SufficiencyQuery) -> str:
    return "beta<=4alpha" if q.beta <= 4 * q.alpha and q.alpha > 0 else "beta>4alpha"


def sufficient_threshold(q: SufficiencyQuery):
    """Least gamma for the linear form; the pass/fail condition for the ratio form."""
    R = q.radius
    if q.form is Form.LINEAR:
        # e^{-1} min g >= R  <=>  gamma >= R e - (min g at gamma = 0)
        if q.alpha > 0:
            return R * E - gmin_closed_form(q.alpha, q.beta, 0.0)
        return R * E + q.beta
    value = mmin_closed_form(q.alpha, q.beta) if q.alpha > 0 else -math.inf
    return ConditionReport(value >= R, value, R, _case(q))


def critical_theta(alpha: float, beta: float) -> float:
    """theta with cos theta = -beta/(4 alpha) (or pi), where the bound is smallest."""
    if alpha > 0 and beta <= 4 * alpha:
        return math.acos(-beta / (4 * alpha))
    return math.pi


def bound_functional(q: SufficiencyQuery, x: AdmissibleSample) -> float:
    """The first lower bound of the proofs' chain at one sample.

    linear:  |psi - 1| = |s| |alpha u/s + beta(t/s + 1) + gamma - beta|
             >= e^{-1} |alpha u/s + beta(t/s + 1) + gamma - beta|
    ratio:   |psi - 1| = |alpha u/s + beta(s/r + 1)|
             >= beta(1 + Re(s/r)) + alpha Re(u/s)
    (for the sigmoid kind the same expressions bound |psi|).
    """
    us = x.u / x.s
    if q.form is Form.LINEAR:
        return abs(q.alpha * us + q.beta * (x.t / x.s + 1) + q.gamma - q.beta) / E
    return q.beta * (1 + (x.s / x.r).real) + q.alpha * us.real


def psi_minus_one(q: SufficiencyQuery, x: AdmissibleSample) -> complex:
    """psi - 1 (psi itself for the sigmoid kind) at the sample."""
    if q.form is Form.LINEAR:
        return q.alpha * x.u + q.beta * x.t + q.gamma * x.s
    return q.alpha * x.u / x.s + q.beta * (x.s / x.r + 1)


@dataclass
class SufficiencyReport:
    passed: bool
    min_value: float  # min of the bound functional, critical point included
    min_samples: float  # same, over the supplied samples only
    critical_value: float
    min_abs_psi: float  # min of the actual |psi - 1| over the samples
    required: float
    chain_ok: bool  # |psi - 1| >= bound functional at every sample


def verify_sufficiency(q: SufficiencyQuery, samples: list[AdmissibleSample]) -> SufficiencyReport:
    """Evaluate the bound chain on third-order samples plus the critical point.

    The critical point cos theta = -beta/(4 alpha), m = 1 is where the quadratic
    minimisation is attained; it is added even when cos 2 theta < 0 there,
    because the theorems minimise over the whole of [-1, 1].
    """
    if any(not x.third_order for x in samples):
        raise ValueError("third-order samples required")
    crit = admissible_sample(critical_theta(q.alpha, q.beta), 1.0, True, enforce_side=False)
    vals = np.array([bound_functional(q, x) for x in samples])
    actual = np.array([abs(psi_minus_one(q, x)) for x in samples])
    crit_val = bound_functional(q, crit)
    lo = min(float(vals.min()), crit_val)
    R = q.radius
    return SufficiencyReport(
        passed=lo >= R - SUFFICIENCY_TOL,
        min_value=lo,
        min_samples=float(vals.min()),
        critical_value=crit_val,
        min_abs_psi=float(actual.min()),
        required=R,
        chain_ok=bool(np.all(actual >= vals - 1e-12 * np.maximum(1.0, vals))),
    )


def ratio_threshold_beta(alpha: float, radius: float) -> float:
    """Smallest beta <= 4 alpha with beta - alpha - beta^2/(8 alpha) = radius."""
    disc = 1 - (alpha + radius) / (2 * alpha)
    if disc < 0:
        raise ValueError("no beta <= 4 alpha meets the condition; need alpha >= radius")
    return 4 * alpha * (1 - math.sqrt(disc))


# --------------------------------------------------------------------------
# geometry of the sigmoid domain


def sigmoid_boundary_modulus(phi):
    """|w| on |log(w/(2 - w))| = 1 at log(w/(2 - w)) = e^{i phi}."""
    E_ = np.exp(np.exp(1j * np.asarray(phi)))
    return np.abs(2 * E_ / (1 + E_))


def beta0_oracle(tol: float = 1e-10) -> float:
    """min |w| over the boundary of {|log(w/(2 - w))| < 1}."""
    phis = np.linspace(0.0, 2 * math.pi, 4097)
    vals = sigmoid_boundary_modulus(phis)
    i = int(np.argmin(vals))
    h = phis[1] - phis[0]
    res = minimize_scalar(lambda p: float(sigmoid_boundary_modulus(p)),
                          bounds=(phis[i] - h, phis[i] + h), method="bounded",
                          options={"xatol": tol})
    return min(float(res.fun), float(vals[i]))
