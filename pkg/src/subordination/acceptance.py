"""Acceptance criteria, runnable without pytest (``subordination selftest``).

Each check returns a Criterion; ``run_all`` prints one deterministic line per
criterion to the given stream and writes timings to stderr.
"""

from __future__ import annotations

import math
import sys
import time
from dataclasses import dataclass

import numpy as np

from . import admissibility as adm
from .dominant import DominantSpec, JanowskiParams, ode_residual
from .hypergeom import HypergeomParams, gauss_2f1, gauss_2f1_derivative
from .oracles import grid_min, oracle_threshold
from .targets import THEOREM_TAGS, TargetFunction, target_boundary_curve
from .thresholds import (
    closed_form_b0,
    endpoint_chain,
    isclose_or_inactive,
    sharp_threshold,
)
from .verify import (
    TaylorFunction,
    check_lemma_hypotheses,
    check_starlike_bound,
    dominant_boundary_curve,
    is_subordinate_numeric,
    starlike_premise,
)


@dataclass
class Criterion:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0
    limit: float = math.inf

    def line(self) -> str:
        flag = "PASS" if self.passed else "FAIL"
        return f"[{flag}] criterion {self.number}: {self.name}: {self.detail}"


def _timed(number: int, name: str, limit: float, fn) -> Criterion:
    t0 = time.perf_counter()
    ok, detail = fn()
    dt = time.perf_counter() - t0
    return Criterion(number, name, ok and dt < limit, detail, dt, limit)


def hypergeometric_identities():
    x = np.linspace(-0.9, 0.9, 50)
    F = gauss_2f1(HypergeomParams(1, 1, 2), x).real
    err1 = float(np.max(np.abs(F + np.log1p(-x) / x)))

    rng = np.random.default_rng(0)
    z = 0.8 * np.sqrt(rng.uniform(size=100)) * np.exp(2j * np.pi * rng.uniform(size=100))
    h = 1e-5
    err2 = 0.0
    for p in (HypergeomParams(1, 1, 2), HypergeomParams(1, 2, 3), HypergeomParams(0.5, 1.5, 2.5)):
        fd = (gauss_2f1(p, z + h) - gauss_2f1(p, z - h)) / (2 * h)
        d = gauss_2f1_derivative(p, z)
        err2 = max(err2, float(np.max(np.abs(fd - d) / np.abs(d))))
    ok = err1 <= 1e-10 and err2 <= 1e-6
    return ok, f"log identity max err {err1:.2e} (<=1e-10), derivative rel err {err2:.2e} (<=1e-6)"


def b0_closed_forms():
    worst = 0.0
    ok = True
    for tag in THEOREM_TAGS:
        t = TargetFunction(tag)
        for A in (0.25, 0.5, 0.75, 1.0):
            r = sharp_threshold(t, JanowskiParams(A, 0.0))
            c1, c2 = closed_form_b0(t, A)
            for got, want in ((r.beta1, c1), (r.beta2, c2)):
                ok &= isclose_or_inactive(got, want, 1e-8)
                if got is not None and want is not None:
                    worst = max(worst, abs(got - want))
    p = JanowskiParams(1.0, 0.0)
    anchors = (
        abs(sharp_threshold(TargetFunction("exponential"), p).beta_star - 1 / (math.e - 1)),
        abs(sharp_threshold(TargetFunction("sine"), p).beta_star - (1 / math.sin(1) - 1)),
        abs(sharp_threshold(TargetFunction("lemniscate"), p).beta_star - math.sqrt(2)),
    )
    ok &= max(anchors) <= 1e-8
    return ok, f"36 cases, max |solver - closed form| {max(worst, *anchors):.2e} (<=1e-8)"


ORACLE_PARAMS = ((1.0, -0.5), (0.5, -0.25), (0.75, 0.25))


def oracle_cross_check():
    worst = 0.0
    for A, B in ORACLE_PARAMS:
        p = JanowskiParams(A, B)
        for tag in THEOREM_TAGS:
            t = TargetFunction(tag)
            got = sharp_threshold(t, p).beta_star
            want = oracle_threshold(t, p)[2]
            worst = max(worst, abs(got - want))
    return worst <= 1e-6, f"27 cases, max |series - ODE oracle| {worst:.2e} (<=1e-6)"


def sharpness_bracketing(samples: int = 2048):
    p = JanowskiParams(1.0, -0.5)
    failures = []
    min_margin = math.inf
    for tag in THEOREM_TAGS:
        t = TargetFunction(tag)
        r = sharp_threshold(t, p)
        above = r.beta_star * (1 + 1e-3)
        below = r.beta_star * (1 - 1e-3)
        inner = dominant_boundary_curve(DominantSpec(above, p), samples)
        contained, margin = is_subordinate_numeric(inner, target_boundary_curve(t, samples))
        min_margin = min(min_margin, margin)
        if not endpoint_chain(t, p, above) or not contained:
            failures.append(f"{tag.value}(above)")
        if endpoint_chain(t, p, below):
            failures.append(f"{tag.value}(below)")
    detail = f"9 targets at (1,-1/2), min containment margin {min_margin:.3e}"
    if failures:
        detail += "; failed: " + ",".join(failures)
    return not failures, detail


ODE_COMBOS = [
    (beta, A, B)
    for beta in (0.5, 1.0, 3.0)
    for A, B in ((1.0, 0.0), (1.0, -0.5), (0.5, -0.25), (0.75, 0.25))
]


def ode_residuals():
    radii = np.linspace(0.1, 0.9, 20)
    angles = 2 * np.pi * np.arange(20) / 20
    z = (radii[:, None] * np.exp(1j * angles)[None, :]).ravel()
    worst = 0.0
    for beta, A, B in ODE_COMBOS:
        res = ode_residual(DominantSpec(beta, JanowskiParams(A, B)), z)
        worst = max(worst, float(np.max(np.abs(res))))
    return worst <= 1e-8, f"12 combos on 20x20 grid, max |residual| {worst:.2e} (<=1e-8)"


def starlike_and_lemma():
    worst_gap = math.inf
    worst_lemma = math.inf
    ok = True
    for beta in (0.5, 1.0, 2.0):
        hp = HypergeomParams(2.0, 2 + 1 / beta, 3 + 1 / beta)
        floor = beta / (2 + 5 * beta)
        for B in (-0.5, 0.0, 0.5):
            rep = check_starlike_bound(hp, -B, 0.99)
            gap = rep.estimate - (floor - 1e-3)
            worst_gap = min(worst_gap, gap)
            lem = check_lemma_hypotheses(DominantSpec(beta, JanowskiParams(1.0, B)), 720)
            worst_lemma = min(worst_lemma, lem.min_starlike, lem.min_h_ratio)
            ok &= gap >= 0 and lem.passed
    return ok, (f"min(estimate - beta/(2+5beta) + 1e-3) {worst_gap:.4f} (>=0), "
                f"min lemma quantity {worst_lemma:.4f} (>-1e-6)")


def minimizer_equivalence():
    rng = np.random.default_rng(7)
    xs = np.linspace(-1.0, 1.0, 100_001)
    worst = 0.0
    for _ in range(1000):
        a = rng.uniform(0.0, 10.0)
        a = a if a > 0 else 10.0
        b = rng.uniform(0.0, 40.0)
        c = rng.uniform(-10.0, 10.0)
        gq = float(np.min(a * (2 * xs**2 - 1) + b * (1 + xs) + c - b))
        mq = float(np.min(b * (1 + xs) + a * (2 * xs**2 - 1)))
        worst = max(worst, abs(gq - adm.gmin_closed_form(a, b, c)),
                    abs(mq - adm.mmin_closed_form(a, b)))
    return worst <= 1e-6, f"1000 triples vs 1e5-point grid, max |diff| {worst:.2e} (<=1e-6)"


def _linear_cases():
    return [(1.0, 2.0), (1.0, 8.0)]


def _ratio_cases(R: float):
    # (alpha, beta, parameter to lower): the binding case of each branch
    a = 2 * R
    return [(a, adm.ratio_threshold_beta(a, R), "beta"), (R, 5 * R, "alpha")]


def admissibility_chains(n: int = 10_000):
    alpha = adm.SECOND_ORDER_ALPHA
    ok2, lo2 = adm.check_second_order(alpha, adm.sample_admissible(n, False, 0.0, seed=0))
    ok = ok2 and abs(lo2 - (math.e - 1)) <= 1e-9

    equality = adm.sample_admissible(n, True, 0.0, seed=1)
    slack = adm.sample_admissible(n, True, 0.5, seed=2)
    failures = []
    for kind in adm.Kind:
        for a, b in _linear_cases():
            q = adm.SufficiencyQuery(kind, "linear", a, b)
            g = adm.sufficient_threshold(q)
            for samples in (equality, slack):
                if not adm.verify_sufficiency(q.with_gamma(g), samples).passed:
                    failures.append(f"{kind.value}/linear({a},{b}) at threshold")
                if adm.verify_sufficiency(q.with_gamma(g - 1e-3), samples).passed:
                    failures.append(f"{kind.value}/linear({a},{b}) below threshold")
        R = adm.SufficiencyQuery(kind, "ratio", 1.0, 1.0).radius
        for a, b, lowered in _ratio_cases(R):
            at = adm.SufficiencyQuery(kind, "ratio", a, b)
            if lowered == "beta":
                under = adm.SufficiencyQuery(kind, "ratio", a, b - 1e-3)
            else:
                under = adm.SufficiencyQuery(kind, "ratio", a - 1e-3, b)
            if not (adm.verify_sufficiency(at, equality).passed and adm.sufficient_threshold(at).passed):
                failures.append(f"{kind.value}/ratio({a:.4g},{b:.4g}) at threshold")
            if adm.verify_sufficiency(under, equality).passed or adm.sufficient_threshold(under).passed:
                failures.append(f"{kind.value}/ratio lowered {lowered}")
    ok &= not failures
    detail = f"second-order min |psi-1| - (e-1) = {lo2 - (math.e - 1):.1e}; 3 kinds x 2 forms over {n} samples"
    if failures:
        detail += "; failed: " + ",".join(failures)
    return ok, detail


def premise_functions():
    n = 4096
    k = np.arange(1, n + 1, dtype=float)
    return {
        "identity": TaylorFunction.class_a([1.0]),
        "z+z^2/10": TaylorFunction.class_a([1.0, 0.1]),
        "z/(1-z)": TaylorFunction.class_a(np.ones(n)),
        "koebe": TaylorFunction.class_a(k),
        "z-iz^2/7+z^3/5": TaylorFunction.class_a([1.0, -1j / 7, 0.2]),
    }


def corollary_consistency():
    worst = 0.0
    for f in premise_functions().values():
        worst = max(worst, starlike_premise(f, 1.0, JanowskiParams(1.0, 0.0), 360).identity_error)
    return worst <= 1e-9, f"5 functions x 360 samples, max identity rel err {worst:.2e} (<=1e-9)"


CRITERIA = [
    (1, "hypergeometric identities", 1.0, hypergeometric_identities),
    (2, "B=0 closed-form thresholds", 5.0, b0_closed_forms),
    (3, "ODE oracle cross-check", 60.0, oracle_cross_check),
    (4, "sharpness bracketing and containment", math.inf, sharpness_bracketing),
    (5, "ODE residual", math.inf, ode_residuals),
    (6, "starlikeness bound and lemma hypotheses", math.inf, starlike_and_lemma),
    (7, "minimizer equivalence", 10.0, minimizer_equivalence),
    (8, "admissibility chains", 10.0, admissibility_chains),
    (9, "corollary consistency", math.inf, corollary_consistency),
]


def run_criterion(number: int) -> Criterion:
    for num, name, limit, fn in CRITERIA:
        if num == number:
            return _timed(num, name, limit, fn)
    raise KeyError(number)


def run_all(out=sys.stdout, err=sys.stderr) -> list[Criterion]:
    results = []
    for num, *_ in CRITERIA:
        c = run_criterion(num)
        results.append(c)
        print(c.line(), file=out, flush=True)
        limit = "none" if math.isinf(c.limit) else f"{c.limit:g}s"
        print(f"criterion {num}: {c.seconds:.2f}s (limit {limit})", file=err, flush=True)
    return results
