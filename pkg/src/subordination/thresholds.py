"""Sharp beta thresholds for p + beta z p' < (1+Az)/(1+Bz) => p < P.

q_beta < P holds when P(-1) <= q_beta(-1) <= q_beta(1) <= P(1).  beta_1 is the
root of chi(beta) = P(-1) and beta_2 the root of xi(beta) = P(1); the sharp
threshold is their maximum, with a never-binding side counted as 0.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

from .dominant import DominantSpec, JanowskiParams, chi, chi_limit_at_zero, xi, xi_limit_at_zero
from .errors import DomainError, NoFiniteThreshold
from .hypergeom import SeriesTolerance
from .targets import THEOREM_TAGS, TargetFunction, target_endpoints

log = logging.getLogger(__name__)

BETA_START = 1e-6
BETA_MAX = 1e6
DEFAULT_TOL = 1e-10


@dataclass
class RootSearch:
    root: Optional[float]
    residual: float = 0.0
    bracket_log: list = field(default_factory=list)
    extra_sign_changes: list = field(default_factory=list)


@dataclass
class ThresholdResult:
    target: str
    A: float
    B: float
    beta1: Optional[float]
    beta2: Optional[float]
    beta_star: float
    residual1: float = 0.0
    residual2: float = 0.0
    bracket_log: list = field(default_factory=list)

    def record(self) -> dict:
        return {
            "target": self.target,
            "A": self.A,
            "B": self.B,
            "beta1": self.beta1,
            "beta2": self.beta2,
            "beta_star": self.beta_star,
            "residual1": self.residual1,
            "residual2": self.residual2,
        }


def _check(t: TargetFunction, p: JanowskiParams):
    if t.tag not in THEOREM_TAGS:
        raise ValueError(f"no threshold theorem for target {t.name!r}")
    if abs(p.B) >= 1.0:
        raise DomainError("|B| < 1 required: the endpoint series diverges at |B| = 1")


def _series_tol(tol: float) -> SeriesTolerance:
    return SeriesTolerance(tol=min(1e-13, tol * 1e-2))


def _bisect(f: Callable[[float], float], lo: float, hi: float, flo: float, tol: float):
    """Bisection on a sign-change bracket; stops on |f| <= tol and a tight bracket."""
    mid, fmid = lo, flo
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        fmid = f(mid)
        if fmid == 0.0:
            return mid, fmid
        if (fmid < 0) == (flo < 0):
            lo, flo = mid, fmid
        else:
            hi = mid
        if abs(fmid) <= tol and hi - lo <= 4e-16 * max(1.0, hi):
            break
        if hi - lo <= 2e-16 * max(1.0, hi):
            break
    return mid, fmid


def find_crossing(f: Callable[[float], float], tol: float, limit_at_zero: float) -> RootSearch:
    """Smallest beta > 0 where f changes from negative to nonnegative.

    f(beta) >= 0 means the constraint is satisfied.  Doubling from BETA_START
    scans the whole range up to BETA_MAX so that further sign changes, if any,
    are reported.
    """
    grid = [BETA_START]
    while grid[-1] < BETA_MAX:
        grid.append(min(grid[-1] * 2.0, BETA_MAX))
    values = [f(b) for b in grid]

    crossings = []
    for i in range(len(grid) - 1):
        if (values[i] < 0) != (values[i + 1] < 0):
            crossings.append((grid[i], grid[i + 1]))

    # holds on the scanned range but fails in the beta -> 0 limit; the limit is
    # a closed form, so equality up to rounding counts as satisfied
    if values[0] >= 0 and limit_at_zero < -tol and not crossings:
        crossings.append((0.0, BETA_START))
    if not crossings:
        if values[-1] < 0:
            raise NoFiniteThreshold(f"constraint unsatisfied for all beta <= {BETA_MAX:g}")
        return RootSearch(None, 0.0)

    lo, hi = crossings[0]
    if lo == 0.0:
        lo = BETA_START * 1e-6
    root, res = _bisect(f, lo, hi, f(lo), tol)
    result = RootSearch(root, res, bracket_log=[(lo, hi)], extra_sign_changes=crossings[1:])
    if result.extra_sign_changes:
        log.warning("additional sign changes in %s", result.extra_sign_changes)
    return result


def _lower_gap(t: TargetFunction, p: JanowskiParams, st: SeriesTolerance):
    lo, _ = target_endpoints(t)
    return lambda beta: chi(DominantSpec(beta, p), st) - lo, chi_limit_at_zero(p) - lo


def _upper_gap(t: TargetFunction, p: JanowskiParams, st: SeriesTolerance):
    _, hi = target_endpoints(t)
    return lambda beta: hi - xi(DominantSpec(beta, p), st), hi - xi_limit_at_zero(p)


def search_beta1(t: TargetFunction, p: JanowskiParams, tol: float = DEFAULT_TOL) -> RootSearch:
    _check(t, p)
    f, lim = _lower_gap(t, p, _series_tol(tol))
    return find_crossing(f, tol, lim)


def search_beta2(t: TargetFunction, p: JanowskiParams, tol: float = DEFAULT_TOL) -> RootSearch:
    _check(t, p)
    f, lim = _upper_gap(t, p, _series_tol(tol))
    return find_crossing(f, tol, lim)


def solve_beta1(t: TargetFunction, p: JanowskiParams, tol: float = DEFAULT_TOL) -> Optional[float]:
    """Root of chi(beta) = P(-1), or None when that side never binds."""
    return search_beta1(t, p, tol).root


def solve_beta2(t: TargetFunction, p: JanowskiParams, tol: float = DEFAULT_TOL) -> Optional[float]:
    """Root of xi(beta) = P(1), or None when that side never binds."""
    return search_beta2(t, p, tol).root


def sharp_threshold(t: TargetFunction, p: JanowskiParams, tol: float = DEFAULT_TOL) -> ThresholdResult:
    r1 = search_beta1(t, p, tol)
    r2 = search_beta2(t, p, tol)
    active = [r.root for r in (r1, r2) if r.root is not None]
    return ThresholdResult(
        target=t.name,
        A=p.A,
        B=p.B,
        beta1=r1.root,
        beta2=r2.root,
        beta_star=max(active, default=0.0),
        residual1=r1.residual,
        residual2=r2.residual,
        bracket_log=r1.bracket_log + r2.bracket_log,
    )


def endpoint_chain(t: TargetFunction, p: JanowskiParams, beta: float,
                   st: Optional[SeriesTolerance] = None) -> bool:
    """P(-1) <= q_beta(-1) <= q_beta(1) <= P(1)."""
    st = st or _series_tol(DEFAULT_TOL)
    d = DominantSpec(beta, p)
    lo, hi = target_endpoints(t)
    return lo <= chi(d, st) <= xi(d, st) <= hi


def closed_form_b0(t: TargetFunction, A: float) -> tuple[Optional[float], Optional[float]]:
    """Thresholds at B = 0, where chi = 1 - A/(1+beta) and xi = 1 + A/(1+beta)."""
    lo, hi = target_endpoints(t)
    b1 = A / (1 - lo) - 1
    b2 = A / (hi - 1) - 1
    return (b1 if b1 > 0 else None), (b2 if b2 > 0 else None)


def sharpness_bracket(t: TargetFunction, p: JanowskiParams, result: ThresholdResult,
                      rel: float = 1e-3) -> Optional[tuple[bool, bool]]:
    """Chain status just below and just above beta_star; None if beta_star is 0."""
    if result.beta_star == 0.0:
        return None
    below = endpoint_chain(t, p, result.beta_star * (1 - rel))
    above = endpoint_chain(t, p, result.beta_star * (1 + rel))
    return below, above


def isclose_or_inactive(a: Optional[float], b: Optional[float], tol: float) -> bool:
    if a is None or b is None:
        return a is None and b is None
    return math.isclose(a, b, rel_tol=0.0, abs_tol=tol)
