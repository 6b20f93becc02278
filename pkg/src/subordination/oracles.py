"""Independent reference computations used to cross-check the series solver.

Nothing here touches the hypergeometric series: endpoint values of q_beta come
from integrating its defining ODE along the real radius, and thresholds from a
grid scan plus bisection on those integrated values.
"""

from __future__ import annotations

import math
from typing import Optional

import numpy as np
from scipy.integrate import solve_ivp

from .dominant import JanowskiParams
from .targets import TargetFunction, target_endpoints

TAU_START = -12.0


def _taylor_start(betas: np.ndarray, p: JanowskiParams, s: float) -> np.ndarray:
    # a few coefficients from matching powers in beta z q' + q = J(z):
    # (1 + n beta) c_n = (A - B)(-B)^(n-1)
    A, B = p.A, p.B
    y = np.ones_like(betas)
    for n in range(1, 5):
        y = y + (A - B) * (-B) ** (n - 1) / (1 + n * betas) * s**n
    return y


def ode_endpoints(betas, p: JanowskiParams, x: float, rtol: float = 1e-12) -> np.ndarray:
    """q_beta(x) for x = +1 or -1 and every beta in betas, by integrating
    beta s y' + y = J(s x) along s in (0, 1].

    With s = exp(tau) the equation becomes dy/dtau = (J(x e^tau) - y)/beta,
    which is regular; all betas are integrated together as one system.
    """
    betas = np.atleast_1d(np.asarray(betas, dtype=float))
    A, B = p.A, p.B

    def rhs(tau, y):
        s = math.exp(tau) * x
        return ((1 + A * s) / (1 + B * s) - y) / betas

    y0 = _taylor_start(betas, p, x * math.exp(TAU_START))
    method = "Radau" if betas.min() < 0.02 else "DOP853"
    sol = solve_ivp(rhs, (TAU_START, 0.0), y0, method=method, rtol=rtol, atol=1e-14)
    if not sol.success:
        raise RuntimeError(sol.message)
    return sol.y[:, -1]


def ode_endpoint(beta: float, p: JanowskiParams, x: float, rtol: float = 1e-12) -> float:
    return float(ode_endpoints([beta], p, x, rtol)[0])


def _scan_bisect(gap, grid_gaps, grid, width):
    for i in range(len(grid) - 1):
        if (grid_gaps[i] < 0) != (grid_gaps[i + 1] < 0):
            lo, hi, flo = grid[i], grid[i + 1], grid_gaps[i]
            while hi - lo > width * max(1.0, hi):
                mid = 0.5 * (lo + hi)
                fm = gap(mid)
                if (fm < 0) == (flo < 0):
                    lo, flo = mid, fm
                else:
                    hi = mid
            return 0.5 * (lo + hi)
    return None


def oracle_threshold(t: TargetFunction, p: JanowskiParams, width: float = 1e-9,
                     grid: Optional[np.ndarray] = None) -> tuple[Optional[float], Optional[float], float]:
    """(beta1, beta2, beta_star) from ODE endpoint values; None marks a side that never binds."""
    if grid is None:
        grid = np.logspace(-2, 4, 61)
    lo, hi = target_endpoints(t)
    b1 = _scan_bisect(lambda b: ode_endpoint(b, p, -1.0) - lo,
                      ode_endpoints(grid, p, -1.0) - lo, grid, width)
    b2 = _scan_bisect(lambda b: hi - ode_endpoint(b, p, 1.0),
                      hi - ode_endpoints(grid, p, 1.0), grid, width)
    return b1, b2, max([b for b in (b1, b2) if b is not None], default=0.0)


def grid_min(fn, n: int = 100_001, lo: float = -1.0, hi: float = 1.0) -> float:
    """Brute-force minimum of fn on a uniform grid."""
    return float(np.min(fn(np.linspace(lo, hi, n))))
