"""Gauss hypergeometric series 2F1(a, b; c; z) inside the unit disc.

The series is summed term by term with a certified geometric tail bound, so
the returned value is within ``tol`` of the true sum (up to rounding).
Arguments may be scalars or numpy arrays; arrays are evaluated in lockstep.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NonConvergence

DEFAULT_TOL = 1e-12


@dataclass(frozen=True)
class HypergeomParams:
    a: float
    b: float
    c: float

    def __post_init__(self):
        c = self.c
        if c == 0 or (c < 0 and float(c).is_integer()):
            raise DomainError(f"c must not be zero or a negative integer, got {c}")

    def shifted(self, k: int = 1) -> "HypergeomParams":
        return HypergeomParams(self.a + k, self.b + k, self.c + k)


@dataclass(frozen=True)
class SeriesTolerance:
    tol: float = DEFAULT_TOL
    max_terms: int = 200_000

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if self.max_terms < 1:
            raise ValueError("max_terms must be at least 1")


DEFAULT_SERIES = SeriesTolerance()


def _ratio_bound(p: HypergeomParams, k: int, zmax: float) -> float:
    """Upper bound on |t_{j+1}/t_j| valid for every j >= k, or inf."""
    if p.c + k <= 0:
        return math.inf
    return (
        zmax
        * (1.0 + abs(p.a - 1.0) / (k + 1))
        * (1.0 + abs(p.b - p.c) / (p.c + k))
    )


def _as_complex(z):
    arr = np.asarray(z, dtype=complex)
    return arr, arr.ndim == 0


def gauss_2f1(p: HypergeomParams, z, t: SeriesTolerance = DEFAULT_SERIES):
    """Sum F(a, b; c; z) for |z| < 1 to absolute accuracy ``t.tol``."""
    zz, scalar = _as_complex(z)
    zabs = np.abs(zz)
    if zz.size and np.max(zabs) >= 1.0:
        raise DomainError("2F1 series is only evaluated for |z| < 1")
    zmax = float(np.max(zabs)) if zz.size else 0.0

    total = np.ones_like(zz)
    term = np.ones_like(zz)
    a, b, c = p.a, p.b, p.c
    for k in range(t.max_terms):
        term = term * ((a + k) * (b + k) / ((c + k) * (k + 1))) * zz
        # term now holds t_{k+1}; the tail from k+1 on is bounded geometrically
        tmax = float(np.max(np.abs(term))) if zz.size else 0.0
        if tmax == 0.0:
            break
        rho = _ratio_bound(p, k + 1, zmax)
        if rho < 1.0 and tmax / (1.0 - rho) < t.tol:
            break
        total = total + term
    else:
        raise NonConvergence(
            f"2F1({a}, {b}; {c}; |z|={zmax:.6g}) not converged in {t.max_terms} terms"
        )
    return complex(total) if scalar else total


def gauss_2f1_derivative(p: HypergeomParams, z, t: SeriesTolerance = DEFAULT_SERIES):
    """dF/dz via (ab/c) F(a+1, b+1; c+1; z)."""
    return gauss_2f1_nth_derivative(p, z, 1, t)


def gauss_2f1_nth_derivative(p: HypergeomParams, z, n: int, t: SeriesTolerance = DEFAULT_SERIES):
    if n < 0:
        raise ValueError("derivative order must be nonnegative")
    factor = 1.0
    for k in range(n):
        factor *= (p.a + k) * (p.b + k) / (p.c + k)
    if factor == 0.0:
        zz, scalar = _as_complex(z)
        if zz.size and np.max(np.abs(zz)) >= 1.0:
            raise DomainError("2F1 series is only evaluated for |z| < 1")
        return 0j if scalar else np.zeros_like(zz)
    return factor * gauss_2f1(p.shifted(n), z, t)


def partial_sum(p: HypergeomParams, z: complex, n_terms: int) -> complex:
    """Plain N-term partial sum, no tail control."""
    total = 0j
    term = 1 + 0j
    for k in range(n_terms):
        total += term
        term *= (p.a + k) * (p.b + k) / ((p.c + k) * (k + 1)) * z
    return total
