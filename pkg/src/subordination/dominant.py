"""The dominant q_beta of p + beta*z*p' < (1 + Az)/(1 + Bz).

q_beta is the solution of

    q'(z) + q(z)/(beta z) = (1 + Az) / ((1 + Bz) beta z),   q(0) = 1,

namely q_beta(z) = 1 + (A - B)/(beta + 1) * z * F(1, 1 + 1/beta; 2 + 1/beta; -Bz).
Its Taylor coefficients are c_n = (A - B)(-B)^(n-1) / (1 + n beta), all real.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .hypergeom import (
    DEFAULT_SERIES,
    HypergeomParams,
    SeriesTolerance,
    gauss_2f1,
    gauss_2f1_nth_derivative,
)

# rounding allowance for points such as exp(i theta) on the unit circle
UNIT_SLOP = 1e-12


@dataclass(frozen=True)
class JanowskiParams:
    A: float
    B: float

    def __post_init__(self):
        if not -1.0 <= self.B:
            raise DomainError(f"-1 <= B violated (B={self.B})")
        if not self.B < self.A:
            raise DomainError(f"B < A violated (A={self.A}, B={self.B})")
        if not self.A <= 1.0:
            raise DomainError(f"A <= 1 violated (A={self.A})")

    def __call__(self, z):
        """The Janowski function (1 + Az)/(1 + Bz)."""
        return (1 + self.A * z) / (1 + self.B * z)

    @property
    def disk(self) -> tuple[float, float]:
        """Center and radius of the image disk (only for |B| < 1)."""
        if abs(self.B) >= 1:
            raise DomainError("image of the disc is a half-plane when B = -1")
        d = 1 - self.B**2
        return (1 - self.A * self.B) / d, (self.A - self.B) / d


@dataclass(frozen=True)
class DominantSpec:
    beta: float
    params: JanowskiParams

    def __post_init__(self):
        if not self.beta > 0:
            raise DomainError(f"beta > 0 violated (beta={self.beta})")

    @property
    def scale(self) -> float:
        return (self.params.A - self.params.B) / (self.beta + 1)

    @property
    def hyper(self) -> HypergeomParams:
        b = 1 + 1 / self.beta
        return HypergeomParams(1.0, b, b + 1)


def _check_disc(d: DominantSpec, zz: np.ndarray):
    if not zz.size:
        return
    r = float(np.max(np.abs(zz)))
    if r > 1.0 + UNIT_SLOP:
        raise DomainError("q_beta is evaluated on the closed unit disc only")
    if r >= 1.0 - UNIT_SLOP and abs(d.params.B) >= 1.0:
        raise DomainError("q_beta diverges on |z| = 1 when |B| = 1")


def q_beta_eval(d: DominantSpec, z, t: SeriesTolerance = DEFAULT_SERIES):
    """Evaluate q_beta at z (scalar or array) with |z| <= 1.

    The boundary |z| = 1 is allowed when |B| < 1, since the hypergeometric
    argument -Bz then stays strictly inside the unit disc.
    """
    zz = np.asarray(z, dtype=complex)
    _check_disc(d, zz)
    B = d.params.B
    w = -B * zz
    out = 1 + d.scale * zz * gauss_2f1(d.hyper, w, t)
    return complex(out) if zz.ndim == 0 else out


def q_beta_derivatives(d: DominantSpec, z, t: SeriesTolerance = DEFAULT_SERIES):
    """Return (q', q'') at z via the hypergeometric derivative relation."""
    zz = np.asarray(z, dtype=complex)
    _check_disc(d, zz)
    B = d.params.B
    w = -B * zz
    g0 = gauss_2f1(d.hyper, w, t)
    g1 = gauss_2f1_nth_derivative(d.hyper, w, 1, t)
    g2 = gauss_2f1_nth_derivative(d.hyper, w, 2, t)
    dq = d.scale * (g0 - B * zz * g1)
    d2q = d.scale * (-2 * B * g1 + B**2 * zz * g2)
    if zz.ndim == 0:
        return complex(dq), complex(d2q)
    return dq, d2q


def ode_operator(q, dq, d: DominantSpec, z):
    """q' + q/(beta z) - J(z)/(beta z) for given values q, q' at z."""
    bz = d.beta * z
    return dq + q / bz - d.params(z) / bz


def ode_residual(d: DominantSpec, z, t: SeriesTolerance = DEFAULT_SERIES):
    zz = np.asarray(z, dtype=complex)
    if np.any(zz == 0):
        raise DomainError("ode residual is singular at z = 0")
    if np.any(1 + d.params.B * zz == 0):
        raise DomainError("ode residual is singular where 1 + Bz = 0")
    q = q_beta_eval(d, zz, t)
    dq, _ = q_beta_derivatives(d, zz, t)
    out = ode_operator(q, dq, d, zz)
    return complex(out) if zz.ndim == 0 else out


def endpoint_series(beta: float, x: float, tol: float = DEFAULT_SERIES.tol) -> float:
    """Sum_j x^j / (1 + beta + j*beta) for |x| < 1.

    Uses the collapse (1+1/beta)_k / (2+1/beta)_k = (beta+1)/(beta+1+k beta)
    so no hypergeometric normalisation is involved.
    """
    ax = abs(x)
    if ax >= 1.0:
        raise DomainError("endpoint series diverges for |B| = 1")
    if ax == 0.0:
        return 1.0 / (1.0 + beta)
    # tail after N terms is at most |x|^N / (1 - |x|)
    n = max(1, math.ceil(math.log(tol * (1.0 - ax)) / math.log(ax)) + 1)
    j = np.arange(n, dtype=float)
    terms = np.power(x, j) / (1.0 + beta + j * beta)
    return math.fsum(terms)


def chi(d: DominantSpec, t: SeriesTolerance = DEFAULT_SERIES) -> float:
    """q_beta(-1) = 1 - (A - B) sum_j B^j / (1 + beta + j beta)."""
    A, B = d.params.A, d.params.B
    return 1.0 - (A - B) * endpoint_series(d.beta, B, t.tol)


def xi(d: DominantSpec, t: SeriesTolerance = DEFAULT_SERIES) -> float:
    """q_beta(1) = 1 + (A - B) sum_j (-B)^j / (1 + beta + j beta)."""
    A, B = d.params.A, d.params.B
    return 1.0 + (A - B) * endpoint_series(d.beta, -B, t.tol)


def chi_limit_at_zero(params: JanowskiParams) -> float:
    """lim_{beta -> 0+} chi = (1 - A)/(1 - B)."""
    return (1 - params.A) / (1 - params.B)


def xi_limit_at_zero(params: JanowskiParams) -> float:
    """lim_{beta -> 0+} xi = (1 + A)/(1 + B)."""
    return (1 + params.A) / (1 + params.B)
