"""Ma-Minda target functions P with P(0) = 1, their endpoints and image curves."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np

from .dominant import JanowskiParams
from .errors import DomainError

SQRT2 = math.sqrt(2.0)
RATIONAL_K = SQRT2 + 1.0
BOUNDARY_BACKOFF = 1e-9


class Tag(str, Enum):
    EXPONENTIAL = "exponential"
    SINE = "sine"
    RATIONAL = "rational"
    CARDIOID = "cardioid"
    NEPHROID = "nephroid"
    LUNE = "lune"
    LEMNISCATE = "lemniscate"
    BELL = "bell"
    TANH = "tanh"
    SIGMOID = "sigmoid"
    JANOWSKI = "janowski"


# Targets with a sharp beta threshold.
THEOREM_TAGS = (
    Tag.EXPONENTIAL,
    Tag.SINE,
    Tag.RATIONAL,
    Tag.CARDIOID,
    Tag.NEPHROID,
    Tag.LUNE,
    Tag.LEMNISCATE,
    Tag.BELL,
    Tag.TANH,
)


def _rational(z):
    k = RATIONAL_K
    return 1 + (z / k) * ((k + z) / (k - z))


def _cardioid(z):
    return 2 * z**2 / 3 + 4 * z / 3 + 1


def _nephroid(z):
    return 1 + z - z**3 / 3


def _lune(z):
    return z + np.sqrt(1 + z**2)


def _lemniscate(z):
    return np.sqrt(1 + z)


def _bell(z):
    return np.exp(np.exp(z) - 1)


_EVALUATORS = {
    Tag.EXPONENTIAL: np.exp,
    Tag.SINE: lambda z: 1 + np.sin(z),
    Tag.RATIONAL: _rational,
    Tag.CARDIOID: _cardioid,
    Tag.NEPHROID: _nephroid,
    Tag.LUNE: _lune,
    Tag.LEMNISCATE: _lemniscate,
    Tag.BELL: _bell,
    Tag.TANH: lambda z: 1 + np.tanh(z),
    Tag.SIGMOID: lambda z: 2 / (1 + np.exp(-z)),
}


@dataclass(frozen=True)
class TargetFunction:
    tag: Tag
    params: Optional[JanowskiParams] = None

    def __post_init__(self):
        object.__setattr__(self, "tag", Tag(self.tag))
        if self.tag is Tag.JANOWSKI and self.params is None:
            raise ValueError("Janowski target needs JanowskiParams")

    @classmethod
    def janowski(cls, A: float, B: float) -> "TargetFunction":
        return cls(Tag.JANOWSKI, JanowskiParams(A, B))

    @property
    def name(self) -> str:
        return self.tag.value

    def __call__(self, z):
        return target_eval(self, z)


@dataclass
class BoundaryCurve:
    """Closed curve sampled at theta_j = 2 pi j / n (first point not repeated)."""

    thetas: np.ndarray
    points: np.ndarray
    radius: float = 1.0
    closed: bool = field(default=True)

    def __post_init__(self):
        self.thetas = np.asarray(self.thetas, dtype=float)
        self.points = np.asarray(self.points, dtype=complex)
        if len(self.points) < 16:
            raise ValueError("a boundary curve needs at least 16 points")
        if len(self.points) != len(self.thetas):
            raise ValueError("thetas and points differ in length")
        if not np.all(np.isfinite(self.points)):
            raise DomainError("boundary curve contains non-finite points")

    def __len__(self):
        return len(self.points)

    def rows(self):
        for th, w in zip(self.thetas, self.points):
            yield float(th), float(w.real), float(w.imag)


def target_eval(t: TargetFunction, z):
    zz = np.asarray(z, dtype=complex)
    if zz.size and np.max(np.abs(zz)) > 1.0 + 1e-12:
        raise DomainError("targets are evaluated on the closed unit disc only")
    if t.tag is Tag.JANOWSKI:
        p = t.params
        if np.any(1 + p.B * zz == 0):
            raise DomainError("Janowski target has a pole at z = 1 when B = -1")
        out = p(zz)
    else:
        out = _EVALUATORS[t.tag](zz)
    return complex(out) if zz.ndim == 0 else out


def target_endpoints(t: TargetFunction) -> tuple[float, float]:
    """(P(-1), P(1)); both real since every P has real Taylor coefficients."""
    lo = target_eval(t, -1.0)
    hi = target_eval(t, 1.0)
    return lo.real, hi.real


def needs_backoff(t: TargetFunction) -> bool:
    if t.tag in (Tag.LEMNISCATE, Tag.LUNE):
        return True
    return t.tag is Tag.JANOWSKI and t.params.B <= -1.0


def target_boundary_curve(t: TargetFunction, n: int) -> BoundaryCurve:
    if n < 16:
        raise ValueError("n >= 16 required")
    radius = 1.0 - BOUNDARY_BACKOFF if needs_backoff(t) else 1.0
    thetas = 2 * np.pi * np.arange(n) / n
    points = target_eval(t, radius * np.exp(1j * thetas))
    return BoundaryCurve(thetas, points, radius)
