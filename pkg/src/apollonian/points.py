"""Validated point and vector types on the open unit disc.

All library functions accept either these wrapper types or any 2-sequence
(tuple, list, ndarray); internally everything is converted to float64
ndarrays by :func:`as_point`, :func:`as_vector`.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import OutsideDiscError, ZeroTangentError

#: |a|^2 may deviate from 1 by at most this much for a boundary point.
BOUNDARY_TOL = 1e-12


@dataclass(frozen=True)
class DiscPoint:
    """A point strictly inside the unit disc."""

    x1: float
    x2: float

    def __post_init__(self):
        if not (self.x1 * self.x1 + self.x2 * self.x2 < 1.0):
            raise OutsideDiscError(
                f"({self.x1}, {self.x2}) is not strictly inside the unit disc"
            )

    def as_array(self):
        return np.array([self.x1, self.x2], dtype=float)


@dataclass(frozen=True)
class BoundaryPoint:
    """A point on the unit circle (|a| = 1 up to BOUNDARY_TOL)."""

    a1: float
    a2: float

    def __post_init__(self):
        r2 = self.a1 * self.a1 + self.a2 * self.a2
        if abs(r2 - 1.0) > BOUNDARY_TOL:
            raise OutsideDiscError(
                f"({self.a1}, {self.a2}) is not on the unit circle: |a|^2 - 1 = {r2 - 1.0:.3e}"
            )

    def as_array(self):
        return np.array([self.a1, self.a2], dtype=float)

    @property
    def angle(self) -> float:
        """Polar angle in (-pi, pi]."""
        return float(np.arctan2(self.a2, self.a1))


@dataclass(frozen=True)
class TangentVector:
    """A tangent vector at some disc point; the zero vector is allowed here
    but rejected by tensor and curvature operations."""

    xi1: float
    xi2: float

    def __post_init__(self):
        if not (np.isfinite(self.xi1) and np.isfinite(self.xi2)):
            raise ZeroTangentError(f"non-finite tangent components ({self.xi1}, {self.xi2})")

    def as_array(self):
        return np.array([self.xi1, self.xi2], dtype=float)


def as_point(p, *, where: str = "point") -> np.ndarray:
    """Coerce to a float64 array of shape (2,) and enforce |p| < 1."""
    if isinstance(p, DiscPoint):
        return p.as_array()
    a = np.asarray(p, dtype=float)
    if a.shape != (2,):
        raise OutsideDiscError(f"{where}: expected 2 coordinates, got shape {a.shape}")
    if not np.all(np.isfinite(a)) or a @ a >= 1.0:
        raise OutsideDiscError(
            f"{where} ({a[0]:g}, {a[1]:g}) is not strictly inside the unit disc"
        )
    return a


def as_vector(v, *, nonzero: bool = False, where: str = "tangent vector") -> np.ndarray:
    """Coerce to a float64 array of shape (2,); optionally reject the zero vector."""
    if isinstance(v, TangentVector):
        a = v.as_array()
    else:
        a = np.asarray(v, dtype=float)
        if a.shape != (2,):
            raise ZeroTangentError(f"{where}: expected 2 components, got shape {a.shape}")
        if not np.all(np.isfinite(a)):
            raise ZeroTangentError(f"{where} has non-finite components: {tuple(a)}")
    if nonzero and a[0] == 0.0 and a[1] == 0.0:
        raise ZeroTangentError(f"{where} must be nonzero")
    return a


def to_complex(p) -> complex:
    a = np.asarray(p, dtype=float)
    return complex(a[0], a[1])


def from_complex(z: complex) -> np.ndarray:
    return np.array([z.real, z.imag], dtype=float)
