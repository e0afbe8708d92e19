"""Zermelo navigation data and the hyperboloid realization.

The Randers norm F = alpha + beta is encoded by a navigation pair (h, W):
a Riemannian "sea" metric h and a "wind" field W with |W|_h < 1.  For the
Apollonian norm the pair has the closed forms

    h_ij = (delta_ij - x^i x^j) / (1 - |x|^2),     W = -x,

with |W|_h^2 = |x|^2, and the inverse navigation formula reconstructs F
exactly.  Separately, the disc maps onto the upper hyperboloid sheet
x3 = sqrt(1 + x1^2 + x2^2) by pi(x) = (2x, 1 + |x|^2)/(1 - |x|^2); pulling
back the Lorentz-Randers norm sqrt(v1^2 + v2^2 - v3^2) + v3/(1 + p3) along
pi gives exactly 2 F (the factor is two, uniformly; see pullback_check).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateNavigationError, NonSpacelikeError
from .finsler import finsler_norm
from .points import as_point, as_vector


@dataclass(frozen=True)
class ZermeloData:
    """Navigation pair (h, W) with lam = 1 - |W|_h^2."""

    h: np.ndarray
    w: np.ndarray
    lam: float
    wind_norm_sq: float


@dataclass(frozen=True)
class HyperboloidPoint:
    """A point on the upper sheet x1^2 + x2^2 - x3^2 = -1, x3 > 0."""

    x1: float
    x2: float
    x3: float

    def __post_init__(self):
        if self.x3 <= 0.0:
            raise ValueError("hyperboloid sheet requires x3 > 0")
        gap = self.x1 * self.x1 + self.x2 * self.x2 - self.x3 * self.x3 + 1.0
        if abs(gap) > 1e-12 * max(1.0, self.x3 * self.x3):
            raise ValueError(f"not on the unit hyperboloid: constraint residual {gap:.3e}")

    def as_array(self):
        return np.array([self.x1, self.x2, self.x3])

    @property
    def constraint_residual(self) -> float:
        return self.x1 * self.x1 + self.x2 * self.x2 - self.x3 * self.x3 + 1.0


def zermelo_data(x) -> ZermeloData:
    """h_ij = (delta_ij - x^i x^j)/(1-|x|^2), W = -x, |W|_h^2 = |x|^2."""
    x = as_point(x)
    u = x @ x
    w = 1.0 - u
    h = (np.eye(2) - np.outer(x, x)) / w
    wind = -x
    wind_norm_sq = float(wind @ h @ wind)
    return ZermeloData(h=h, w=wind, lam=1.0 - wind_norm_sq, wind_norm_sq=wind_norm_sq)


def zermelo_reconstruct(data: ZermeloData, xi) -> float:
    """Invert the navigation data back to the Randers norm:

    F(xi) = ( sqrt(lam h(xi,xi) + <W,xi>_h^2) - <W,xi>_h ) / lam,

    lam = 1 - |W|_h^2.  With data from :func:`zermelo_data` this equals
    finsler_norm(x, xi) identically.
    """
    xi = as_vector(xi)
    lam = data.lam
    if lam <= 0.0:
        raise DegenerateNavigationError(f"wind norm >= 1 (lam = {lam!r})")
    h_xi_xi = float(xi @ data.h @ xi)
    w_xi = float(data.w @ data.h @ xi)
    return (math.sqrt(lam * h_xi_xi + w_xi * w_xi) - w_xi) / lam


def hyperboloid_map(x) -> HyperboloidPoint:
    """pi(x) = (2x/(1-|x|^2), (1+|x|^2)/(1-|x|^2))."""
    x = as_point(x)
    u = x @ x
    w = 1.0 - u
    return HyperboloidPoint(x1=2.0 * x[0] / w, x2=2.0 * x[1] / w, x3=(1.0 + u) / w)


def hyperboloid_jacobian(x) -> np.ndarray:
    """The 3x2 Jacobian of pi, hard-coded:

    dpi^1 = 2[(1-|x|^2+2 x1^2) dx1 + 2 x1 x2 dx2] / (1-|x|^2)^2
    dpi^2 = 2[2 x1 x2 dx1 + (1-|x|^2+2 x2^2) dx2] / (1-|x|^2)^2
    dpi^3 = 2[2 x1 dx1 + 2 x2 dx2] / (1-|x|^2)^2
    """
    x = as_point(x)
    u = x @ x
    w = 1.0 - u
    s = 2.0 / (w * w)
    return s * np.array([
        [w + 2.0 * x[0] * x[0], 2.0 * x[0] * x[1]],
        [2.0 * x[0] * x[1], w + 2.0 * x[1] * x[1]],
        [2.0 * x[0], 2.0 * x[1]],
    ])


def hyperboloid_pushforward(x, xi) -> np.ndarray:
    """dpi_x(xi), a tangent of the hyperboloid (Lorentz-orthogonal to pi(x))."""
    xi = as_vector(xi)
    return hyperboloid_jacobian(x) @ xi


def lorentz_randers_value(p, v) -> float:
    """F_L(p, v) = sqrt(v1^2 + v2^2 - v3^2) + v3 / (1 + p3).

    Defined for spacelike-or-null v; hyperboloid tangents always qualify.
    """
    if isinstance(p, HyperboloidPoint):
        p3 = p.x3
    else:
        p = np.asarray(p, dtype=float)
        p3 = float(p[2])
    v = np.asarray(v, dtype=float)
    quad = v[0] * v[0] + v[1] * v[1] - v[2] * v[2]
    if quad < 0.0:
        raise NonSpacelikeError(f"Lorentz form is negative on {tuple(v)}: {quad:.3e}")
    return math.sqrt(quad) + v[2] / (1.0 + p3)


def pullback_check(x, xi) -> tuple[float, float]:
    """(F_L(pi(x), dpi(xi)), 2 F(x, xi)) - the two sides of the realization.

    The pullback of the Lorentz-Randers norm equals twice the Apollonian
    norm, uniformly in (x, xi); this function returns both so callers can
    confirm the single global factor.
    """
    x = as_point(x)
    xi = as_vector(xi)
    value = lorentz_randers_value(hyperboloid_map(x), hyperboloid_pushforward(x, xi))
    return value, 2.0 * finsler_norm(x, xi)
