"""The weak-Finsler norm induced by the Apollonian metric.

F(x, xi) = (|xi| + <x, xi>) / (1 - |x|^2)

is a Randers norm alpha + beta: alpha is the conformal disc metric
|xi|/(1 - |x|^2) and beta = b_i(x) xi^i with b_i = x^i/(1 - |x|^2), the
differential of f(x) = -log(1 - |x|^2)/2.  This module provides the norm,
its Randers split, the fundamental tensor (closed form and finite-difference
Hessian), the small-distance limit of the weak metric (which recovers F),
and the indicatrix, which is an ellipse of eccentricity |x| with one focus
at x.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._numdiff import HIGHP, cdiff, cdiff2
from .errors import OutsideDiscError, ZeroTangentError
from .points import as_point, as_vector
from .weakmetric import apollonian_distance

#: pinned central-difference step scale for the tensor Hessian oracle
HESSIAN_STEP = 1e-5

#: first-derivative checks refuse points beyond this radius
GRAD_RADIUS = 0.95


def _norm_stacked(z):
    """F at a stacked argument [x1, x2, xi1, xi2]; preserves dtype."""
    u = z[0] * z[0] + z[1] * z[1]
    return (np.sqrt(z[2] * z[2] + z[3] * z[3]) + z[0] * z[2] + z[1] * z[3]) / (1 - u)


def finsler_norm(x, xi) -> float:
    """F(x, xi); positively 1-homogeneous in xi, zero only at xi = 0."""
    x = as_point(x)
    xi = as_vector(xi)
    u = x @ x
    return (math.hypot(xi[0], xi[1]) + x @ xi) / (1.0 - u)


@dataclass(frozen=True)
class RandersSplit:
    """F = alpha + beta with alpha the conformal part and beta the 1-form part."""

    alpha: float
    beta: float
    f_value: float


def randers_split(x, xi) -> RandersSplit:
    x = as_point(x)
    xi = as_vector(xi)
    u = x @ x
    alpha = math.hypot(xi[0], xi[1]) / (1.0 - u)
    beta = (x @ xi) / (1.0 - u)
    return RandersSplit(alpha=alpha, beta=beta, f_value=alpha + beta)


def symmetrized_norm(x, xi) -> float:
    """(F(x, xi) + F(x, -xi)) / 2; collapses to the conformal part alpha."""
    xi = as_vector(xi)
    return 0.5 * (finsler_norm(x, xi) + finsler_norm(x, -xi))


def one_form_potential(x) -> float:
    """f with df = beta: f(x) = -log(1 - |x|^2) / 2."""
    x = as_point(x)
    return -0.5 * math.log(1.0 - x @ x)


def one_form_coefficients(x) -> np.ndarray:
    """b_i(x) = x^i / (1 - |x|^2)."""
    x = as_point(x)
    return x / (1.0 - x @ x)


def potential_check(x, step: float = 1e-5) -> float:
    """Max residual between b_i and the central difference of the potential.

    Second-order accurate: residual <= C * step^2 with C <= 2e3 on the grid
    |x| <= GRAD_RADIUS (C grows like the third derivative of the potential,
    so points beyond that radius are refused).
    """
    x = as_point(x)
    if x @ x > GRAD_RADIUS * GRAD_RADIUS:
        raise OutsideDiscError(f"potential_check requires |x| <= {GRAD_RADIUS}")
    b = one_form_coefficients(x)
    res = 0.0
    for i in range(2):
        xp = x.copy(); xp[i] += step
        xm = x.copy(); xm[i] -= step
        fd = (one_form_potential(xp) - one_form_potential(xm)) / (2.0 * step)
        res = max(res, abs(b[i] - fd))
    return res


@dataclass(frozen=True)
class FundamentalTensor:
    """Symmetric 2x2 Hessian of F^2/2 in the fiber variable."""

    g11: float
    g12: float
    g22: float

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.g11, self.g12], [self.g12, self.g22]])

    @property
    def det(self) -> float:
        return self.g11 * self.g22 - self.g12 * self.g12

    @property
    def is_positive_definite(self) -> bool:
        return self.g11 > 0.0 and self.det > 0.0


def fundamental_tensor(x, xi, mode: str = "closed") -> FundamentalTensor:
    """g_ij(x, xi) for xi != 0.

    mode="closed": Randers expansion
        g_ij = (F/alpha)(a_ij - l_i l_j) + (l_i + b_i)(l_j + b_j),
    with a_ij = delta_ij/(1-|x|^2)^2, l_i = a_ij xi^j / alpha.

    mode="numeric": central-difference Hessian of F^2/2 in xi with step
    HESSIAN_STEP * max(1, |xi|), evaluated in extended precision.  This is
    the definitional oracle for the closed expansion.
    """
    x = as_point(x)
    xi = as_vector(xi, nonzero=True)
    if mode == "numeric":
        z = np.array([x[0], x[1], xi[0], xi[1]], dtype=HIGHP)
        f2h = lambda w: _norm_stacked(w) ** 2 / 2
        h = HESSIAN_STEP * max(1.0, math.hypot(xi[0], xi[1]))
        g11 = float(cdiff2(f2h, z, 2, 2, HIGHP(h)))
        g12 = float(cdiff2(f2h, z, 2, 3, HIGHP(h)))
        g22 = float(cdiff2(f2h, z, 3, 3, HIGHP(h)))
        return FundamentalTensor(g11=g11, g12=g12, g22=g22)
    if mode != "closed":
        raise ValueError(f"unknown mode {mode!r}")

    u = x @ x
    w = 1.0 - u
    nrm = math.hypot(xi[0], xi[1])
    alpha = nrm / w
    b = x / w
    ell = xi / (w * w * alpha)          # a_ij xi^j / alpha
    F = alpha + b @ xi
    a = np.eye(2) / (w * w)
    g = (F / alpha) * (a - np.outer(ell, ell)) + np.outer(ell + b, ell + b)
    return FundamentalTensor(g11=g[0, 0], g12=g[0, 1], g22=g[1, 1])


def busemann_mayer_ratio(x, xi, t: float) -> float:
    """delta(x, x + t*xi) / t, the small-step distance quotient.

    Converges to F(x, xi) linearly in t; the oracle behind the closed-form
    norm.  Requires t*xi nonzero and x + t*xi strictly inside the disc.
    """
    x = as_point(x)
    xi = as_vector(xi)
    if t <= 0.0 or (xi[0] == 0.0 and xi[1] == 0.0):
        raise ZeroTangentError("busemann_mayer_ratio needs t > 0 and xi != 0")
    target = x + t * xi
    if target @ target >= 1.0:
        raise OutsideDiscError(f"x + t*xi = {tuple(target)} leaves the disc")
    return apollonian_distance(x, target) / t


@dataclass(frozen=True)
class IndicatrixEllipse:
    """The unit level set of F at x, written in eta = x + xi coordinates:

        A eta1^2 + B eta1 eta2 + C eta2^2 = rhs.

    Ellipse data (center, foci, axes, eccentricity) is extracted from the
    eigen-decomposition of the quadratic part.
    """

    A: float
    B: float
    C: float
    rhs: float
    center: np.ndarray
    focus1: np.ndarray
    focus2: np.ndarray
    semi_major: float
    semi_minor: float
    eccentricity: float
    major_direction: np.ndarray

    @property
    def discriminant(self) -> float:
        return self.B * self.B - 4.0 * self.A * self.C

    def conic_residual(self, eta) -> float:
        eta = np.asarray(eta, dtype=float)
        e1, e2 = eta[..., 0], eta[..., 1]
        val = self.A * e1 * e1 + self.B * e1 * e2 + self.C * e2 * e2 - self.rhs
        return float(np.max(np.abs(val)))


def indicatrix_ellipse(x) -> IndicatrixEllipse:
    """Conic of the indicatrix in eta = x + xi coordinates:

        (1 - x1^2) eta1^2 - 2 x1 x2 eta1 eta2 + (1 - x2^2) eta2^2 = 1 - |x|^2.

    The ellipse is centered at the origin with foci x and -x, semi-major
    axis 1 along the direction of x, semi-minor sqrt(1 - |x|^2), and
    eccentricity |x| (a circle when x = 0, where the axis direction is
    conventional).
    """
    x = as_point(x)
    u = x @ x
    A = 1.0 - x[0] * x[0]
    B = -2.0 * x[0] * x[1]
    C = 1.0 - x[1] * x[1]
    rhs = 1.0 - u

    quad = np.array([[A, B / 2.0], [B / 2.0, C]])
    evals, evecs = np.linalg.eigh(quad)
    # eigh returns ascending eigenvalues; the small one belongs to the major axis
    lam_min, lam_max = float(evals[0]), float(evals[1])
    major = evecs[:, 0]
    if u > 0.0 and major @ x < 0.0:
        major = -major
    elif u == 0.0:
        major = np.array([1.0, 0.0])
    semi_major = math.sqrt(rhs / lam_min)
    semi_minor = math.sqrt(rhs / lam_max)
    focal = math.sqrt(max(semi_major * semi_major - semi_minor * semi_minor, 0.0))
    return IndicatrixEllipse(
        A=A, B=B, C=C, rhs=rhs,
        center=np.zeros(2),
        focus1=focal * major,
        focus2=-focal * major,
        semi_major=semi_major,
        semi_minor=semi_minor,
        eccentricity=focal / semi_major,
        major_direction=major,
    )


def indicatrix_sample(x, n: int) -> np.ndarray:
    """n tangent vectors with F(x, .) = 1, one per uniform direction angle.

    Row k is xi_k = u_k / F(x, u_k) for the unit direction u_k; each
    eta_k = x + xi_k lies on the indicatrix conic.
    """
    x = as_point(x)
    if n < 3:
        raise ValueError(f"need at least 3 sample directions, got {n}")
    angles = 2.0 * math.pi * np.arange(n) / n
    dirs = np.column_stack([np.cos(angles), np.sin(angles)])
    u = x @ x
    f_vals = (1.0 + dirs @ x) / (1.0 - u)
    return dirs / f_vals[:, None]
