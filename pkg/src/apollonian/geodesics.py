"""Geodesic flow of the Apollonian weak-Finsler norm.

The geodesic ODE is xdd = -2 G(x, xd) with the closed-form spray G.  Because
the 1-form part of the norm is exact, geodesic trajectories coincide with
the hyperbolic geodesics of the conformal disc metric: diameters and circles
orthogonal to the unit circle.  This module integrates the spray ODE
(classical fixed-step 4th-order Runge-Kutta), measures Finsler length by
composite Simpson quadrature, samples hyperbolic segments analytically from
their carrier, and reconstructs the weak metric as a path-length integral.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .curvature import _spray_stacked
from .errors import OutsideDiscError
from .points import as_point, as_vector
from .weakmetric import GeodesicArc, geodesic_arc

EXIT_T_END = "t_end"
EXIT_BOUNDARY = "boundary"
EXIT_MAX_STEPS = "max_steps"


@dataclass(frozen=True)
class IntegratorConfig:
    step: float = 1e-3
    max_steps: int = 100_000
    boundary_margin: float = 0.05

    def __post_init__(self):
        if self.step <= 0.0:
            raise ValueError("step must be positive")
        if self.max_steps <= 0:
            raise ValueError("max_steps must be positive")
        if not (0.01 <= self.boundary_margin < 1.0):
            raise ValueError("boundary_margin must lie in [0.01, 1)")


@dataclass(frozen=True)
class SampledCurve:
    """A sampled parametrized curve: times (n,), points (n, 2), velocities (n, 2)."""

    t: np.ndarray
    points: np.ndarray
    velocities: np.ndarray

    def __len__(self):
        return len(self.t)


@dataclass(frozen=True)
class GeodesicPath(SampledCurve):
    step: float = float("nan")
    method: str = "rk4"
    exit_reason: str = EXIT_T_END


class _BoundaryEscape(Exception):
    pass


def _rhs(y):
    """(x, v) -> (v, -2 G(x, v)); signals if a stage point leaves the disc."""
    if y[0] * y[0] + y[1] * y[1] >= 1.0:
        raise _BoundaryEscape
    g = _spray_stacked(y)
    return np.array([y[2], y[3], -2.0 * g[0], -2.0 * g[1]])


def _rk4_step(y, h):
    k1 = _rhs(y)
    k2 = _rhs(y + 0.5 * h * k1)
    k3 = _rhs(y + 0.5 * h * k2)
    k4 = _rhs(y + h * k3)
    return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def integrate_geodesic(x0, xi0, t_end: float, config: IntegratorConfig = IntegratorConfig()) -> GeodesicPath:
    """Integrate the spray ODE from (x0, xi0) in unit-speed parametrization.

    xi0 is normalized so that F(x0, v0) = 1, which makes the path parameter
    Finsler arclength; F(x(t), v(t)) = 1 is then a conserved quantity of the
    flow and an end-to-end check on the spray.  Integration halts early with
    ``exit_reason="boundary"`` once |x| would exceed 1 - boundary_margin
    (the spray grows like (1-|x|^2)^{-2} there); the partial path is
    returned.
    """
    from .finsler import finsler_norm

    x0 = as_point(x0)
    xi0 = as_vector(xi0, nonzero=True)
    if t_end <= 0.0:
        raise ValueError("t_end must be positive")
    v0 = xi0 / finsler_norm(x0, xi0)

    r_max = 1.0 - config.boundary_margin
    y = np.array([x0[0], x0[1], v0[0], v0[1]])
    ts = [0.0]
    ys = [y]
    exit_reason = EXIT_T_END

    t = 0.0
    n = 0
    while t < t_end - 1e-15:
        h = min(config.step, t_end - t)
        try:
            y_new = _rk4_step(y, h)
        except _BoundaryEscape:
            exit_reason = EXIT_BOUNDARY
            break
        if math.hypot(y_new[0], y_new[1]) > r_max:
            exit_reason = EXIT_BOUNDARY
            break
        t += h
        y = y_new
        ts.append(t)
        ys.append(y)
        n += 1
        if n >= config.max_steps:
            if t < t_end - 1e-15:
                exit_reason = EXIT_MAX_STEPS
            break

    arr = np.array(ys)
    return GeodesicPath(
        t=np.array(ts), points=arr[:, :2], velocities=arr[:, 2:],
        step=config.step, method="rk4", exit_reason=exit_reason,
    )


def _quad_full(t0, t1, t2, f0, f1, f2):
    """Integral over [t0, t2] of the quadratic through three samples."""
    h0, h1 = t1 - t0, t2 - t1
    hs = h0 + h1
    return hs / 6.0 * ((2.0 - h1 / h0) * f0 + hs * hs / (h0 * h1) * f1 + (2.0 - h0 / h1) * f2)


def _quad_tail(t0, t1, t2, f0, f1, f2):
    """Integral over [t1, t2] only, from the quadratic through three samples."""
    h0, h1 = t1 - t0, t2 - t1
    c2 = ((f2 - f1) / h1 - (f1 - f0) / h0) / (h0 + h1)
    c1 = (f2 - f1) / h1 - c2 * h1
    return f1 * h1 + c1 * h1 * h1 / 2.0 + c2 * h1 ** 3 / 3.0


def _simpson(t, f) -> float:
    """Composite Simpson, pairing intervals from the left.

    Handles non-uniform spacing (each pair integrates the interpolating
    quadratic exactly) and an odd interval count (the final interval uses
    the quadratic through the last three samples).  Pairing from the left
    makes the rule exactly additive across a concatenation whose first part
    has an even number of intervals.
    """
    n = len(t) - 1
    if n == 0:
        return 0.0
    if n == 1:
        return 0.5 * (f[0] + f[1]) * (t[1] - t[0])
    total = 0.0
    i = 0
    while i + 2 <= n:
        total += _quad_full(t[i], t[i + 1], t[i + 2], f[i], f[i + 1], f[i + 2])
        i += 2
    if i == n - 1:
        total += _quad_tail(t[n - 2], t[n - 1], t[n], f[n - 2], f[n - 1], f[n])
    return total


def finsler_length(curve: SampledCurve) -> float:
    """Simpson quadrature of F(x(t), v(t)) over the sampled curve."""
    if len(curve) < 2:
        raise ValueError("need at least 2 samples to measure a length")
    pts = np.asarray(curve.points, dtype=float)
    vel = np.asarray(curve.velocities, dtype=float)
    u = np.sum(pts * pts, axis=1)
    if np.any(u >= 1.0):
        raise OutsideDiscError("curve sample outside the open unit disc")
    f = (np.hypot(vel[:, 0], vel[:, 1]) + np.sum(pts * vel, axis=1)) / (1.0 - u)
    return _simpson(np.asarray(curve.t, dtype=float), f)


def hyperbolic_segment(z1, z2, n: int) -> SampledCurve:
    """n+1 samples of the hyperbolic geodesic segment from z1 to z2.

    Linear on a diameter carrier; uniform in arc angle on an ortho-circle
    carrier (velocities are the exact tangents of that parametrization).
    The first and last sample equal z1 and z2 exactly.
    """
    p1 = as_point(z1, where="z1")
    p2 = as_point(z2, where="z2")
    if n < 16:
        raise ValueError(f"need n >= 16 segment samples, got {n}")
    arc = geodesic_arc(p1, p2)
    t = np.arange(n + 1) / n

    if arc.kind == "diameter":
        delta = p2 - p1
        pts = p1[None, :] + t[:, None] * delta[None, :]
        vel = np.repeat(delta[None, :], n + 1, axis=0)
    else:
        c, r = arc.center, arc.radius
        phi1 = math.atan2(p1[1] - c[1], p1[0] - c[0])
        phi2 = math.atan2(p2[1] - c[1], p2[0] - c[0])
        dphi = math.atan2(math.sin(phi2 - phi1), math.cos(phi2 - phi1))
        phi = phi1 + dphi * t
        pts = np.column_stack([c[0] + r * np.cos(phi), c[1] + r * np.sin(phi)])
        vel = r * dphi * np.column_stack([-np.sin(phi), np.cos(phi)])
    pts[0] = p1
    pts[-1] = p2
    return SampledCurve(t=t, points=pts, velocities=vel)


def distance_via_length(z1, z2, n: int = 1024) -> float:
    """Finsler length of the hyperbolic segment from z1 to z2.

    Converges to the closed-form weak metric as n grows (the infimum of
    length over paths is attained on the hyperbolic segment: the 1-form
    part is exact, so it contributes a path-independent potential
    difference, and the conformal part is minimized on its own geodesic).
    """
    if n < 64:
        raise ValueError(f"need n >= 64 quadrature samples, got {n}")
    return finsler_length(hyperbolic_segment(z1, z2, n))


def trajectory_residual(curve: SampledCurve, arc: GeodesicArc) -> float:
    """Max carrier residual over the curve samples (see GeodesicArc.point_residual)."""
    pts = np.asarray(curve.points, dtype=float)
    if len(pts) == 0:
        raise ValueError("empty path")
    return max(arc.point_residual(p) for p in pts)
