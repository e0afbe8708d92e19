"""The Apollonian weak metric on the open unit disc.

The metric is delta(z1, z2) = log sup_{|a|=1} |z1 - a| / |z2 - a|.  The
supremum admits closed forms: the distance itself, the boundary points a+
(argmax for z1 -> z2) and a- (argmax for the reversed pair), and the carrier
of the hyperbolic geodesic through z1 and z2 (a diameter, or a circle that
meets the unit circle orthogonally).  Everything here is cross-checkable
against :func:`brute_force_supremum`, a scan-plus-golden-section maximizer
of the boundary objective that knows nothing about the closed forms.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath as mp
import numpy as np

from .errors import DegenerateInputError
from .points import BoundaryPoint, as_point, from_complex, to_complex

DIAMETER = "diameter"
ORTHO_CIRCLE = "ortho_circle"

#: pairs with |Im(conj(z1) z2)| below this (relative) threshold lie on a diameter
COLLINEAR_TOL = 1e-12

#: golden-section refinement stops once the angular bracket is this narrow
BRACKET_TOL = 1e-12

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class GeodesicArc:
    """Carrier of the hyperbolic geodesic through two disc points.

    Either a diameter (unit ``direction``), or a circle orthogonal to the
    unit circle (``center``, ``radius`` with |center|^2 = 1 + radius^2).
    """

    kind: str
    direction: np.ndarray | None = None
    center: np.ndarray | None = None
    radius: float | None = None

    @classmethod
    def diameter(cls, direction) -> "GeodesicArc":
        d = np.asarray(direction, dtype=float)
        n = math.hypot(d[0], d[1])
        if not math.isclose(n, 1.0, rel_tol=0, abs_tol=1e-12):
            raise ValueError(f"diameter direction must be unit, got |d| = {n!r}")
        return cls(kind=DIAMETER, direction=d)

    @classmethod
    def ortho_circle(cls, center, radius: float) -> "GeodesicArc":
        c = np.asarray(center, dtype=float)
        if radius <= 0:
            raise ValueError("ortho-circle radius must be positive")
        gap = (c @ c - radius * radius) - 1.0
        if abs(gap) > 1e-10 * max(1.0, c @ c):
            raise ValueError(
                f"circle is not orthogonal to the unit circle: |c|^2 - R^2 - 1 = {gap:.3e}"
            )
        return cls(kind=ORTHO_CIRCLE, center=c, radius=float(radius))

    def point_residual(self, p) -> float:
        """Distance-like residual of a point against the carrier.

        Diameter: |<p, direction_perp>|.  Ortho-circle: | |p-c| - R |,
        evaluated as | |p-c|^2 - R^2 | / (|p-c| + R) with the orthogonality
        identity |c|^2 - R^2 = 1 substituted exactly, so carriers with huge
        radii (nearly collinear generators) do not lose the cancellation.
        """
        p = np.asarray(p, dtype=float)
        if self.kind == DIAMETER:
            d = self.direction
            return abs(-p[0] * d[1] + p[1] * d[0])
        c, r = self.center, self.radius
        sq_gap = (p @ p) + 1.0 - 2.0 * (c @ p)
        return abs(sq_gap) / (math.hypot(*(p - c)) + r)


@dataclass(frozen=True)
class SupremumResult:
    """Boundary argmax points of the distance ratio, with the carrier arc."""

    a_plus: BoundaryPoint
    a_minus: BoundaryPoint
    m_value: float
    arc: GeodesicArc


def _abs2(z: complex) -> float:
    return z.real * z.real + z.imag * z.imag


def apollonian_distance(z1, z2) -> float:
    """delta(z1, z2) = log[(|z1 - z2| + |z1 conj(z2) - 1|) / (1 - |z2|^2)].

    Nonnegative, zero exactly on the diagonal, and generally asymmetric.
    """
    p1 = as_point(z1, where="z1")
    p2 = as_point(z2, where="z2")
    w1, w2 = to_complex(p1), to_complex(p2)
    num = abs(w1 - w2) + abs(w1 * w2.conjugate() - 1.0)
    den = 1.0 - _abs2(w2)
    val = math.log(num / den)
    # the ratio is >= 1 analytically; clear float dust on near-diagonal input
    return val if val > 0.0 else 0.0


def barbilian_distance(z1, z2) -> float:
    """Arithmetic symmetrization of the weak metric (a semi-metric):

    (1/2) log[(|z1 conj(z2) - 1| + |z2 - z1|) / (|z1 conj(z2) - 1| - |z2 - z1|)]
    """
    p1 = as_point(z1, where="z1")
    p2 = as_point(z2, where="z2")
    w1, w2 = to_complex(p1), to_complex(p2)
    d = abs(w1 * w2.conjugate() - 1.0)
    m = abs(w2 - w1)
    return 0.5 * math.log((d + m) / (d - m))


def boundary_objective(z1, z2, t):
    """f(t) = |z1 - e^{it}|^2 / |z2 - e^{it}|^2; accepts scalar or array t."""
    p1 = as_point(z1, where="z1")
    p2 = as_point(z2, where="z2")
    t = np.asarray(t, dtype=float)
    ct, st = np.cos(t), np.sin(t)
    num = (p1 @ p1) + 1.0 - 2.0 * (p1[0] * ct + p1[1] * st)
    den = (p2 @ p2) + 1.0 - 2.0 * (p2[0] * ct + p2[1] * st)
    out = num / den
    return float(out) if out.ndim == 0 else out


def _golden_max(f, a: float, b: float, tol: float) -> float:
    """Golden-section maximization of a unimodal f on [a, b]."""
    h = b - a
    c = b - _INV_PHI * h
    d = a + _INV_PHI * h
    fc, fd = f(c), f(d)
    while h > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            h = b - a
            c = b - _INV_PHI * h
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            h = b - a
            d = a + _INV_PHI * h
            fd = f(d)
    return 0.5 * (a + b)


def brute_force_supremum(z1, z2, n_coarse: int = 4096) -> tuple[float, float]:
    """Direct maximization of sqrt(f) over the boundary circle.

    A uniform scan of ``n_coarse`` angles locates the global maximum bracket
    (f has at most two critical points, one maximum and one minimum), then
    golden-section refinement narrows the bracket below ``BRACKET_TOL``.
    The refinement evaluates f in 30-digit arithmetic: golden section
    locates an argmax only to ~sqrt(eps * f / f''), so float64 evaluations
    would stall the walk near 1e-8 while the algorithm itself resolves
    1e-12 brackets.

    Returns ``(m_estimate, t_star)`` with ``t_star`` in (-pi, pi].  This is
    the oracle for both :func:`apollonian_distance` (via log m) and the
    closed-form a+ of :func:`supremum_points` (via the angle).
    """
    p1 = as_point(z1, where="z1")
    p2 = as_point(z2, where="z2")
    if n_coarse < 64:
        raise ValueError(f"n_coarse must be >= 64, got {n_coarse}")
    if p1[0] == p2[0] and p1[1] == p2[1]:
        raise DegenerateInputError("supremum argmax is undefined for equal points")

    ts = 2.0 * math.pi * np.arange(n_coarse) / n_coarse
    vals = boundary_objective(p1, p2, ts)
    k = int(np.argmax(vals))
    h = 2.0 * math.pi / n_coarse

    with mp.workdps(30):
        u1 = mp.mpf(p1[0]) ** 2 + mp.mpf(p1[1]) ** 2
        u2 = mp.mpf(p2[0]) ** 2 + mp.mpf(p2[1]) ** 2

        def f(t):
            ct, st = mp.cos(t), mp.sin(t)
            num = u1 + 1 - 2 * (p1[0] * ct + p1[1] * st)
            den = u2 + 1 - 2 * (p2[0] * ct + p2[1] * st)
            return num / den

        t_star = _golden_max(f, mp.mpf(ts[k]) - h, mp.mpf(ts[k]) + h, BRACKET_TOL)
        m = float(mp.sqrt(f(t_star)))
    t_star = float(t_star)
    return m, math.atan2(math.sin(t_star), math.cos(t_star))


def _is_collinear(w1: complex, w2: complex) -> bool:
    cross = (w1.conjugate() * w2).imag
    return abs(cross) <= COLLINEAR_TOL * max(abs(w1) * abs(w2), 1e-30)


def geodesic_arc(z1, z2) -> GeodesicArc:
    """Carrier of the hyperbolic geodesic through two distinct points.

    Pairs on a line through the origin give a diameter; otherwise the circle
    with center rho_c = rho2/rho1 and radius R = sqrt(|rho_c|^2 - 1), where
    rho1 = conj(z1) z2 - conj(z2) z1 and
    rho2 = z2 (1 - z1 conj(z2)) - z1 (1 - conj(z1) z2).
    """
    p1 = as_point(z1, where="z1")
    p2 = as_point(z2, where="z2")
    w1, w2 = to_complex(p1), to_complex(p2)
    if w1 == w2:
        raise DegenerateInputError("geodesic carrier needs two distinct points")
    if _is_collinear(w1, w2):
        d = p2 - p1
        return GeodesicArc.diameter(d / math.hypot(*d))
    rho1 = w1.conjugate() * w2 - w2.conjugate() * w1
    rho2 = w2 * (1.0 - w1 * w2.conjugate()) - w1 * (1.0 - w1.conjugate() * w2)
    center = rho2 / rho1
    radius = math.sqrt(_abs2(center) - 1.0)
    return GeodesicArc.ortho_circle(from_complex(center), radius)


def supremum_points(z1, z2) -> SupremumResult:
    """Closed-form boundary argmax a+ (and the reversed-pair argmax a-).

    On a diameter, a+ is the boundary point hit by the ray from z1 through
    z2, i.e. the unit vector along z2 - z1, and a- is its antipode.  On an
    ortho-circle carrier the two candidates are (1 +- iR)/conj(rho_c); the
    one with the larger boundary objective is a+ (which candidate that is
    depends on the orientation of the pair).
    """
    p1 = as_point(z1, where="z1")
    p2 = as_point(z2, where="z2")
    w1, w2 = to_complex(p1), to_complex(p2)
    if w1 == w2:
        raise DegenerateInputError("supremum points are undefined for equal points")

    arc = geodesic_arc(p1, p2)
    if arc.kind == DIAMETER:
        d = arc.direction
        plus, minus = d, -d
    else:
        rho_conj = to_complex(arc.center).conjugate()
        cand_a = (1.0 + 1j * arc.radius) / rho_conj
        cand_b = (1.0 - 1j * arc.radius) / rho_conj
        fa = boundary_objective(p1, p2, math.atan2(cand_a.imag, cand_a.real))
        fb = boundary_objective(p1, p2, math.atan2(cand_b.imag, cand_b.real))
        plus, minus = (cand_a, cand_b) if fa >= fb else (cand_b, cand_a)
        plus, minus = from_complex(plus), from_complex(minus)

    num = abs(w1 - w2) + abs(w1 * w2.conjugate() - 1.0)
    m_value = num / (1.0 - _abs2(w2))
    return SupremumResult(
        a_plus=BoundaryPoint(float(plus[0]), float(plus[1])),
        a_minus=BoundaryPoint(float(minus[0]), float(minus[1])),
        m_value=m_value,
        arc=arc,
    )
