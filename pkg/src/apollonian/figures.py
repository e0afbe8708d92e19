"""Static vector figures: indicatrices, geodesic carriers, curvature field.

All emitters write SVG via matplotlib's Agg backend and return the output
path.  The default indicatrix points reproduce the standard illustration of
the family at (0.3, 0.3), (0.5, 0.5), (0.68, 0.68), whose ellipses have
eccentricities |x| = 0.4243, 0.7071, 0.9617.
"""
from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .curvature import STATED_ALPHA_CURVATURE, flag_curvature
from .finsler import indicatrix_ellipse
from .points import as_point
from .weakmetric import DIAMETER, supremum_points

INDICATRIX_DEFAULT_POINTS = ((0.3, 0.3), (0.5, 0.5), (0.68, 0.68))
GEODESIC_DEFAULT_PAIR = ((0.0, 0.5), (0.5, 0.0))


def _unit_circle(ax):
    t = np.linspace(0.0, 2.0 * math.pi, 512)
    ax.plot(np.cos(t), np.sin(t), color="steelblue", lw=1.5)
    ax.set_aspect("equal")
    ax.set_xlabel("$x_1$")
    ax.set_ylabel("$x_2$")


def figure_indicatrix(out: str, points=INDICATRIX_DEFAULT_POINTS) -> str:
    """Unit circle plus the indicatrix ellipse (in eta = x + xi coordinates)
    at each base point, marked with its focus at the base point itself."""
    fig, ax = plt.subplots(figsize=(6, 6))
    _unit_circle(ax)
    colors = plt.cm.viridis(np.linspace(0.1, 0.8, max(len(points), 2)))
    t = np.linspace(0.0, 2.0 * math.pi, 512)
    for p, color in zip(points, colors):
        p = as_point(p)
        ell = indicatrix_ellipse(p)
        v = ell.major_direction
        xs = (ell.semi_major * np.cos(t))[:, None] * v[None, :] \
            + (ell.semi_minor * np.sin(t))[:, None] * np.array([-v[1], v[0]])[None, :]
        label = f"x = ({p[0]:g}, {p[1]:g}), e = {ell.eccentricity:.4f}"
        ax.plot(xs[:, 0], xs[:, 1], color=color, lw=1.2, label=label)
        ax.plot([p[0]], [p[1]], "o", color=color, ms=4)
    ax.legend(loc="lower left", fontsize=8)
    ax.set_title("Indicatrices of the Apollonian weak-Finsler norm")
    fig.savefig(out, format="svg", bbox_inches="tight")
    plt.close(fig)
    return out


def figure_geodesics(out: str, pairs=(GEODESIC_DEFAULT_PAIR,)) -> str:
    """Carrier arcs through each pair with the boundary argmax points a+, a-."""
    fig, ax = plt.subplots(figsize=(6, 6))
    _unit_circle(ax)
    colors = plt.cm.plasma(np.linspace(0.1, 0.7, max(len(pairs), 2)))
    for (z1, z2), color in zip(pairs, colors):
        p1, p2 = as_point(z1), as_point(z2)
        sup = supremum_points(p1, p2)
        arc = sup.arc
        if arc.kind == DIAMETER:
            a, b = sup.a_plus.as_array(), sup.a_minus.as_array()
            ax.plot([a[0], b[0]], [a[1], b[1]], color=color, lw=1.2)
        else:
            c, r = arc.center, arc.radius
            pa = math.atan2(sup.a_plus.as_array()[1] - c[1], sup.a_plus.as_array()[0] - c[0])
            pb = math.atan2(sup.a_minus.as_array()[1] - c[1], sup.a_minus.as_array()[0] - c[0])
            dphi = math.atan2(math.sin(pb - pa), math.cos(pb - pa))
            phi = pa + dphi * np.linspace(0.0, 1.0, 256)
            ax.plot(c[0] + r * np.cos(phi), c[1] + r * np.sin(phi), color=color, lw=1.2)
        ax.plot([p1[0], p2[0]], [p1[1], p2[1]], "o", color=color, ms=5)
        ax.annotate("$a^+$", sup.a_plus.as_array() * 1.06, color=color, ha="center")
        ax.annotate("$a^-$", sup.a_minus.as_array() * 1.06, color=color, ha="center")
        ax.plot(*sup.a_plus.as_array(), "s", color=color, ms=5)
        ax.plot(*sup.a_minus.as_array(), "s", color=color, ms=4, fillstyle="none")
    ax.set_xlim(-1.2, 1.2)
    ax.set_ylim(-1.2, 1.2)
    ax.set_title("Hyperbolic geodesic carriers and boundary argmax points")
    fig.savefig(out, format="svg", bbox_inches="tight")
    plt.close(fig)
    return out


def figure_curvature_field(
    out: str,
    r_max: float = 0.9,
    n_r: int = 60,
    n_omega: int = 121,
    alpha_curvature: float = STATED_ALPHA_CURVATURE,
) -> str:
    """Flag curvature as a heat map over (|x|, angle of xi relative to x).

    K depends on the base point and fiber direction only through |x| and
    that relative angle, so this two-parameter chart is the whole field.
    """
    rs = np.linspace(1e-3, r_max, n_r)
    omegas = np.linspace(0.0, 2.0 * math.pi, n_omega)
    K = np.empty((n_r, n_omega))
    for i, r in enumerate(rs):
        x = (r, 0.0)
        for j, w in enumerate(omegas):
            K[i, j] = flag_curvature(x, (math.cos(w), math.sin(w)),
                                     alpha_curvature=alpha_curvature)
    fig, ax = plt.subplots(figsize=(7, 4.5))
    mesh = ax.pcolormesh(omegas, rs, K, shading="auto", cmap="coolwarm")
    fig.colorbar(mesh, ax=ax, label="flag curvature K")
    ax.set_xlabel("angle of $\\xi$ relative to $x$  [rad]")
    ax.set_ylabel("$|x|$")
    ax.set_title(f"Flag curvature field (base-curvature constant {alpha_curvature:g})")
    fig.savefig(out, format="svg", bbox_inches="tight")
    plt.close(fig)
    return out
