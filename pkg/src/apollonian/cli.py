"""Command-line surface: distance evaluation, curvature reports, geodesic
integration, the validation sweep, and figure emission.

Every command prints one machine-parseable key/value record (floats with 17
significant digits, so they round-trip through decimal).  Exit status: 0 on
success, 1 when a validation check fails or a geodesic halts at the
boundary guard, 2 on domain or usage errors.
"""
from __future__ import annotations

import argparse
import sys

import numpy as np

from . import __version__
from . import curvature as cv
from . import figures
from . import geodesics as ge
from . import weakmetric as wm
from .errors import ApollonianError
from .validation import GridSpec, run_validation

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_DOMAIN = 2


def _fmt(x) -> str:
    return format(float(x), ".17g")


def _write(lines, out_path):
    text = "\n".join(lines) + "\n"
    if out_path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out_path, "w") as fh:
            fh.write(text)


def _emit_matrix(lines, prefix, m):
    for i in range(m.shape[0]):
        for j in range(m.shape[1]):
            lines.append(f"{prefix}.{i + 1}{j + 1} = {_fmt(m[i, j])}")


def _parse_pair(text: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected 'x,y', got {text!r}")
    return float(parts[0]), float(parts[1])


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_dist(args) -> int:
    z1 = (args.x1, args.y1)
    z2 = (args.x2, args.y2)
    lines = [
        f"dist.z1 = {_fmt(z1[0])} {_fmt(z1[1])}",
        f"dist.z2 = {_fmt(z2[0])} {_fmt(z2[1])}",
        f"dist.forward = {_fmt(wm.apollonian_distance(z1, z2))}",
        f"dist.backward = {_fmt(wm.apollonian_distance(z2, z1))}",
        f"dist.barbilian = {_fmt(wm.barbilian_distance(z1, z2))}",
    ]
    if z1 == z2:
        lines.append("dist.supremum = degenerate")
    else:
        sup = wm.supremum_points(z1, z2)
        lines += [
            f"dist.m_value = {_fmt(sup.m_value)}",
            f"dist.a_plus = {_fmt(sup.a_plus.a1)} {_fmt(sup.a_plus.a2)}",
            f"dist.a_minus = {_fmt(sup.a_minus.a1)} {_fmt(sup.a_minus.a2)}",
            f"dist.arc.kind = {sup.arc.kind}",
        ]
        if sup.arc.kind == wm.DIAMETER:
            d = sup.arc.direction
            lines.append(f"dist.arc.direction = {_fmt(d[0])} {_fmt(d[1])}")
        else:
            c = sup.arc.center
            lines.append(f"dist.arc.center = {_fmt(c[0])} {_fmt(c[1])}")
            lines.append(f"dist.arc.radius = {_fmt(sup.arc.radius)}")
    _write(lines, args.out)
    return EXIT_OK


def _cmd_curvature(args) -> int:
    x = (args.x1, args.y1)
    xi = (args.xi1, args.xi2)
    rep = cv.curvature_report(x, xi)
    lines = [
        f"curvature.x = {_fmt(x[0])} {_fmt(x[1])}",
        f"curvature.xi = {_fmt(xi[0])} {_fmt(xi[1])}",
        f"curvature.finsler_norm = {_fmt(rep.f_norm)}",
        f"curvature.s = {_fmt(rep.s_curv)}",
        f"curvature.s_general = {_fmt(rep.s_curv_general)}",
        f"curvature.s_spray = {_fmt(rep.s_curv_spray)}",
        f"curvature.ricci = {_fmt(rep.ricci)}",
        f"curvature.flag = {_fmt(rep.flag)}",
        f"curvature.ricci_measured = {_fmt(rep.ricci_measured)}",
        f"curvature.flag_measured = {_fmt(rep.flag_measured)}",
        f"curvature.flag_numeric = {_fmt(rep.flag_numeric)}",
    ]
    _emit_matrix(lines, "curvature.riemann", rep.riemann)
    _emit_matrix(lines, "curvature.riemann_measured", rep.riemann_measured)
    _emit_matrix(lines, "curvature.riemann_numeric", rep.riemann_numeric)
    lines += [
        f"curvature.residual.stated_vs_numeric = {_fmt(rep.closed_numeric_residual)}",
        f"curvature.residual.measured_vs_numeric = {_fmt(rep.measured_numeric_residual)}",
        f"curvature.phi = {_fmt(rep.phi)}",
        f"curvature.psi = {_fmt(rep.psi)}",
        f"curvature.tau = {_fmt(rep.tau[0])} {_fmt(rep.tau[1])}",
        f"curvature.rho_log = {_fmt(rep.rho_log)}",
        f"curvature.rho_0 = {_fmt(rep.rho_0)}",
        f"curvature.sigma_bh = {_fmt(rep.sigma_bh)}",
        f"curvature.distortion = {_fmt(rep.distortion)}",
        f"curvature.margin.s_bound = {_fmt(rep.s_curv - 1.5 * rep.f_norm)}",
        f"curvature.margin.flag_lower = {_fmt(rep.flag + 0.25)}",
        f"curvature.margin.flag_upper = {_fmt(2.0 - rep.flag)}",
    ]
    _write(lines, args.out)
    return EXIT_OK


def _cmd_geodesic(args) -> int:
    config = ge.IntegratorConfig(
        step=args.step, max_steps=args.max_steps, boundary_margin=args.margin
    )
    path = ge.integrate_geodesic((args.x1, args.y1), (args.xi1, args.xi2),
                                 t_end=args.t_end, config=config)
    pts, vel = path.points, path.velocities
    u = np.sum(pts * pts, axis=1)
    f_vals = (np.hypot(vel[:, 0], vel[:, 1]) + np.sum(pts * vel, axis=1)) / (1.0 - u)
    if len(pts) >= 2:
        arc = wm.geodesic_arc(pts[0], pts[len(pts) // 2] if len(pts) > 2 else pts[-1])
        residuals = [arc.point_residual(p) for p in pts]
    else:
        # launch point already beyond the boundary margin: one-sample path
        residuals = [float("nan")] * len(pts)

    if args.format == "tabular":
        lines = ["t\tx1\tx2\tv1\tv2\tfinsler_norm\tcarrier_residual"]
        for k in range(len(pts)):
            lines.append("\t".join(_fmt(v) for v in (
                path.t[k], pts[k, 0], pts[k, 1], vel[k, 0], vel[k, 1],
                f_vals[k], residuals[k],
            )))
    else:
        lines = [
            f"geodesic.samples = {len(pts)}",
            f"geodesic.t_end = {_fmt(path.t[-1])}",
            f"geodesic.exit = {path.exit_reason}",
            f"geodesic.final_x = {_fmt(pts[-1, 0])} {_fmt(pts[-1, 1])}",
            f"geodesic.max_speed_drift = {_fmt(float(np.max(np.abs(f_vals - 1.0))))}",
            f"geodesic.max_carrier_residual = {_fmt(float(np.max(residuals)))}",
        ]
        if len(pts) >= 2:
            lines.append(f"geodesic.length = {_fmt(ge.finsler_length(path))}")
    _write(lines, args.out)
    return EXIT_OK if path.exit_reason == ge.EXIT_T_END else EXIT_CHECK_FAILED


def _cmd_validate(args) -> int:
    report = run_validation(
        seed=args.seed,
        grid_spec=args.grid,
        tol_scale=args.tol_scale,
        tau_sign=-1 if args.inject_fault == "tau-sign" else 1,
    )
    _write(report.body_lines(), args.out)
    n_bad = len(report.failed_ids)
    print(
        f"validate: {len(report.records) - n_bad}/{len(report.records)} checks passed "
        f"in {report.wall_time:.2f} s"
        + (f"; failed: {', '.join(report.failed_ids)}" if n_bad else ""),
        file=sys.stderr,
    )
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def _cmd_figure(args) -> int:
    out = args.out if args.out not in (None, "-") else f"figure-{args.kind}.svg"
    if args.kind == "indicatrix":
        pts = args.points or list(figures.INDICATRIX_DEFAULT_POINTS)
        path = figures.figure_indicatrix(out, points=pts)
    elif args.kind == "geodesics":
        pairs = args.pair or [list(figures.GEODESIC_DEFAULT_PAIR)]
        path = figures.figure_geodesics(out, pairs=pairs)
    else:
        grid = GridSpec.parse(args.grid)
        path = figures.figure_curvature_field(
            out, r_max=grid.r_max, alpha_curvature=args.alpha_curvature
        )
    print(f"figure.out = {path}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="apollonian",
        description="Apollonian weak metric on the unit disc: distances, "
                    "curvatures, geodesics, validation sweeps, figures.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default=None, metavar="PATH",
                        help="write the record to PATH instead of stdout")

    p = sub.add_parser("dist", parents=[common],
                       help="weak metric both ways, Barbilian value, boundary argmax, carrier arc")
    for name in ("x1", "y1", "x2", "y2"):
        p.add_argument(name, type=float)
    p.set_defaults(func=_cmd_dist)

    p = sub.add_parser("curvature", parents=[common],
                       help="S / Ricci / flag curvature report with oracle residuals and bound margins")
    for name in ("x1", "y1", "xi1", "xi2"):
        p.add_argument(name, type=float)
    p.set_defaults(func=_cmd_curvature)

    p = sub.add_parser("geodesic", parents=[common],
                       help="integrate the spray ODE; write the sampled path")
    for name in ("x1", "y1", "xi1", "xi2"):
        p.add_argument(name, type=float)
    p.add_argument("t_end", type=float)
    p.add_argument("--step", type=float, default=1e-3)
    p.add_argument("--max-steps", type=int, default=100_000)
    p.add_argument("--margin", type=float, default=0.05,
                   help="halt once |x| exceeds 1 - margin (default 0.05)")
    p.add_argument("--format", choices=("text", "tabular"), default="tabular")
    p.set_defaults(func=_cmd_geodesic)

    p = sub.add_parser("validate", parents=[common],
                       help="run every invariant check; nonzero exit iff any check fails")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--grid", default="9x16x16@0.9", metavar="RxAxD@rmax")
    p.add_argument("--tol-scale", type=float, default=1.0)
    p.add_argument("--inject-fault", choices=("tau-sign",), default=None,
                   help="negative control: flip the tau sign in the closed Riemann assembly")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("figure", parents=[common],
                       help="emit an SVG figure")
    p.add_argument("kind", choices=("indicatrix", "geodesics", "curvature-field"))
    p.add_argument("--points", type=_parse_pair, nargs="+", default=None,
                   help="indicatrix base points, e.g. --points 0.3,0.3 0.5,0.5")
    p.add_argument("--pair", type=_parse_pair, nargs=2, action="append", default=None,
                   help="geodesic pair, e.g. --pair 0,0.5 0.5,0 (repeatable)")
    p.add_argument("--grid", default="9x16x16@0.9", metavar="RxAxD@rmax")
    p.add_argument("--alpha-curvature", type=float, default=cv.STATED_ALPHA_CURVATURE,
                   help="base-curvature constant for the curvature-field figure")
    p.set_defaults(func=_cmd_figure)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ApollonianError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
