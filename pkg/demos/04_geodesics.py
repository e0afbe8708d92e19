"""Geodesic flow: unit-speed conservation, hyperbolic carriers, length
reconstruction of the weak metric.

Run:  python demos/04_geodesics.py
"""
import math

import numpy as np

from apollonian import (
    IntegratorConfig,
    apollonian_distance,
    distance_via_length,
    finsler_length,
    geodesic_arc,
    hyperbolic_segment,
    integrate_geodesic,
    trajectory_residual,
)

print("== integrate the spray ODE from (0, 0.5), tangent to a known carrier ==")
arc = geodesic_arc((0, 0.5), (0.5, 0))
path = integrate_geodesic((0, 0.5), (0.75, -1.25), t_end=1.2)
pts, vel = path.points, path.velocities
u = np.sum(pts * pts, axis=1)
speeds = (np.hypot(vel[:, 0], vel[:, 1]) + np.sum(pts * vel, axis=1)) / (1 - u)
print(f"samples: {len(path.t)}, exit: {path.exit_reason}")
print(f"max |F - 1| along the flow: {np.max(np.abs(speeds - 1)):.2e} (first integral)")
print(f"max residual against the carrier circle: {trajectory_residual(path, arc):.2e}")

print("\n== trajectories follow the hyperbolic geodesics, so length recovers distance ==")
for z1, z2 in (((0, 0), (0.5, 0)), ((0.5, 0), (0, 0)), ((0, 0.5), (0.5, 0))):
    via_len = distance_via_length(z1, z2, 1024)
    closed = apollonian_distance(z1, z2)
    print(f"{z1} -> {z2}: length {via_len:.12f}, closed form {closed:.12f}, "
          f"gap {abs(via_len - closed):.1e}")

print("\n== any other path is longer (the distance is an infimum) ==")
t = np.linspace(0, 1, 257)
chord_pts = np.array([0.0, 0.5]) + t[:, None] * np.array([0.5, -0.5])
from apollonian import SampledCurve
chord = SampledCurve(t=t, points=chord_pts, velocities=np.tile([0.5, -0.5], (257, 1)))
print(f"straight chord length {finsler_length(chord):.9f} "
      f"> geodesic length {distance_via_length((0, 0.5), (0.5, 0), 1024):.9f}")

print("\n== step halving: classical 4th-order convergence ==")
ref = integrate_geodesic((0, 0.5), (0.75, -1.25), 0.8, IntegratorConfig(step=1e-4)).points[-1]
prev = None
for h in (0.08, 0.04, 0.02, 0.01):
    end = integrate_geodesic((0, 0.5), (0.75, -1.25), 0.8, IntegratorConfig(step=h)).points[-1]
    err = float(np.max(np.abs(end - ref)))
    note = f"  ratio vs previous: {prev / err:5.1f}" if prev else ""
    print(f"step {h:5.3f}: endpoint error {err:.3e}{note}")
    prev = err
