"""Tour of the Apollonian weak metric: values, asymmetry, boundary argmax.

Run:  python demos/01_weak_metric.py
"""
import math

import numpy as np

from apollonian import (
    apollonian_distance,
    barbilian_distance,
    brute_force_supremum,
    geodesic_arc,
    supremum_points,
)

z1, z2 = (0.0, 0.0), (0.5, 0.0)

print("== the weak metric is asymmetric ==")
print(f"delta({z1} -> {z2}) = {apollonian_distance(z1, z2):.12f}   (log 2 = {math.log(2):.12f})")
print(f"delta({z2} -> {z1}) = {apollonian_distance(z2, z1):.12f}   (log 1.5 = {math.log(1.5):.12f})")
print(f"Barbilian symmetrization = {barbilian_distance(z1, z2):.12f}"
      f"   (log(3)/2 = {0.5 * math.log(3):.12f})")

print("\n== the closed form equals a brute-force boundary maximization ==")
rng = np.random.default_rng(1)
for _ in range(4):
    r = 0.8 * np.sqrt(rng.uniform(size=2))
    a = rng.uniform(0, 2 * math.pi, size=2)
    w1 = (r[0] * math.cos(a[0]), r[0] * math.sin(a[0]))
    w2 = (r[1] * math.cos(a[1]), r[1] * math.sin(a[1]))
    m, t_star = brute_force_supremum(w1, w2)
    closed = apollonian_distance(w1, w2)
    print(f"pair ({w1[0]:+.3f},{w1[1]:+.3f}) -> ({w2[0]:+.3f},{w2[1]:+.3f}): "
          f"closed {closed:.12f}, log(brute sup) {math.log(m):.12f}, "
          f"gap {abs(closed - math.log(m)):.1e}")

print("\n== the supremum is attained where the hyperbolic ray exits the disc ==")
w1, w2 = (0.0, 0.5), (0.5, 0.0)
sup = supremum_points(w1, w2)
arc = geodesic_arc(w1, w2)
print(f"carrier: circle centered ({arc.center[0]:g}, {arc.center[1]:g}), "
      f"radius {arc.radius:.6f} (orthogonal to the unit circle)")
print(f"a+ = ({sup.a_plus.a1:+.6f}, {sup.a_plus.a2:+.6f}),  "
      f"a- = ({sup.a_minus.a1:+.6f}, {sup.a_minus.a2:+.6f})")
_, t_star = brute_force_supremum(w1, w2)
print(f"brute-force argmax angle {t_star:+.9f} vs a+ angle {sup.a_plus.angle:+.9f}")

print("\n== triangle inequality, spot check ==")
w3 = (-0.2, 0.3)
lhs = apollonian_distance(w1, w3)
rhs = apollonian_distance(w1, w2) + apollonian_distance(w2, w3)
print(f"delta(x,z) = {lhs:.6f} <= delta(x,y) + delta(y,z) = {rhs:.6f}")
