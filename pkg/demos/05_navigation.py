"""Zermelo navigation data and the hyperboloid realization.

Run:  python demos/05_navigation.py
"""
import math

import numpy as np

from apollonian import (
    finsler_norm,
    hyperboloid_map,
    hyperboloid_pushforward,
    lorentz_randers_value,
    pullback_check,
    zermelo_data,
    zermelo_reconstruct,
)

x = (0.5, 0.0)

print("== navigation pair (h, W): sea metric and wind ==")
data = zermelo_data(x)
print("h =", data.h.tolist())
print("W =", data.w.tolist(), f"  |W|_h^2 = {data.wind_norm_sq:g} = |x|^2")

print("\n== the inverse navigation formula reconstructs the norm exactly ==")
for xi in ((1, 0), (0, 1), (-1, 0), (0.6, -0.8)):
    rec = zermelo_reconstruct(data, xi)
    print(f"xi = {xi}: reconstructed {rec:.12f}, direct {finsler_norm(x, xi):.12f}")

print("\n== the disc maps onto the upper hyperboloid sheet ==")
img = hyperboloid_map(x)
print(f"pi(x) = ({img.x1:g}, {img.x2:g}, {img.x3:g}),  "
      f"constraint residual {img.constraint_residual:.1e}")
push = hyperboloid_pushforward(x, (0, 1))
print(f"dpi(0,1) = {push.tolist()}  (Lorentz-orthogonal to pi(x))")

print("\n== pulling back the Lorentz-Randers norm gives exactly twice F ==")
rng = np.random.default_rng(5)
worst = 0.0
for _ in range(6):
    r = 0.85 * math.sqrt(rng.uniform())
    th, ph = rng.uniform(0, 2 * math.pi, size=2)
    p = (r * math.cos(th), r * math.sin(th))
    d = (math.cos(ph), math.sin(ph))
    val, twice_f = pullback_check(p, d)
    worst = max(worst, abs(val / finsler_norm(p, d) - 2.0))
    print(f"x = ({p[0]:+.3f},{p[1]:+.3f}): pullback {val:.9f}, 2F {twice_f:.9f}")
print(f"max |ratio - 2| = {worst:.2e}: a single global factor of 2")
