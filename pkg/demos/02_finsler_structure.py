"""The induced Finsler norm: Randers split, small-distance limit, indicatrix.

Run:  python demos/02_finsler_structure.py
"""
import math

import numpy as np

from apollonian import (
    busemann_mayer_ratio,
    finsler_norm,
    fundamental_tensor,
    indicatrix_ellipse,
    indicatrix_sample,
    randers_split,
    symmetrized_norm,
)

x = (0.5, 0.0)

print("== norm and Randers split at x = (0.5, 0) ==")
for xi in ((1, 0), (0, 1), (-1, 0)):
    s = randers_split(x, xi)
    print(f"xi = {xi}:  F = {s.f_value:.9f} = alpha {s.alpha:.9f} + beta {s.beta:+.9f}")
print(f"symmetrized norm of (1,0): {symmetrized_norm(x, (1, 0)):.9f}  (= alpha)")

print("\n== the norm is the small-step limit of the weak metric ==")
f = finsler_norm(x, (1, 0))
for t in (1e-1, 1e-2, 1e-3, 1e-4):
    ratio = busemann_mayer_ratio(x, (1, 0), t)
    print(f"t = {t:7.0e}: delta(x, x + t xi)/t = {ratio:.9f}   error {abs(ratio - f):.2e}")
print(f"closed-form F = {f:.9f}; the error shrinks linearly in t")

print("\n== fundamental tensor: closed Randers expansion vs Hessian oracle ==")
gc = fundamental_tensor(x, (0, 1), mode="closed").matrix
gn = fundamental_tensor(x, (0, 1), mode="numeric").matrix
print("closed: ", gc.round(12).tolist())
print("numeric:", gn.round(12).tolist())
print("eigenvalues:", [float(v) for v in np.linalg.eigvalsh(gc)])

print("\n== the indicatrix is an ellipse with one focus at x ==")
ell = indicatrix_ellipse(x)
print(f"conic: {ell.A:g} eta1^2 + {ell.B:g} eta1 eta2 + {ell.C:g} eta2^2 = {ell.rhs:g}")
print(f"semi-axes ({ell.semi_major:.6f}, {ell.semi_minor:.6f}), "
      f"eccentricity {ell.eccentricity:.6f} = |x|, foci {ell.focus1} / {ell.focus2}")
xs = indicatrix_sample(x, 4)
print("unit-norm vectors per axis direction:", xs.round(9).tolist())
print("norms:", [float(round(finsler_norm(x, v), 12)) for v in xs])
