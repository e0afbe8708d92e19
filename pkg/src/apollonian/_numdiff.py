"""Central-difference helpers used by the numerical oracles.

Functions here operate on a stacked argument vector ``z`` (typically
``[x1, x2, xi1, xi2]``).  The dtype of ``z`` is preserved, so oracles that
need headroom below the float64 noise floor can pass ``np.longdouble``.
"""
import numpy as np

#: extended-precision dtype for second-difference oracles.  With the pinned
#: step h = 1e-5, float64 evaluation noise (~eps/h^2) would sit right at the
#: agreement tolerances, so oracle evaluations run in long double when the
#: platform provides one.
HIGHP = np.longdouble if np.finfo(np.longdouble).eps < 1e-18 else np.float64


def cdiff(f, z, i, h):
    """First central difference of scalar/array-valued f along coordinate i."""
    zp = np.array(z, copy=True)
    zm = np.array(z, copy=True)
    zp[i] += h
    zm[i] -= h
    return (f(zp) - f(zm)) / (2 * h)


def cdiff2(f, z, i, j, h):
    """Second central difference along coordinates i and j (mixed if i != j)."""
    if i == j:
        zp = np.array(z, copy=True)
        zm = np.array(z, copy=True)
        zp[i] += h
        zm[i] -= h
        return (f(zp) - 2 * f(z) + f(zm)) / (h * h)
    zpp = np.array(z, copy=True)
    zpm = np.array(z, copy=True)
    zmp = np.array(z, copy=True)
    zmm = np.array(z, copy=True)
    zpp[i] += h; zpp[j] += h
    zpm[i] += h; zpm[j] -= h
    zmp[i] -= h; zmp[j] += h
    zmm[i] -= h; zmm[j] -= h
    return (f(zpp) - f(zpm) - f(zmp) + f(zmm)) / (4 * h * h)


def gradient(f, z, h, idx=None):
    """Central-difference gradient along the coordinates in idx (default: all)."""
    idx = range(len(z)) if idx is None else idx
    return np.array([cdiff(f, z, i, h) for i in idx])
