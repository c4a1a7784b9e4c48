"""Fixed-size 3-vector algebra.

Vectors are plain ``numpy`` arrays of shape ``(3,)`` marked read-only. The
functions here are written out component by component; they never broadcast
and are not meant for batched data.
"""
from __future__ import annotations

import math
from typing import Sequence, Union

import numpy as np

from .errors import DegenerateVector

Vec3 = np.ndarray
VecLike = Union[Sequence[float], np.ndarray]

UNIT_ADMIT_TOL = 1e-9
IDENTITY_TOL = 1e-12


def vec3(x: VecLike) -> Vec3:
    """Return ``x`` as a read-only finite 3-vector."""
    v = np.array(x, dtype=float).reshape(-1)
    if v.shape != (3,):
        raise ValueError(f"expected 3 components, got {v.shape[0]}")
    if not np.all(np.isfinite(v)):
        raise ValueError(f"non-finite vector component in {v}")
    v.flags.writeable = False
    return v


def unit_vec3(x: VecLike) -> Vec3:
    """Admit ``x`` as a unit vector.

    Norm defects above ``UNIT_ADMIT_TOL`` are rejected; smaller drifts are
    absorbed by re-normalizing.
    """
    v = vec3(x)
    n = norm(v)
    defect = abs(n - 1.0)
    if defect > UNIT_ADMIT_TOL:
        raise DegenerateVector(f"not a unit vector: |v| = {n!r}")
    if defect > IDENTITY_TOL:
        v = vec3(v / n)
    return v


def dot(a: VecLike, b: VecLike) -> float:
    return float(a[0] * b[0] + a[1] * b[1] + a[2] * b[2])


def cross(a: VecLike, b: VecLike) -> Vec3:
    return vec3((
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ))


def norm(a: VecLike) -> float:
    return math.sqrt(dot(a, a))


def normalize(a: VecLike, tol: float = 1e-12) -> Vec3:
    """Scale ``a`` to unit length.

    Raises :class:`DegenerateVector` if ``|a| <= tol``, which downstream
    usually means a zero-speed point or a collapsed frame.
    """
    n = norm(a)
    if not n > tol:
        raise DegenerateVector(f"cannot normalize vector of norm {n!r}")
    return vec3(np.asarray(a, dtype=float) / n)


def combine(weights: Sequence[float], vectors: Sequence[VecLike]) -> Vec3:
    """Linear combination ``sum(w_i * v_i)``."""
    x = y = z = 0.0
    for w, v in zip(weights, vectors):
        x += w * v[0]
        y += w * v[1]
        z += w * v[2]
    return vec3((x, y, z))
