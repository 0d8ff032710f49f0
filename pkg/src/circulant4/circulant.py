"""Pointwise linear algebra of the circulant metric and the cyclic affinor.

A metric value here is a symmetric circulant 4x4 matrix determined by three
numbers (a, b, c), first row (a, b, c, b). Its determinant and inverse have
closed forms in the triple, which this module uses directly; generic LU
routines serve only as test oracles. The affinor q is the cyclic forward
shift, a (1,1) tensor with q^4 = id and q^2 != +-id, acting on vector
components as (qv)^j = q_i^{.j} v^i, i.e. qv = (v4, v1, v2, v3).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "CirculantTriple",
    "SingularMetricError",
    "AFFINOR",
    "affinor_power",
    "apply_affinor",
    "metric_components",
    "metric_determinant",
    "degeneracy_threshold",
    "inverse_metric",
    "is_positive_definite_ordered",
    "leading_principal_minors",
    "inner",
]


class SingularMetricError(ValueError):
    """The triple is (numerically) degenerate, no inverse metric exists."""


@dataclass(frozen=True)
class CirculantTriple:
    """The three independent components of a circulant metric value."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        for name in ("a", "b", "c"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"component {name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)


# q_i^{.j}: row i is the lower index, column j the upper one.
AFFINOR = np.array(
    [
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
        [1.0, 0.0, 0.0, 0.0],
    ]
)
AFFINOR.setflags(write=False)

_POWERS = []
for _k in range(4):
    _m = np.linalg.matrix_power(AFFINOR, _k)
    _m.setflags(write=False)
    _POWERS.append(_m)
_POWERS = tuple(_POWERS)


def affinor_power(k: int) -> np.ndarray:
    """The matrix of q^k (read-only); exponents are taken mod 4."""
    return _POWERS[k % 4]


def _as_vector(v) -> np.ndarray:
    out = np.asarray(v, dtype=float)
    if out.shape != (4,):
        raise ValueError(f"expected a 4-vector, got shape {out.shape}")
    return out


def apply_affinor(k: int, v) -> np.ndarray:
    """Apply q^k to a vector: one forward cyclic shift per power of q."""
    return np.roll(_as_vector(v), k % 4)


def metric_components(t: CirculantTriple) -> np.ndarray:
    a, b, c = t.a, t.b, t.c
    return np.array(
        [
            [a, b, c, b],
            [b, a, b, c],
            [c, b, a, b],
            [b, c, b, a],
        ]
    )


def metric_determinant(t: CirculantTriple) -> float:
    """det g = (a - c)^2 ((a + c)^2 - 4 b^2), exact in the triple."""
    return (t.a - t.c) ** 2 * ((t.a + t.c) ** 2 - 4.0 * t.b * t.b)


def degeneracy_threshold(t: CirculantTriple) -> float:
    """Scale-aware cutoff below which the inverse is refused."""
    return 1e-12 * (1.0 + abs(t.a) + abs(t.b) + abs(t.c)) ** 3


def inverse_metric(t: CirculantTriple) -> np.ndarray:
    """Closed-form inverse, again circulant with first row (abar, bbar, cbar, bbar)/d.

    Raises SingularMetricError when |d| with d = (a - c)((a + c)^2 - 4 b^2)
    falls at or below the degeneracy threshold.
    """
    a, b, c = t.a, t.b, t.c
    d = (a - c) * ((a + c) ** 2 - 4.0 * b * b)
    if abs(d) <= degeneracy_threshold(t):
        raise SingularMetricError(
            f"circulant metric ({a}, {b}, {c}) is numerically degenerate (d = {d:.3e})"
        )
    abar = (a * (a + c) - 2.0 * b * b) / d
    bbar = (b * (c - a)) / d
    cbar = (2.0 * b * b - c * (a + c)) / d
    return np.array(
        [
            [abar, bbar, cbar, bbar],
            [bbar, abar, bbar, cbar],
            [cbar, bbar, abar, bbar],
            [bbar, cbar, bbar, abar],
        ]
    )


def is_positive_definite_ordered(t: CirculantTriple) -> bool:
    """Sufficient ordering test a > c > b > 0 for positive definiteness."""
    return t.a > t.c > t.b > 0.0


def leading_principal_minors(matrix) -> np.ndarray:
    """Determinants of the four leading principal submatrices.

    All strictly positive iff the matrix is positive definite; kept separate
    from the ordering test so the two can corroborate each other.
    """
    matrix = np.asarray(matrix, dtype=float)
    if matrix.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {matrix.shape}")
    return np.array([np.linalg.det(matrix[:k, :k]) for k in range(1, 5)])


def inner(t: CirculantTriple, u, v) -> float:
    """g(u, v) for the metric value t."""
    u = _as_vector(u)
    v = _as_vector(v)
    return float(u @ metric_components(t) @ v)
