"""Levi-Civita connection and the parallelism of the affinor.

Christoffel symbols come from 2 Gamma^s_ij = g^{as} (d_i g_aj + d_j g_ai
- d_a g_ij), with the metric partials read off the field gradients: the
slot (a, j) of the circulant metric is A, B or C according to the offset
(j - a) mod 4, so d_i g_aj is the i-th partial of that field.

The affinor q is constant, hence nabla_i q^s_j = Gamma^s_ik q^k_j
- Gamma^k_ij q^s_k. Vanishing of this tensor is equivalent to a linear
first-order system on the coefficient gradients; both the expanded
16-relation form and the reduced 8-relation form are exposed as labeled
residual reports, and `parallelism_verdict` requires the differential and
algebraic criteria to agree.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .circulant import AFFINOR, inverse_metric
from .fields import as_point
from .manifolds import ManifoldSpec

__all__ = [
    "DomainError",
    "ResidualReport",
    "metric_partials",
    "christoffel",
    "nabla_q",
    "gradient_condition_residuals",
    "full_system_residuals",
    "parallelism_verdict",
]


class DomainError(ValueError):
    """The point lies on an excluded locus of the manifold."""


@dataclass(frozen=True)
class ResidualReport:
    """Labeled non-negative residuals, in a fixed order."""

    entries: tuple[tuple[str, float], ...]

    @property
    def max_residual(self) -> float:
        return max((value for _, value in self.entries), default=0.0)

    def __getitem__(self, label: str) -> float:
        for key, value in self.entries:
            if key == label:
                return value
        raise KeyError(label)

    def as_dict(self) -> dict[str, float]:
        return dict(self.entries)


# field index (0 = A, 1 = B, 2 = C) feeding metric slot (a, j), by (j - a) mod 4
_OFFSET_FIELD = (0, 1, 2, 1)
_SLOT_FIELD = np.array(
    [[_OFFSET_FIELD[(j - a) % 4] for j in range(4)] for a in range(4)]
)


def _field_gradients(m: ManifoldSpec, p) -> np.ndarray:
    """Rows are the gradients of A, B, C at p, shape (3, 4)."""
    return np.stack([m.A.gradient(p), m.B.gradient(p), m.C.gradient(p)])


def metric_partials(m: ManifoldSpec, p) -> np.ndarray:
    """dg[i, a, j] = d_i g_aj at p."""
    grads = _field_gradients(m, p)
    by_slot = grads[_SLOT_FIELD]  # [a, j, i]
    return np.moveaxis(by_slot, 2, 0)


def _check_domain(m: ManifoldSpec, p):
    for locus in m.excluded_loci:
        if locus.contains(p):
            raise DomainError(
                f"point {tuple(float(x) for x in p)} lies on excluded locus "
                f"{locus.label}"
            )


def christoffel(m: ManifoldSpec, p) -> np.ndarray:
    """Gamma[s, i, j] = Gamma^s_ij at p, symmetric in (i, j).

    Raises DomainError on an excluded locus and SingularMetricError when the
    metric is numerically degenerate there.
    """
    p = as_point(p)
    _check_domain(m, p)
    ginv = inverse_metric(m.triple_at(p))
    dg = metric_partials(m, p)
    t = np.einsum("iaj->aij", dg) + np.einsum("jai->aij", dg) - dg
    return 0.5 * np.einsum("as,aij->sij", ginv, t)


def nabla_q(m: ManifoldSpec, p) -> np.ndarray:
    """nq[i, s, j] = nabla_i q^s_j; identically zero iff q is parallel at p."""
    gamma = christoffel(m, p)
    return np.einsum("sik,jk->isj", gamma, AFFINOR) - np.einsum(
        "kij,ks->isj", gamma, AFFINOR
    )


def gradient_condition_residuals(m: ManifoldSpec, p) -> ResidualReport:
    """The reduced system on the coefficient gradients, eight residuals.

    Subscripts denote partials: A1 is dA/dx1 and so on. All eight vanish
    exactly when nabla q vanishes at p.
    """
    ga, gb, gc = _field_gradients(m, as_point(p))
    a1, a2, a3, a4 = ga
    b1, b2, b3, b4 = gb
    c1, c2, c3, c4 = gc
    entries = (
        ("A1 - C3", a1 - c3),
        ("A2 - C4", a2 - c4),
        ("A3 - C1", a3 - c1),
        ("A4 - C2", a4 - c2),
        ("B1 - B3", b1 - b3),
        ("B2 - B4", b2 - b4),
        ("2*B1 - C4 - C2", 2.0 * b1 - c4 - c2),
        ("2*B2 - C1 - C3", 2.0 * b2 - c1 - c3),
    )
    return ResidualReport(tuple((label, abs(float(v))) for label, v in entries))


def full_system_residuals(m: ManifoldSpec, p) -> ResidualReport:
    """The expanded 16-relation form of the same conditions.

    Each expression is a signed combination of the reduced relations with
    coefficient sums at most 8, so its residual is bounded by 8 times the
    largest reduced residual.
    """
    ga, gb, gc = _field_gradients(m, as_point(p))
    a1, a2, a3, a4 = ga
    b1, b2, b3, b4 = gb
    c1, c2, c3, c4 = gc
    entries = (
        ("A4 - B1 + B3 - C2", a4 - b1 + b3 - c2),
        ("A4 + B1 - B3 - C2", a4 + b1 - b3 - c2),
        ("2*A2 + A4 - 3*B1 - B3 + C2", 2.0 * a2 + a4 - 3.0 * b1 - b3 + c2),
        ("A3 + B2 - B4 - C1", a3 + b2 - b4 - c1),
        ("A3 - B2 + B4 - C1", a3 - b2 + b4 - c1),
        ("A2 - B1 + B3 - C4", a2 - b1 + b3 - c4),
        ("A2 + B1 - B3 - C4", a2 + b1 - b3 - c4),
        # -3*B3 here: the +3*B3 variant equals 3*(C2 + C4) under the reduced
        # relations, so it is not implied by them.
        ("A4 - B1 - 3*B3 + C2 + 2*C4", a4 - b1 - 3.0 * b3 + c2 + 2.0 * c4),
        ("A2 + 2*A4 - 3*B1 - B3 + C4", a2 + 2.0 * a4 - 3.0 * b1 - b3 + c4),
        ("A2 + 2*A4 - B1 - 3*B3 + C4", a2 + 2.0 * a4 - b1 - 3.0 * b3 + c4),
        ("A1 + 2*A3 - 3*B2 - B4 + C3", a1 + 2.0 * a3 - 3.0 * b2 - b4 + c3),
        ("A1 - B2 + B4 - C3", a1 - b2 + b4 - c3),
        ("A3 - B2 - 3*B4 + C1 + 2*C3", a3 - b2 - 3.0 * b4 + c1 + 2.0 * c3),
        ("A1 - B2 - 3*B4 + 2*C1 + C3", a1 - b2 - 3.0 * b4 + 2.0 * c1 + c3),
        ("2*A1 + A3 - B2 - 3*B4 + C1", 2.0 * a1 + a3 - b2 - 3.0 * b4 + c1),
        ("A2 - B1 - 3*B3 + 2*C2 + C4", a2 - b1 - 3.0 * b3 + 2.0 * c2 + c4),
    )
    return ResidualReport(tuple((label, abs(float(v))) for label, v in entries))


def parallelism_verdict(m: ManifoldSpec, p, tol: float = 1e-8):
    """Decide whether q is parallel at p, by both criteria at once.

    Returns (verdict, report): the verdict is true only if the largest
    component of nabla q and the largest reduced-system residual both fall
    within tol. The report lists the eight reduced residuals followed by
    the nabla q maximum.
    """
    if not tol > 0:
        raise ValueError("tolerance must be positive")
    nq_max = float(np.max(np.abs(nabla_q(m, p))))
    conditions = gradient_condition_residuals(m, p)
    verdict = nq_max <= tol and conditions.max_residual <= tol
    report = ResidualReport(conditions.entries + (("max |nabla q|", nq_max),))
    return verdict, report
