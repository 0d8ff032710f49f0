"""Riemann curvature and the structure identities tied to the affinor.

The (1,3) curvature follows the standard convention

    (R(e_j, e_i) e_k)^l = d_j Gamma^l_ik - d_i Gamma^l_jk
                          + Gamma^l_js Gamma^s_ik - Gamma^l_is Gamma^s_jk

stored as r[l, k, j, i], and the (0,4) tensor lowers the first index,
r4[h, k, j, i] = g_lh r[l, k, j, i], so that R(x, y, z, u) contracts x into
axis j, y into i, z into k and u into h.

The Christoffel partials entering d Gamma are assembled analytically from
the field Hessians together with d g^{-1} = -g^{-1} (d g) g^{-1}; a
central-difference route (`christoffel_partials_fd`, `riemann_fd`) is kept
as an independent oracle.

On manifolds where q is parallel the curvature satisfies two structure
identities: the (0,4) tensor absorbs q from the last slot into the third as
q^3 (`curvature_q_invariance_residual`), equivalently R(x, y, q z, q u)
= R(x, y, z, u), and each endomorphism R(x, y) commutes with q
(`curvature_q_commutation_residual`). The residual functions return the
amount by which the identity fails, zero up to roundoff when it holds.
"""

from __future__ import annotations

import numpy as np

from .circulant import AFFINOR, affinor_power, apply_affinor, inverse_metric, metric_components
from .connection import christoffel, metric_partials
from .fields import as_point
from .manifolds import ManifoldSpec

__all__ = [
    "christoffel_partials",
    "christoffel_partials_fd",
    "riemann",
    "riemann_fd",
    "riemann_lowered",
    "lower_index",
    "raise_index",
    "contract_lowered",
    "curvature_q_invariance_residual",
    "max_curvature_q_invariance_residual",
    "curvature_q_commutation_residual",
]


def _metric_second_partials(m: ManifoldSpec, p) -> np.ndarray:
    """hg[m, i, a, j] = d_m d_i g_aj, from the exact field Hessians."""
    from .connection import _SLOT_FIELD  # shared slot-to-field map

    hessians = np.stack([m.A.hessian(p), m.B.hessian(p), m.C.hessian(p)])
    by_slot = hessians[_SLOT_FIELD]  # [a, j, m, i]
    return np.einsum("ajmi->miaj", by_slot)


def christoffel_partials(m: ManifoldSpec, p) -> np.ndarray:
    """dgamma[m, s, i, j] = d_m Gamma^s_ij, fully analytic."""
    p = as_point(p)
    ginv = inverse_metric(m.triple_at(p))
    dg = metric_partials(m, p)
    hg = _metric_second_partials(m, p)
    t = np.einsum("iaj->aij", dg) + np.einsum("jai->aij", dg) - dg
    dt = np.einsum("miaj->maij", hg) + np.einsum("mjai->maij", hg) - hg
    dginv = -np.einsum("ab,mbc,cd->mad", ginv, dg, ginv)
    return 0.5 * (
        np.einsum("mas,aij->msij", dginv, t) + np.einsum("as,maij->msij", ginv, dt)
    )


def christoffel_partials_fd(m: ManifoldSpec, p, h: float = 1e-4) -> np.ndarray:
    """Central differences of christoffel, the independent route to d Gamma."""
    p = as_point(p)
    if not h > 0:
        raise ValueError("step h must be positive")
    out = np.empty((4, 4, 4, 4))
    for k in range(4):
        offset = np.zeros(4)
        offset[k] = h
        out[k] = (christoffel(m, p + offset) - christoffel(m, p - offset)) / (2.0 * h)
    return out


def _assemble_riemann(gamma: np.ndarray, dgamma: np.ndarray) -> np.ndarray:
    return (
        np.einsum("jlik->lkji", dgamma)
        - np.einsum("iljk->lkji", dgamma)
        + np.einsum("ljs,sik->lkji", gamma, gamma)
        - np.einsum("lis,sjk->lkji", gamma, gamma)
    )


def riemann(m: ManifoldSpec, p) -> np.ndarray:
    """The (1,3) curvature r[l, k, j, i], antisymmetric in (j, i)."""
    return _assemble_riemann(christoffel(m, p), christoffel_partials(m, p))


def riemann_fd(m: ManifoldSpec, p, h: float = 1e-4) -> np.ndarray:
    """Same assembly with finite-difference Christoffel partials."""
    return _assemble_riemann(christoffel(m, p), christoffel_partials_fd(m, p, h))


def lower_index(t, r13: np.ndarray) -> np.ndarray:
    """r4[h, k, j, i] = g_lh r13[l, k, j, i] for the metric value t."""
    return np.einsum("lh,lkji->hkji", metric_components(t), r13)


def raise_index(t, r4: np.ndarray) -> np.ndarray:
    """Inverse of lower_index, contracting with the inverse metric."""
    return np.einsum("hl,hkji->lkji", inverse_metric(t), r4)


def riemann_lowered(m: ManifoldSpec, p) -> np.ndarray:
    """The (0,4) curvature with the classical pair symmetries."""
    p = as_point(p)
    return lower_index(m.triple_at(p), riemann(m, p))


def contract_lowered(r4: np.ndarray, x, y, z, u) -> float:
    """R(x, y, z, u) from the (0,4) component array."""
    return float(np.einsum("hkji,j,i,k,h->", r4, x, y, z, u))


def curvature_q_invariance_residual(m: ManifoldSpec, p, x, y, z, u) -> float:
    """|R(x, y, z, qu) - R(x, y, q^3 z, u)| at p."""
    r4 = riemann_lowered(m, p)
    lhs = contract_lowered(r4, x, y, z, apply_affinor(1, u))
    rhs = contract_lowered(r4, x, y, apply_affinor(3, z), u)
    return abs(lhs - rhs)


def _q_invariance_gap(r4: np.ndarray) -> float:
    q1 = AFFINOR
    q3 = affinor_power(3)
    lhs = np.einsum("pkji,hp->hkji", r4, q1)
    rhs = np.einsum("hpji,kp->hkji", r4, q3)
    return float(np.max(np.abs(lhs - rhs)))


def max_curvature_q_invariance_residual(m: ManifoldSpec, p) -> float:
    """The slot-transfer residual maximized over all basis 4-tuples."""
    return _q_invariance_gap(riemann_lowered(m, p))


def _q_commutation_gap(r13: np.ndarray) -> float:
    lhs = np.einsum("lsji,ks->lkji", r13, AFFINOR)
    rhs = np.einsum("skji,sl->lkji", r13, AFFINOR)
    return float(np.max(np.abs(lhs - rhs)))


def curvature_q_commutation_residual(m: ManifoldSpec, p) -> float:
    """Largest entry of the commutator of q with the endomorphisms R(e_j, e_i)."""
    return _q_commutation_gap(riemann(m, p))
