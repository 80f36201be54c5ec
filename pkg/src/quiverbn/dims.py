"""Closed-form dimensions of quiver varieties and their parabolic loci.

Every function takes a :class:`~quiverbn.quiver.Quiver` and vector-like
arguments (see :meth:`Quiver.vector`) and returns a Python ``int``.  The
numbers are expected dimensions: they make sense whether or not the
variety in question is nonempty.
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from .quiver import Quiver, adjacency, cartan, is_nonneg, k0, leq


def _check_nonneg(*vecs: np.ndarray) -> None:
    for v in vecs:
        if not is_nonneg(v):
            raise ValueError(f"negative entry in {list(map(int, v))}")


def dim_nakajima(q: Quiver, d, f) -> int:
    """2 f.d - d.C d."""
    d, f = q.vector(d), q.vector(f)
    _check_nonneg(d, f)
    return int(2 * f @ d - d @ cartan(q) @ d)


def _pair_inputs(q: Quiver, d, k, f):
    d, k, f = q.vector(d), q.vector(k), q.vector(f)
    _check_nonneg(d, k, f)
    if not leq(k, d):
        raise ValueError("k must satisfy 0 <= k <= d")
    return d, k, f


def dim_parabolic_pair(q: Quiver, d, k, f) -> int:
    """Dimension of P(d, d-k; f): dim M(d) - sum k_v (k_v - k0_v[d])."""
    d, k, f = _pair_inputs(q, d, k, f)
    return dim_nakajima(q, d, f) - int(k @ (k - k0(q, d, f)))


def dim_parabolic_full(q: Quiver, d, k, f) -> int:
    """Dimension of the full-flag variety P^k(d; f)."""
    d, k, f = _pair_inputs(q, d, k, f)
    return (dim_nakajima(q, d, f) - int(f @ k) + int(d @ cartan(q) @ k)
            - int(k @ (k + 1)) // 2)


def _chain_vectors(q: Quiver, chain: Sequence) -> list[np.ndarray]:
    ds = [q.vector(x) for x in chain]
    if not ds:
        raise ValueError("a chain needs at least one dimension vector")
    _check_nonneg(*ds)
    for hi, lo in zip(ds, ds[1:]):
        if not leq(lo, hi):
            raise ValueError("chain dimension vectors must decrease")
    return ds


def dim_parabolic_chain(q: Quiver, chain: Sequence, f) -> int:
    """Dimension of P(d0, ..., d_l; f) for a decreasing chain of dimension vectors."""
    ds = _chain_vectors(q, chain)
    f = q.vector(f)
    d0, k = ds[0], ds[0] - ds[-1]
    kappa = [hi - lo for hi, lo in zip(ds, ds[1:])]
    pairs = sum(int(a @ b) for m, a in enumerate(kappa) for b in kappa[m:])
    return dim_nakajima(q, d0, f) - int(f @ k) + int(d0 @ cartan(q) @ k) - pairs


def flag_fiber_dim(q: Quiver, chain: Sequence) -> int:
    """Dimension of the partial flag variety of type (kappa^1, ..., kappa^l) in each K_v."""
    ds = _chain_vectors(q, chain)
    kappa = [hi - lo for hi, lo in zip(ds, ds[1:])]
    return sum(int(a @ b) for m, a in enumerate(kappa) for b in kappa[m + 1:])


def effective_k(q: Quiver, d, f, k) -> np.ndarray:
    """max(k, k0[d]): the loci BN^k and BN^{max(k, k0)} coincide."""
    return np.maximum(q.vector(k), k0(q, d, f))


def dim_bn(q: Quiver, d, f, k) -> int:
    """Dimension of BN^k(d; f), evaluated at the effective index max(k, k0[d])."""
    d, k, f = _pair_inputs(q, d, k, f)
    ke = effective_k(q, d, f, k)
    return dim_nakajima(q, d, f) - int(ke @ (ke - k0(q, d, f)))


def dim_bn_stratum(q: Quiver, d, f, r) -> int:
    """Dimension of BN^{=r}: dim M(d) - sum r_v (r_v - k0_v[d])."""
    d, r, f = q.vector(d), q.vector(r), q.vector(f)
    _check_nonneg(d, f)
    kz = k0(q, d, f)
    if not leq(np.maximum(kz, 0), r):
        raise ValueError("stratum index must satisfy r >= max(k0[d], 0)")
    return dim_nakajima(q, d, f) - int(r @ (r - kz))


def fiber_dim_pminus(k, r) -> int | None:
    """Dimension of the product of Grassmannians Gr(k_v, r_v); None when empty."""
    k, r = np.asarray(k, dtype=np.int64), np.asarray(r, dtype=np.int64)
    if not leq(k, r):
        return None
    return int(k @ (r - k))


def fiber_dim_pplus(q: Quiver, d, k, f, r) -> int | None:
    """Fibre of the second projection over a point of stratum r in M(d-k); None when empty."""
    d, k, f, r = q.vector(d), q.vector(k), q.vector(f), q.vector(r)
    top = r - k0(q, d - k, f)
    if not leq(k, top):
        return None
    return int(k @ (top - k))


def preimage_dim_pminus(q: Quiver, d, k, f, r) -> int:
    """Dimension of the preimage in P(d, d-k) of the stratum BN^{=r}(d)."""
    d, k, f = _pair_inputs(q, d, k, f)
    r = q.vector(r)
    if not leq(k, r):
        raise ValueError("the preimage is empty unless k <= r")
    return dim_parabolic_pair(q, d, k, f) - int((r - k) @ (r - k0(q, d, f)))


def preimage_dim_pplus(q: Quiver, d, k, f, r) -> int:
    """Dimension of the preimage in P(d, d-k) of the stratum BN^{=r}(d-k)."""
    d, k, f = _pair_inputs(q, d, k, f)
    r = q.vector(r)
    return dim_parabolic_pair(q, d, k, f) - int(r @ (r - k - k0(q, d - k, f)))


def excess(q: Quiver, d0, d1, d2) -> tuple[int, int]:
    """The correction terms (R1, R2) comparing P(d0, d1, d2) with the fibre product."""
    d0, d1, d2 = _chain_vectors(q, [d0, d1, d2])
    k, kp = d0 - d1, d1 - d2
    adj = adjacency(q)
    return int(k @ kp), int(kp @ (adj + adj.T) @ k)


def half_dim_defect(q: Quiver, k) -> int:
    """sum over arrows e of k_out(e) k_in(e)."""
    k = q.vector(k)
    return int(k @ adjacency(q) @ k)


def is_lagrangian_support(q: Quiver, k) -> bool:
    """True when no arrow (loops included) joins two vertices in the support of k."""
    k = q.vector(k)
    return all(k[q.index(a.out)] == 0 or k[q.index(a.in_)] == 0 for a in q.arrows)


def dim_nakajima_correspondence(q: Quiver, d, v: str, f) -> int:
    """The Hecke correspondence between M(d) and M(d - delta_v).

    It is P(d, d - delta_v) times an affine space of dimension 2 |Q1(v, v)|.
    """
    return dim_parabolic_pair(q, d, q.delta(v), f) + 2 * int(adjacency(q)[q.index(v), q.index(v)])
