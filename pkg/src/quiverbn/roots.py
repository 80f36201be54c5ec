"""Positive roots of graphs with loops and the nonemptiness tests they decide."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from . import dims
from .quiver import Quiver, adjacency, is_nonneg, k0, leq

INFINITY = "∞"


@dataclass(frozen=True)
class RootGraph:
    """Undirected multigraph: ``m`` is symmetric with zero diagonal, ``loops[v]`` counts loops."""

    vertices: tuple[str, ...]
    m: np.ndarray
    loops: np.ndarray

    def __post_init__(self):
        n = len(self.vertices)
        m = np.asarray(self.m, dtype=np.int64)
        loops = np.asarray(self.loops, dtype=np.int64)
        if m.shape != (n, n) or not np.array_equal(m, m.T) or np.any(np.diag(m)):
            raise ValueError("m must be a symmetric matrix with zero diagonal")
        if loops.shape != (n,) or np.any(loops < 0) or np.any(m < 0):
            raise ValueError("multiplicities must be non-negative")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "loops", loops)

    def cartan(self) -> np.ndarray:
        return np.diag(2 - 2 * self.loops) - self.m


def graph_of(q: Quiver) -> RootGraph:
    adj = adjacency(q)
    loops = np.diag(adj).copy()
    m = adj + adj.T
    np.fill_diagonal(m, 0)
    return RootGraph(q.vertices, m, loops)


def framed_graph(q: Quiver, f) -> RootGraph:
    """The graph of q with an extra vertex joined to v by f_v edges."""
    g = graph_of(q)
    f = q.vector(f)
    n = q.n
    m = np.zeros((n + 1, n + 1), dtype=np.int64)
    m[:n, :n] = g.m
    m[:n, n] = m[n, :n] = f
    return RootGraph(q.vertices + (INFINITY,), m, np.append(g.loops, 0))


class RootKind(Enum):
    REAL = "RealRoot"
    IMAGINARY = "ImaginaryRoot"
    NOT_POSITIVE = "NotPositiveRoot"


@dataclass
class RootVerdict:
    kind: RootKind
    trace: list[tuple[str, tuple[int, ...]]] = field(default_factory=list)
    final: tuple[int, ...] = ()

    @property
    def is_root(self) -> bool:
        return self.kind is not RootKind.NOT_POSITIVE


def _connected(g: RootGraph, alpha: np.ndarray) -> bool:
    supp = [i for i in range(len(alpha)) if alpha[i]]
    if not supp:
        return False
    seen, stack = {supp[0]}, [supp[0]]
    while stack:
        i = stack.pop()
        for j in supp:
            if j not in seen and g.m[i, j]:
                seen.add(j)
                stack.append(j)
    return len(seen) == len(supp)


def is_positive_root(g: RootGraph, alpha) -> RootVerdict:
    """Decide whether alpha is a positive root of g.

    Reflect at loop-free vertices v with (C alpha)_v > 0.  Each step lowers
    the height.  Leaving the positive cone or disconnecting the support
    rules alpha out.  Otherwise the walk ends at a loop-free simple root
    (real) or in the fundamental region (imaginary).
    """
    a = np.asarray(alpha, dtype=np.int64).copy()
    if a.shape != (len(g.vertices),):
        raise ValueError("alpha has the wrong length")
    if not is_nonneg(a) or not a.any():
        raise ValueError("alpha must be a nonzero non-negative vector")
    c = g.cartan()
    trace: list[tuple[str, tuple[int, ...]]] = []

    def verdict(kind):
        return RootVerdict(kind, trace, tuple(int(x) for x in a))

    while True:
        if not _connected(g, a):
            return verdict(RootKind.NOT_POSITIVE)
        supp = np.flatnonzero(a)
        if len(supp) == 1 and a[supp[0]] == 1 and g.loops[supp[0]] == 0:
            return verdict(RootKind.REAL)
        ca = c @ a
        step = next((v for v in range(len(a)) if g.loops[v] == 0 and ca[v] > 0), None)
        if step is None:
            return verdict(RootKind.IMAGINARY)
        a[step] -= ca[step]
        trace.append((g.vertices[step], tuple(int(x) for x in a)))
        if a[step] < 0:
            return verdict(RootKind.NOT_POSITIVE)


def nakajima_nonempty(q: Quiver, d, f) -> bool:
    """M(d; f) is nonempty iff d = 0 or (d, 1) is a positive root of the framed graph."""
    d = q.vector(d)
    if not is_nonneg(d):
        raise ValueError("dimension vectors are non-negative")
    if not d.any():
        return True
    return is_positive_root(framed_graph(q, f), np.append(d, 1)).is_root


@dataclass
class NonemptyVerdict:
    nonempty: bool
    trace: list[tuple[tuple[int, ...], tuple[int, ...]]]

    def __bool__(self) -> bool:
        return self.nonempty


def parabolic_nonempty_trace(q: Quiver, d, k, f) -> NonemptyVerdict:
    """Decide P(d, d-k; f) by stripping k and passing to the smaller pair.

    The trace lists every (d, k) visited.
    """
    d, k, f = q.vector(d), q.vector(k), q.vector(f)
    trace = []
    while True:
        trace.append((tuple(map(int, d)), tuple(map(int, k))))
        if not is_nonneg(k) or not leq(k, d):
            return NonemptyVerdict(False, trace)
        if not k.any():
            return NonemptyVerdict(nakajima_nonempty(q, d, f), trace)
        d = d - k
        k = np.maximum(k + k0(q, d, f), 0)


def parabolic_nonempty(q: Quiver, d, k, f) -> bool:
    return parabolic_nonempty_trace(q, d, k, f).nonempty


def bn_nonempty(q: Quiver, d, f, k) -> bool:
    """BN^k(d; f) is the image of P(d, d-k; f) in M(d; f)."""
    d, k = q.vector(d), q.vector(k)
    if not leq(k, d):
        return False
    return parabolic_nonempty(q, d, k, f)


@dataclass(frozen=True)
class StratumReport:
    r: tuple[int, ...]
    stratum_dim: int
    pminus_fiber_dim: int
    pminus_preimage_dim: int
    nonempty: bool


class StrataOverflow(RuntimeError):
    """Raised when a strata enumeration would exceed its cap."""


def strata_table(q: Quiver, d, f, k, cap: int = 10**6) -> list[StratumReport]:
    """All strata BN^{=r}(d) with r >= max(k, k0[d], 0), in lexicographic order.

    Strata of negative expected dimension are empty and are skipped.
    """
    d, f, k = q.vector(d), q.vector(f), q.vector(k)
    if not is_nonneg(d) or not is_nonneg(k) or not leq(k, d):
        raise ValueError("need 0 <= k <= d")
    kz = k0(q, d, f)
    lo = np.maximum(np.maximum(k, kz), 0)
    budget = dims.dim_nakajima(q, d, f)
    rows: list[StratumReport] = []
    visited = 0

    def walk(prefix: list[int], used: int):
        nonlocal visited
        i = len(prefix)
        if i == q.n:
            r = np.array(prefix, dtype=np.int64)
            rows.append(StratumReport(
                r=tuple(prefix),
                stratum_dim=budget - used,
                pminus_fiber_dim=dims.fiber_dim_pminus(k, r),
                pminus_preimage_dim=dims.preimage_dim_pminus(q, d, k, f, r),
                nonempty=parabolic_nonempty(q, d, r, f),
            ))
            return
        for x in range(int(lo[i]), int(d[i]) + 1):
            cost = x * (x - int(kz[i]))
            if used + cost > budget:
                break
            visited += 1
            if visited > cap:
                raise StrataOverflow(f"more than {cap} strata candidates")
            walk(prefix + [x], used + cost)

    if leq(lo, d):
        walk([], 0)
    return rows
