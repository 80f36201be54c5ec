"""Explicit framed representations together with parabolic points and chains over them.

A framed representation of the doubled framed quiver stores, for every
arrow ``e: u -> w``, the matrices ``A[e]`` (``d_w x d_u``) and ``B[e]``
(``d_u x d_w``), and for every vertex ``v`` the framing maps ``i[v]``
(``d_v x f_v``) and ``j[v]`` (``f_v x d_v``).  All entries are exact
rationals; see :mod:`quiverbn.linalg`.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from . import dims
from . import linalg as la
from .quiver import Quiver, k0, leq


@dataclass
class FramedRep:
    quiver: Quiver
    d: np.ndarray
    f: np.ndarray
    A: dict[str, np.ndarray] = field(default_factory=dict)
    B: dict[str, np.ndarray] = field(default_factory=dict)
    i: dict[str, np.ndarray] = field(default_factory=dict)
    j: dict[str, np.ndarray] = field(default_factory=dict)

    def __post_init__(self):
        q = self.quiver
        self.d, self.f = q.vector(self.d), q.vector(self.f)
        if np.any(self.d < 0) or np.any(self.f < 0):
            raise ValueError("dimension and framing vectors are non-negative")
        self.A = _fill(self.A, q.arrows, lambda a: (self.dim(a.in_), self.dim(a.out)), "A")
        self.B = _fill(self.B, q.arrows, lambda a: (self.dim(a.out), self.dim(a.in_)), "B")
        self.i = _fill(self.i, q.vertices, lambda v: (self.dim(v), self.fdim(v)), "i")
        self.j = _fill(self.j, q.vertices, lambda v: (self.fdim(v), self.dim(v)), "j")

    def dim(self, v: str) -> int:
        return int(self.d[self.quiver.index(v)])

    def fdim(self, v: str) -> int:
        return int(self.f[self.quiver.index(v)])


def _fill(given, keys, shape_of, name) -> dict[str, np.ndarray]:
    given = dict(given or {})
    out = {}
    for key in keys:
        label = key if isinstance(key, str) else key.id
        shape = shape_of(key)
        m = given.pop(label, None)
        m = la.zeros(*shape) if m is None else la.qarray(m, shape if np.size(m) == 0 else None)
        if m.shape != shape:
            raise ValueError(f"{name}[{label}] has shape {m.shape}, expected {shape}")
        out[label] = m
    if given:
        raise ValueError(f"{name} has entries for unknown keys {sorted(given)}")
    return out


def moment_residual(rep: FramedRep) -> dict[str, np.ndarray]:
    """mu_v = sum_{in(e)=v} A_e B_e - sum_{out(e)=v} B_e A_e + i_v j_v."""
    q = rep.quiver
    out = {}
    for v in q.vertices:
        total = la.matmul(rep.i[v], rep.j[v])
        for a in q.arrows_in(v):
            total = total + la.matmul(rep.A[a.id], rep.B[a.id])
        for a in q.arrows_out(v):
            total = total - la.matmul(rep.B[a.id], rep.A[a.id])
        out[v] = la.normalize(total)
    return out


def is_flat(rep: FramedRep) -> bool:
    return all(la.is_zero(m) for m in moment_residual(rep).values())


def saturation(rep: FramedRep) -> dict[str, np.ndarray]:
    """Smallest subrepresentation containing the images of all i_v (basis per vertex)."""
    q = rep.quiver
    span = {v: la.colspace_basis(rep.i[v]) for v in q.vertices}
    for _ in range(int(rep.d.sum()) + 1):
        grown = False
        for a in q.arrows:
            for src, dst, m in ((a.out, a.in_, rep.A[a.id]), (a.in_, a.out, rep.B[a.id])):
                image = la.matmul(m, span[src])
                if not la.span_contains(span[dst], image):
                    span[dst] = la.colspace_basis(la.hstack([span[dst], image]))
                    grown = True
        if not grown:
            return span
    raise AssertionError("saturation did not terminate")


def is_stable(rep: FramedRep) -> bool:
    span = saturation(rep)
    return all(span[v].shape[1] == rep.dim(v) for v in rep.quiver.vertices)


def _xi_slots(q: Quiver, v: str) -> list[tuple[str, str, str]]:
    """Summands of Xi_v: (kind, arrow id, vertex of the summand)."""
    slots = [("out", a.id, a.in_) for a in q.arrows_out(v)]
    slots += [("in", a.id, a.out) for a in q.arrows_in(v)]
    return slots


def m1(rep: FramedRep, v: str) -> np.ndarray:
    """D_v -> Xi_v with components A_e (out(e)=v), B_e (in(e)=v) and j_v."""
    blocks = [rep.A[e] if kind == "out" else rep.B[e] for kind, e, _ in _xi_slots(rep.quiver, v)]
    return la.vstack(blocks + [rep.j[v]], cols=rep.dim(v))


def m2(rep: FramedRep, v: str) -> np.ndarray:
    """Xi_v -> D_v with components -B_e, A_e and i_v, so that m2 m1 = mu_v."""
    blocks = [-rep.B[e] if kind == "out" else rep.A[e] for kind, e, _ in _xi_slots(rep.quiver, v)]
    return la.hstack(blocks + [rep.i[v]], rows=rep.dim(v))


def hom_basis(rep: FramedRep, v: str) -> np.ndarray:
    """Basis of the vectors at v killed by every outgoing map (the trivial-rep Hom space)."""
    return la.kernel_basis(m1(rep, v))


def bn_stratum_of(rep: FramedRep) -> tuple[int, ...]:
    if not (is_flat(rep) and is_stable(rep)):
        warnings.warn("stratum of a representation that is not flat and stable", stacklevel=2)
    return tuple(hom_basis(rep, v).shape[1] for v in rep.quiver.vertices)


def conjugate(rep: FramedRep, g: dict[str, np.ndarray]) -> FramedRep:
    """Act by (g_v) in GL(d): A_e -> g_in A_e g_out^-1 and so on."""
    q = rep.quiver
    g = {v: la.qarray(g[v]) if v in g else la.identity(rep.dim(v)) for v in q.vertices}
    ginv = {v: la.inverse(m) for v, m in g.items()}
    return FramedRep(
        q, rep.d, rep.f,
        A={a.id: la.matmul(g[a.in_], rep.A[a.id], ginv[a.out]) for a in q.arrows},
        B={a.id: la.matmul(g[a.out], rep.B[a.id], ginv[a.in_]) for a in q.arrows},
        i={v: la.matmul(g[v], rep.i[v]) for v in q.vertices},
        j={v: la.matmul(rep.j[v], ginv[v]) for v in q.vertices},
    )


@dataclass
class Validation:
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok

    def check(self, cond: bool, message: str) -> None:
        if not cond:
            self.failures.append(message)


def validate_rep(rep: FramedRep) -> Validation:
    report = Validation()
    for v, res in moment_residual(rep).items():
        report.check(la.is_zero(res), f"moment map does not vanish at {v}")
    report.check(is_stable(rep), "not stable")
    return report


# Quotients by trivial subrepresentations


@dataclass
class Quotient:
    rep: FramedRep
    pi: dict[str, np.ndarray]
    section: dict[str, np.ndarray]


def _split(sub: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Projection with kernel colspan(sub) onto canonical complement coordinates, and a section."""
    basis = la.colspace_basis(sub)
    comp = la.complement_basis(basis)
    t = la.hstack([basis, comp])
    pi = la.inverse(t)[basis.shape[1]:]
    return pi, comp


def quotient_data(rep: FramedRep, K: dict[str, np.ndarray]) -> Quotient:
    q = rep.quiver
    pi, sec = {}, {}
    for v in q.vertices:
        sub = la.qarray(K[v]) if v in K else la.zeros(rep.dim(v), 0)
        if sub.shape[0] != rep.dim(v):
            raise ValueError(f"K[{v}] lives in the wrong space")
        if not la.span_contains(hom_basis(rep, v), sub):
            raise ValueError(f"K[{v}] is not killed by every map out of {v}")
        pi[v], sec[v] = _split(sub)
    dq = [pi[v].shape[0] for v in q.vertices]
    out = FramedRep(
        q, dq, rep.f,
        A={a.id: la.matmul(pi[a.in_], rep.A[a.id], sec[a.out]) for a in q.arrows},
        B={a.id: la.matmul(pi[a.out], rep.B[a.id], sec[a.in_]) for a in q.arrows},
        i={v: la.matmul(pi[v], rep.i[v]) for v in q.vertices},
        j={v: la.matmul(rep.j[v], sec[v]) for v in q.vertices},
    )
    return Quotient(out, pi, sec)


def quotient_by_K(rep: FramedRep, K: dict[str, np.ndarray]) -> FramedRep:
    """D / K for K inside the Hom space at each vertex."""
    result = quotient_data(rep, K).rep
    if is_flat(rep) and is_stable(rep) and not validate_rep(result):
        raise AssertionError("quotient of a flat stable representation failed to be flat and stable")
    return result


# Parabolic points (flag presentation)


@dataclass
class ParabolicPoint:
    """A representation with a flag of subspaces at each vertex.

    ``flags[v]`` is a list of matrices whose column spans are strictly
    increasing.  Unit steps give full flags; a single entry is the pair
    presentation.
    """

    rep: FramedRep
    flags: dict[str, list[np.ndarray]]

    def __post_init__(self):
        q = self.rep.quiver
        unknown = set(self.flags) - set(q.vertices)
        if unknown:
            raise ValueError(f"flags at unknown vertices {sorted(unknown)}")
        self.flags = {v: [la.qarray(m) for m in self.flags.get(v, [])] for v in q.vertices}

    def steps(self, v: str) -> list[int]:
        return [la.rank(m) for m in self.flags[v]]

    @property
    def k(self) -> np.ndarray:
        return np.array([(self.steps(v) or [0])[-1] for v in self.rep.quiver.vertices], dtype=np.int64)

    def is_full(self) -> bool:
        return all(s == list(range(1, len(s) + 1)) for s in map(self.steps, self.rep.quiver.vertices))

    def top(self, v: str) -> np.ndarray:
        return self.flags[v][-1] if self.flags[v] else la.zeros(self.rep.dim(v), 0)

    def chain_dims(self) -> list[np.ndarray]:
        """Dimension vectors of the chain obtained by quotienting vertex by vertex."""
        q = self.rep.quiver
        cur = self.rep.d.copy()
        out = [cur.copy()]
        for v in q.vertices:
            prev = 0
            for s in self.steps(v):
                cur[q.index(v)] -= s - prev
                prev = s
                out.append(cur.copy())
        return out


def validate_point(pt: ParabolicPoint) -> Validation:
    report = validate_rep(pt.rep)
    for v in pt.rep.quiver.vertices:
        flag = pt.flags[v]
        for m in flag:
            report.check(m.shape[0] == pt.rep.dim(v), f"flag at {v} lives in the wrong space")
        if any(m.shape[0] != pt.rep.dim(v) for m in flag):
            continue
        steps = pt.steps(v)
        report.check(all(a < b for a, b in zip([0] + steps, steps)), f"flag at {v} is not strictly increasing")
        for small, big in zip(flag, flag[1:]):
            report.check(la.span_contains(big, small), f"flag at {v} is not nested")
        report.check(la.span_contains(hom_basis(pt.rep, v), pt.top(v)),
                     f"flag at {v} is not killed by the maps out of {v}")
    return report


def pminus(pt: ParabolicPoint) -> FramedRep:
    return pt.rep


def pplus(pt: ParabolicPoint) -> FramedRep:
    return quotient_by_K(pt.rep, {v: pt.top(v) for v in pt.rep.quiver.vertices})


def flag_P_minus_v(pt: ParabolicPoint, v: str) -> ParabolicPoint:
    """Forget the largest subspace of the flag at v."""
    if not pt.flags[v]:
        raise ValueError(f"empty flag at {v}")
    flags = dict(pt.flags)
    flags[v] = flags[v][:-1]
    return ParabolicPoint(pt.rep, flags)


def flag_P_plus_v(pt: ParabolicPoint, v: str) -> ParabolicPoint:
    """Quotient by the smallest subspace of the flag at v and push the rest of the flag down."""
    if not pt.flags[v]:
        raise ValueError(f"empty flag at {v}")
    quo = quotient_data(pt.rep, {v: pt.flags[v][0]})
    flags = {w: [la.matmul(quo.pi[w], m) for m in ms] for w, ms in pt.flags.items()}
    flags[v] = flags[v][1:]
    return ParabolicPoint(quo.rep, flags)


# Chains (quotient presentation)


@dataclass
class ParabolicChainPoint:
    """Representations D^(0), ..., D^(l) with surjections pi[m]: D^(m) -> D^(m+1)."""

    levels: list[FramedRep]
    pi: list[dict[str, np.ndarray]]

    def __post_init__(self):
        if len(self.pi) != len(self.levels) - 1:
            raise ValueError("need exactly one surjection between consecutive levels")
        self.pi = [{v: la.qarray(m, (lo.dim(v), hi.dim(v))) if np.size(m) == 0 else la.qarray(m)
                    for v, m in step.items()}
                   for step, hi, lo in zip(self.pi, self.levels, self.levels[1:])]

    @property
    def quiver(self) -> Quiver:
        return self.levels[0].quiver

    @property
    def ell(self) -> int:
        return len(self.pi)

    def composite(self, start: int = 0, stop: int | None = None) -> dict[str, np.ndarray]:
        """The surjection D^(start) -> D^(stop) at every vertex."""
        stop = self.ell if stop is None else stop
        out = {}
        for v in self.quiver.vertices:
            m = la.identity(self.levels[start].dim(v))
            for step in self.pi[start:stop]:
                m = la.matmul(step[v], m)
            out[v] = m
        return out

    def kernel(self, stop: int | None = None) -> dict[str, np.ndarray]:
        return {v: la.kernel_basis(m) for v, m in self.composite(0, stop).items()}


def validate_chain(ch: ParabolicChainPoint) -> Validation:
    q = ch.quiver
    report = Validation()
    for m, level in enumerate(ch.levels):
        report.check(level.quiver == q, f"level {m} is over a different quiver")
        report.check(np.array_equal(level.f, ch.levels[0].f), f"level {m} has a different framing")
        for msg in validate_rep(level).failures:
            report.failures.append(f"level {m}: {msg}")
    if not report.ok:
        return report
    for m, (hi, lo, step) in enumerate(zip(ch.levels, ch.levels[1:], ch.pi)):
        tag = f"step {m}"
        if set(step) != set(q.vertices):
            report.failures.append(f"{tag}: surjection missing at some vertex")
            continue
        for v in q.vertices:
            p = step[v]
            report.check(p.shape == (lo.dim(v), hi.dim(v)), f"{tag}: pi at {v} has the wrong shape")
        if not report.ok:
            return report
        for v in q.vertices:
            report.check(la.rank(step[v]) == lo.dim(v), f"{tag}: pi at {v} is not surjective")
            report.check(la.equal(la.matmul(step[v], hi.i[v]), lo.i[v]), f"{tag}: i does not commute at {v}")
            report.check(la.equal(hi.j[v], la.matmul(lo.j[v], step[v])), f"{tag}: j does not commute at {v}")
        for a in q.arrows:
            pu, pw = step[a.out], step[a.in_]
            report.check(la.equal(la.matmul(pw, hi.A[a.id]), la.matmul(lo.A[a.id], pu)),
                         f"{tag}: A[{a.id}] does not commute")
            report.check(la.equal(la.matmul(pu, hi.B[a.id]), la.matmul(lo.B[a.id], pw)),
                         f"{tag}: B[{a.id}] does not commute")
    if report.ok:
        top = ch.levels[0]
        for v, K in ch.kernel().items():
            report.check(la.span_contains(hom_basis(top, v), K),
                         f"composite kernel at {v} is not killed by the maps out of {v}")
    return report


def _require_valid(ch: ParabolicChainPoint) -> ParabolicChainPoint:
    report = validate_chain(ch)
    if not report:
        raise AssertionError("; ".join(report.failures))
    return ch


def chain_from_flag(pt: ParabolicPoint) -> ParabolicChainPoint:
    """Quotient by the flag one subspace at a time, vertex by vertex in quiver order."""
    q = pt.rep.quiver
    kernels = {v: la.zeros(pt.rep.dim(v), 0) for v in q.vertices}
    stages = [quotient_data(pt.rep, kernels)]
    for v in q.vertices:
        for sub in pt.flags[v]:
            kernels = dict(kernels)
            kernels[v] = sub
            stages.append(quotient_data(pt.rep, kernels))
    levels = [s.rep for s in stages]
    pi = [{v: la.matmul(lo.pi[v], hi.section[v]) for v in q.vertices}
          for hi, lo in zip(stages, stages[1:])]
    return ParabolicChainPoint(levels, pi)


def flag_from_chain(ch: ParabolicChainPoint) -> ParabolicPoint:
    q = ch.quiver
    flags: dict[str, list[np.ndarray]] = {v: [] for v in q.vertices}
    for stop in range(1, ch.ell + 1):
        for v, K in ch.kernel(stop).items():
            prev = flags[v][-1].shape[1] if flags[v] else 0
            if K.shape[1] > prev:
                flags[v].append(K)
    return ParabolicPoint(ch.levels[0], flags)


def forget_first(ch: ParabolicChainPoint) -> ParabolicChainPoint:
    if ch.ell == 0:
        raise ValueError("cannot shorten a chain of length 0")
    return _require_valid(ParabolicChainPoint(ch.levels[1:], ch.pi[1:]))


def forget_last(ch: ParabolicChainPoint) -> ParabolicChainPoint:
    if ch.ell == 0:
        raise ValueError("cannot shorten a chain of length 0")
    return _require_valid(ParabolicChainPoint(ch.levels[:-1], ch.pi[:-1]))


def _as_chain(x) -> ParabolicChainPoint:
    if isinstance(x, ParabolicChainPoint):
        return x
    if isinstance(x, ParabolicPoint):
        return chain_from_flag(x)
    if isinstance(x, FramedRep):
        return ParabolicChainPoint([x], [])
    raise TypeError(f"expected a representation, point or chain, got {type(x).__name__}")


def fiber_dims_at(x, v: str) -> tuple[int | None, int | None]:
    """Fibres of the one-step maps over a chain x.

    Returns the dimensions of (a) the lines in ker M1_v / K_v, the fibre
    over x of the map forgetting a new last step at v, and (b) the
    hyperplanes in ker M2~_v / im M1^_v, the fibre over x of the map
    forgetting a new first step at v.  ``None`` marks an empty fibre.
    """
    ch = _as_chain(x)
    q = ch.quiver
    q.index(v)
    top, bottom = ch.levels[0], ch.levels[-1]
    K = ch.kernel()[v]
    lines = hom_basis(top, v).shape[1] - K.shape[1]
    down = ch.composite()
    section = {w: la.solve(down[w], la.identity(bottom.dim(w))) for w in q.vertices}
    blocks = []
    for kind, e, w in _xi_slots(q, v):
        blocks.append(la.matmul(-top.B[e], section[w]) if kind == "out"
                      else la.matmul(top.A[e], section[w]))
    m2_lift = la.hstack(blocks + [top.i[v]], rows=top.dim(v))
    hyper = la.nullity(m2_lift) - la.rank(m1(bottom, v))
    return (lines - 1 if lines > 0 else None, hyper - 1 if hyper > 0 else None)


# Tangent complex


@dataclass
class TangentReport:
    rep_dim: int
    lie_dim: int
    mu_dim: int
    rank_j: int
    rank_dmu: int
    complex_ok: bool
    h_dim: int
    formula_dim: int

    @property
    def j_injective(self) -> bool:
        return self.rank_j == self.lie_dim

    @property
    def dmu_surjective(self) -> bool:
        return self.rank_dmu == self.mu_dim

    @property
    def ok(self) -> bool:
        return self.complex_ok and self.j_injective and self.dmu_surjective and self.h_dim == self.formula_dim


def adapted_basis(flag: list[np.ndarray], n: int) -> np.ndarray:
    """Invertible matrix whose first columns run through the flag, then a complement."""
    basis = la.zeros(n, 0)
    for sub in flag:
        for col in la.colspace_basis(sub).T:
            col = col.reshape(n, 1)
            if not la.span_contains(basis, col):
                basis = la.hstack([basis, col])
    return la.hstack([basis, la.complement_basis(basis)])


def _lie_mask(steps: list[int], n: int) -> list[int]:
    """Column-major indices (c*n + r) of the entries allowed in the flag stabiliser."""
    out = []
    for c in range(n):
        level = next((s for s in steps if c < s), n)
        out.extend(c * n + r for r in range(level))
    return out


def _assemble(row_sizes, col_sizes, blocks) -> np.ndarray:
    roff = np.concatenate([[0], np.cumsum(row_sizes)]).astype(int)
    coff = np.concatenate([[0], np.cumsum(col_sizes)]).astype(int)
    out = la.zeros(int(roff[-1]), int(coff[-1]))
    for (r, c), m in blocks:
        if m.size:
            out[roff[r]:roff[r + 1], coff[c]:coff[c + 1]] += m
    return out


def tangent_matrices(pt: ParabolicPoint):
    """The maps jhat: Lie(P) -> Rep^k and dmu: Rep^k -> sum_v Hom(D^_v, D_v).

    Everything is written in bases adapted to the flags, so that the kernel
    K_v is spanned by the first k_v coordinates.
    """
    q = pt.rep.quiver
    T = {v: adapted_basis(pt.flags[v], pt.rep.dim(v)) for v in q.vertices}
    rep = conjugate(pt.rep, {v: la.inverse(T[v]) for v in q.vertices})
    d = {v: rep.dim(v) for v in q.vertices}
    kk = {v: int(pt.k[q.index(v)]) for v in q.vertices}
    dh = {v: d[v] - kk[v] for v in q.vertices}
    fv = {v: rep.fdim(v) for v in q.vertices}
    proj = {v: la.hstack([la.zeros(dh[v], kk[v]), la.identity(dh[v])]) for v in q.vertices}
    sec = {v: la.vstack([la.zeros(kk[v], dh[v]), la.identity(dh[v])]) for v in q.vertices}
    eye = {v: la.identity(d[v]) for v in q.vertices}
    eyeh = {v: la.identity(dh[v]) for v in q.vertices}
    X = {a.id: la.matmul(rep.A[a.id], sec[a.out]) for a in q.arrows}
    Y = {a.id: la.matmul(rep.B[a.id], sec[a.in_]) for a in q.arrows}
    ia = rep.i
    jb = {v: la.matmul(rep.j[v], sec[v]) for v in q.vertices}
    op = la.vec_operator

    # Rep^k coordinates: A^_e, B^_e for each arrow, then i_v, j^_v for each vertex.
    n_arr = len(q.arrows)
    vidx = {v: t for t, v in enumerate(q.vertices)}
    rep_sizes = ([d[a.in_] * dh[a.out] for a in q.arrows] + [d[a.out] * dh[a.in_] for a in q.arrows]
                 + [d[v] * fv[v] for v in q.vertices] + [fv[v] * dh[v] for v in q.vertices])
    col_A = {a.id: t for t, a in enumerate(q.arrows)}
    col_B = {a.id: n_arr + t for t, a in enumerate(q.arrows)}
    col_i = {v: 2 * n_arr + vidx[v] for v in q.vertices}
    col_j = {v: 2 * n_arr + q.n + vidx[v] for v in q.vertices}

    gl_sizes = [d[v] ** 2 for v in q.vertices]
    jblocks = []
    for a in q.arrows:
        u, w = a.out, a.in_
        jblocks.append(((col_A[a.id], vidx[w]), op(eye[w], X[a.id])))
        jblocks.append(((col_A[a.id], vidx[u]), -op(la.matmul(X[a.id], proj[u]), sec[u])))
        jblocks.append(((col_B[a.id], vidx[u]), op(eye[u], Y[a.id])))
        jblocks.append(((col_B[a.id], vidx[w]), -op(la.matmul(Y[a.id], proj[w]), sec[w])))
    for v in q.vertices:
        jblocks.append(((col_i[v], vidx[v]), op(eye[v], ia[v])))
        jblocks.append(((col_j[v], vidx[v]), -op(la.matmul(jb[v], proj[v]), sec[v])))
    j_full = _assemble(rep_sizes, gl_sizes, jblocks)
    keep, off = [], 0
    for v in q.vertices:
        steps = [s for s in pt.steps(v)]
        keep.extend(off + t for t in _lie_mask(steps, d[v]))
        off += d[v] ** 2
    jmat = j_full[:, keep]

    mu_sizes = [d[v] * dh[v] for v in q.vertices]
    mblocks = []
    for a in q.arrows:
        u, w = a.out, a.in_
        mblocks.append(((vidx[w], col_A[a.id]), op(eye[w], la.matmul(proj[u], Y[a.id]))))
        mblocks.append(((vidx[w], col_B[a.id]), op(la.matmul(X[a.id], proj[u]), eyeh[w])))
        mblocks.append(((vidx[u], col_A[a.id]), -op(la.matmul(Y[a.id], proj[w]), eyeh[u])))
        mblocks.append(((vidx[u], col_B[a.id]), -op(eye[u], la.matmul(proj[w], X[a.id]))))
    for v in q.vertices:
        mblocks.append(((vidx[v], col_i[v]), op(eye[v], jb[v])))
        mblocks.append(((vidx[v], col_j[v]), op(ia[v], eyeh[v])))
    dmu = _assemble(mu_sizes, rep_sizes, mblocks)
    return jmat, dmu


def tangent_complex(pt: ParabolicPoint) -> TangentReport:
    """Ranks of Lie(P) -> Rep^k -> sum_v Hom(D^_v, D_v) and the middle cohomology."""
    jmat, dmu = tangent_matrices(pt)
    composite = la.matmul(dmu, jmat) if jmat.shape[1] else la.zeros(dmu.shape[0], 0)
    rank_j, rank_dmu = la.rank(jmat), la.rank(dmu)
    rep_dim = dmu.shape[1]
    q = pt.rep.quiver
    return TangentReport(
        rep_dim=rep_dim,
        lie_dim=jmat.shape[1],
        mu_dim=dmu.shape[0],
        rank_j=rank_j,
        rank_dmu=rank_dmu,
        complex_ok=la.is_zero(composite),
        h_dim=rep_dim - rank_j - rank_dmu,
        formula_dim=dims.dim_parabolic_chain(q, pt.chain_dims(), pt.rep.f),
    )


# Two-step block form


@dataclass
class BlockForm:
    """A_e, B_e of D^(0) in a basis split as D^(2) + K' + K (in that order)."""

    sizes: dict[str, tuple[int, int, int]]
    A: dict[str, np.ndarray]
    B: dict[str, np.ndarray]

    def _blocks(self, m, src, dst):
        rs, cs = self.sizes[dst], self.sizes[src]
        r0, r1 = rs[0], rs[0] + rs[1]
        c0, c1 = cs[0], cs[0] + cs[1]
        return m, (r0, r1), (c0, c1)

    def pattern_ok(self, quiver: Quiver) -> bool:
        for a in quiver.arrows:
            for m, src, dst in ((self.A[a.id], a.out, a.in_), (self.B[a.id], a.in_, a.out)):
                m, (r0, r1), (c0, c1) = self._blocks(m, src, dst)
                if not la.is_zero(m[:, c1:]) or not la.is_zero(m[:r1, c0:c1]):
                    return False
        return True

    def star(self, quiver: Quiver) -> dict[str, np.ndarray]:
        out = {}
        for a in quiver.arrows:
            for name, m, src, dst in (("A:" + a.id, self.A[a.id], a.out, a.in_),
                                      ("B:" + a.id, self.B[a.id], a.in_, a.out)):
                m, (r0, r1), (c0, c1) = self._blocks(m, src, dst)
                out[name] = m[r1:, c0:c1]
        return out


def block_form(ch: ParabolicChainPoint) -> BlockForm:
    if ch.ell != 2:
        raise ValueError("the block form needs a chain with exactly two steps")
    q = ch.quiver
    top = ch.levels[0]
    K = ch.kernel(1)
    Kc = ch.kernel(2)
    T, sizes = {}, {}
    for v in q.vertices:
        n = top.dim(v)
        inner = adapted_basis([K[v], Kc[v]], n)
        k, kc = K[v].shape[1], Kc[v].shape[1]
        # reorder to (complement, K' part, K part)
        T[v] = la.hstack([inner[:, kc:], inner[:, k:kc], inner[:, :k]])
        sizes[v] = (n - kc, kc - k, k)
    rep = conjugate(top, {v: la.inverse(T[v]) for v in q.vertices})
    return BlockForm(sizes, rep.A, rep.B)


def block_form_check(ch: ParabolicChainPoint) -> bool:
    """A_e, B_e vanish outside the first column block and the (K, K') block."""
    return block_form(ch).pattern_ok(ch.quiver)


def k_bound_holds(rep: FramedRep) -> bool:
    """Every flat stable representation has Hom-dimension at least k0[d]."""
    return leq(k0(rep.quiver, rep.d, rep.f), np.array(bn_stratum_of(rep)))
