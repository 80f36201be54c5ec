"""Seeded desk-scale run of the identity and property suite."""

from __future__ import annotations

import itertools
from collections.abc import Callable, Iterable
from dataclasses import dataclass

import numpy as np

from . import dims, gallery, reps, roots
from . import linalg as la
from .quiver import Arrow, Quiver, a1, cartan, jordan, k0


@dataclass
class CheckResult:
    name: str
    cases: int
    failures: int
    example: str = ""

    @property
    def ok(self) -> bool:
        return self.failures == 0


def random_quiver(rng: np.random.Generator, max_vertices: int = 4, max_mult: int = 3) -> Quiver:
    n = int(rng.integers(1, max_vertices + 1))
    verts = tuple(f"v{t}" for t in range(n))
    arrows = []
    for a, b in itertools.product(range(n), repeat=2):
        if rng.random() < 0.35:
            for m in range(int(rng.integers(1, max_mult + 1))):
                arrows.append(Arrow(f"e{a}_{b}_{m}", verts[a], verts[b]))
    return Quiver(verts, tuple(arrows))


def random_chain(rng: np.random.Generator, q: Quiver, top: int = 6):
    """Decreasing d0 >= d1 >= d2 with entries at most ``top``, and a framing."""
    d2 = rng.integers(0, top + 1, size=q.n)
    d1 = np.minimum(d2 + rng.integers(0, 3, size=q.n), top)
    d0 = np.minimum(d1 + rng.integers(0, 3, size=q.n), top)
    f = rng.integers(0, top + 1, size=q.n)
    return d0, d1, d2, f


def _run(name: str, cases: Iterable, check: Callable[..., bool]) -> CheckResult:
    n = bad = 0
    example = ""
    for case in cases:
        n += 1
        try:
            ok = check(*case)
        except Exception as exc:  # a crash counts as a failure of that case
            ok, example = False, f"{case!r}: {exc!r}"
        if not ok:
            bad += 1
            example = example or repr(case)
    return CheckResult(name, n, bad, example)


def _identities(q, d0, d1, d2, f) -> bool:
    k, kp = d0 - d1, d1 - d2
    pair = dims.dim_parabolic_pair(q, d0, k, f)
    m0, m1 = dims.dim_nakajima(q, d0, f), dims.dim_nakajima(q, d0 - k, f)
    r1, r2 = dims.excess(q, d0, d1, d2)
    chain = dims.dim_parabolic_chain(q, [d0, d1, d2], f)
    return all([
        2 * pair == m0 + m1 - 2 * dims.half_dim_defect(q, k),
        chain == pair + dims.dim_parabolic_pair(q, d1, kp, f) - dims.dim_nakajima(q, d1, f) + r1 - r2,
        np.array_equal(k0(q, d0 - k, f), k0(q, d0, f) - cartan(q) @ k),
        chain == dims.dim_parabolic_pair(q, d0, d0 - d2, f) + dims.flag_fiber_dim(q, [d0, d1, d2]),
        dims.is_lagrangian_support(q, k) == (2 * pair == m0 + m1),
    ])


def _nonempty_consistent(q, d, k, f) -> bool:
    if not roots.parabolic_nonempty(q, d, k, f):
        return True
    smaller = all(roots.bn_nonempty(q, d, f, k - q.delta(v))
                  for v in q.vertices if k[q.index(v)] > 0)
    return smaller and dims.dim_parabolic_pair(q, d, k, f) >= 0


def _tits_form(g: roots.RootGraph, alpha) -> int:
    a = np.asarray(alpha)
    return int(a @ g.cartan() @ a) // 2


def _gallery_point(fam_seed) -> bool:
    fam, seed = fam_seed
    pt = gallery.random_gallery_point(fam, seed, max_size=5)
    if not reps.validate_point(pt) or not reps.k_bound_holds(pt.rep):
        return False
    quo = reps.pplus(pt)
    ch = reps.chain_from_flag(pt)
    back = reps.flag_from_chain(ch)
    same = all(len(a) == len(b) and all(la.same_span(x, y) for x, y in zip(a, b))
               for a, b in zip(back.flags.values(), pt.flags.values()))
    return bool(reps.validate_rep(quo)) and bool(reps.validate_chain(ch)) and same


def run(seed: int = 0) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    quivers = [random_quiver(rng) for _ in range(300)]
    chains = [(q, *random_chain(rng, q)) for q in quivers]
    results = [_run("dimension identities", chains, _identities)]

    samples = []
    for q in quivers[:150]:
        d = rng.integers(0, 5, size=q.n)
        k = np.minimum(rng.integers(0, 3, size=q.n), d)
        samples.append((q, d, k, rng.integers(0, 4, size=q.n)))
    results.append(_run("nonemptiness monotone and dimension >= 0", samples, _nonempty_consistent))

    J, A = jordan(), a1()
    results.append(_run(
        "hilbert scheme closed forms",
        [(d, k) for d in range(1, 11) for k in range(d + 1)],
        lambda d, k: dims.dim_bn(J, d, 1, k) == 2 * d - k * (k + 1)
        and roots.parabolic_nonempty(J, d, k, 1) == (2 * d >= k * (k + 1))))
    results.append(_run(
        "A1 closed forms",
        [(d, f) for f in range(9) for d in range(f + 3)],
        lambda d, f: roots.nakajima_nonempty(A, d, f) == (d <= f)
        and (d > f or dims.dim_nakajima(A, d, f) == 2 * d * (f - d))))

    root_cases = [(g, alpha) for g in (_path_graph(3), _d4_graph())
                  for alpha in itertools.product(range(3), repeat=len(g.vertices)) if any(alpha)]
    results.append(_run("Dynkin roots match the Tits form", root_cases,
                        lambda g, alpha: roots.is_positive_root(g, alpha).is_root == (_tits_form(g, alpha) == 1)))

    results.append(_run(
        "monomial Hom dimension equals corner count",
        [(lam,) for n in range(1, 7) for lam in gallery.partitions(n)],
        lambda lam: reps.bn_stratum_of(gallery.hilb_fixed_point(lam)) == (len(gallery.corners(lam)),)))

    fam_seeds = [(fam, int(s)) for fam in gallery.FAMILIES for s in rng.integers(0, 2**31, size=6)]
    results.append(_run("gallery points, quotients and chain round trips",
                        [(fs,) for fs in fam_seeds], _gallery_point))
    results.append(_run(
        "tangent complex on gallery points",
        [(fs,) for fs in fam_seeds[::2]],
        lambda fs: reps.tangent_complex(gallery.random_gallery_point(*fs, max_size=4)).ok))
    return results


def _path_graph(n: int) -> roots.RootGraph:
    m = np.zeros((n, n), dtype=np.int64)
    for t in range(n - 1):
        m[t, t + 1] = m[t + 1, t] = 1
    return roots.RootGraph(tuple(str(t) for t in range(n)), m, np.zeros(n, dtype=np.int64))


def _d4_graph() -> roots.RootGraph:
    m = np.zeros((4, 4), dtype=np.int64)
    for t in (1, 2, 3):
        m[0, t] = m[t, 0] = 1
    return roots.RootGraph(("c", "x", "y", "z"), m, np.zeros(4, dtype=np.int64))
