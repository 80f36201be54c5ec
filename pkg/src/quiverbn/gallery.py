"""Explicit points with known strata, used as oracles.

Random points are drawn with numpy's ``Generator`` (PCG64 bit generator)
seeded by the caller, so every draw is reproducible from its seed.
"""

from __future__ import annotations

from itertools import permutations

import numpy as np

from . import linalg as la
from .quiver import a1, a_n, jordan
from .reps import FramedRep, ParabolicPoint, conjugate, hom_basis


def partition_cells(lam) -> list[tuple[int, int]]:
    """Cells (a, b) with a < lam[b], ordered by (b, a)."""
    lam = list(lam)
    if any(x <= 0 for x in lam) or any(x < y for x, y in zip(lam, lam[1:])):
        raise ValueError(f"not a partition: {lam}")
    return [(a, b) for b, row in enumerate(lam) for a in range(row)]


def corners(lam) -> list[tuple[int, int]]:
    cells = set(partition_cells(lam))
    return [c for c in partition_cells(lam) if (c[0] + 1, c[1]) not in cells and (c[0], c[1] + 1) not in cells]


def partitions(n: int, largest: int | None = None):
    """Partitions of n as non-increasing tuples."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def hilb_fixed_point(lam) -> FramedRep:
    """The monomial ideal of shape lam as a point of the Jordan quiver variety with f = 1."""
    cells = partition_cells(lam)
    pos = {c: t for t, c in enumerate(cells)}
    n = len(cells)
    X, Y = la.zeros(n, n), la.zeros(n, n)
    for (a, b), t in pos.items():
        if (a + 1, b) in pos:
            X[pos[(a + 1, b)], t] = 1
        if (a, b + 1) in pos:
            Y[pos[(a, b + 1)], t] = 1
    i = la.zeros(n, 1)
    if n:
        i[pos[(0, 0)], 0] = 1
    return FramedRep(jordan(), [n], [1], A={"x": X}, B={"x": Y}, i={"0": i})


def corner_flag_point(lam, order) -> ParabolicPoint:
    """Monomial point with the full flag spanned by the listed corners, in order."""
    rep = hilb_fixed_point(lam)
    pos = {c: t for t, c in enumerate(partition_cells(lam))}
    n = len(pos)
    cols = [la.unit(n, pos[tuple(c)]) for c in order]
    return ParabolicPoint(rep, {"0": [la.hstack(cols[: t + 1]) for t in range(len(cols))]})


def corner_flag_points(lam, k: int):
    """Every full flag of length k built from ordered choices of corner coordinates."""
    for order in permutations(corners(lam), k):
        yield corner_flag_point(lam, order)


def hilb_distinct_points(points) -> FramedRep:
    """Ideal of n distinct points (x_t, y_t) in the plane."""
    pts = [(la.rational(x), la.rational(y)) for x, y in points]
    if len(set(pts)) != len(pts):
        raise ValueError("points must be distinct")
    n = len(pts)
    X, Y = la.zeros(n, n), la.zeros(n, n)
    for t, (x, y) in enumerate(pts):
        X[t, t], Y[t, t] = x, y
    i = la.qarray([[1]] * n, (n, 1))
    return FramedRep(jordan(), [n], [1], A={"x": X}, B={"x": Y}, i={"0": i})


def a1_point(d: int, f: int, k: int) -> ParabolicPoint:
    """A_1 point in stratum k with the full flag on the first k coordinates.

    i = [I_d | 0] and j has rank d - k with image inside ker i.
    """
    if not (max(0, 2 * d - f) <= k <= d <= f):
        raise ValueError("need max(0, 2d - f) <= k <= d <= f")
    i = la.hstack([la.identity(d), la.zeros(d, f - d)])
    j = la.zeros(f, d)
    for t in range(d - k):
        j[d + t, k + t] = 1
    rep = FramedRep(a1(), [d], [f], i={"1": i}, j={"1": j})
    return ParabolicPoint(rep, {"1": [la.hstack([la.unit(d, s) for s in range(t + 1)]) for t in range(k)]})


def an_flag_point(d, f: int) -> FramedRep:
    """Equioriented A_n point built from coordinate projections, framed at vertex 1."""
    d = [int(x) for x in d]
    n = len(d)
    if not all(x >= y for x, y in zip([f] + d, d + [0])) or d[-1] < 0:
        raise ValueError("need f >= d_1 >= ... >= d_n >= 0")
    q = a_n(n)
    A = {f"a{m}": la.hstack([la.identity(d[m]), la.zeros(d[m], d[m - 1] - d[m])])
         for m in range(1, n)}
    i = {"1": la.hstack([la.identity(d[0]), la.zeros(d[0], f - d[0])])}
    return FramedRep(q, d, [f] + [0] * (n - 1), A=A, i=i)


# Random points


FAMILIES = ("hilb_monomial", "hilb_distinct", "a1", "an")


def _random_gl(rng: np.random.Generator, n: int) -> np.ndarray:
    while True:
        g = la.qarray(rng.integers(-2, 3, size=(n, n)).tolist(), (n, n))
        if la.rank(g) == n:
            return g


def _random_flag(rng: np.random.Generator, space: np.ndarray, k: int) -> list[np.ndarray]:
    """A random full flag of length k inside colspan(space) (k <= its dimension)."""
    r = space.shape[1]
    while True:
        coeffs = la.qarray(rng.integers(-3, 4, size=(r, k)).tolist(), (r, k))
        gens = la.matmul(space, coeffs)
        if la.rank(gens) == k:
            return [gens[:, : t + 1] for t in range(k)]


def _random_partition(rng: np.random.Generator, n: int) -> tuple[int, ...]:
    parts = list(partitions(n))
    return parts[int(rng.integers(len(parts)))]


def random_gallery_point(family: str, seed: int, max_size: int = 6) -> ParabolicPoint:
    """A random flat stable point of the named family with a random flag inside its Hom space.

    The representation is also conjugated by a random integer matrix, so
    the data is not in coordinate position.
    """
    rng = np.random.default_rng(seed)
    if family == "hilb_monomial":
        rep = hilb_fixed_point(_random_partition(rng, int(rng.integers(1, max_size + 1))))
    elif family == "hilb_distinct":
        n = int(rng.integers(1, max_size + 1))
        pool = [(x, y) for x in range(-2, 3) for y in range(-2, 3)]
        picks = rng.choice(len(pool), size=n, replace=False)
        rep = hilb_distinct_points([pool[t] for t in picks])
    elif family == "a1":
        f = int(rng.integers(1, max_size + 1))
        d = int(rng.integers(0, f + 1))
        k = int(rng.integers(max(0, 2 * d - f), d + 1))
        rep = a1_point(d, f, k).rep
    elif family == "an":
        n = int(rng.integers(1, 4))
        f = int(rng.integers(1, max_size + 1))
        d = sorted((int(x) for x in rng.integers(0, f + 1, size=n)), reverse=True)
        rep = an_flag_point(d, f)
    else:
        raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")
    rep = conjugate(rep, {v: _random_gl(rng, rep.dim(v)) for v in rep.quiver.vertices})
    flags = {}
    for v in rep.quiver.vertices:
        hom = hom_basis(rep, v)
        k = int(rng.integers(0, hom.shape[1] + 1))
        flags[v] = _random_flag(rng, hom, k)
    return ParabolicPoint(rep, flags)

