"""Exact linear algebra over the rationals.

Matrices are numpy arrays of ``dtype=object`` whose entries are Python
``int`` or ``fractions.Fraction``.  Integral entries are kept as ``int``
so that the common 0/1 matrices stay cheap.  Shapes with a zero dimension
are legal everywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

import numpy as np


def rational(x) -> int | Fraction:
    """Canonical form of a rational entry: ``int`` when integral."""
    if isinstance(x, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, str):
        return rational(Fraction(x.strip()))
    if isinstance(x, float):
        if not x.is_integer():
            raise TypeError(f"refusing inexact entry {x!r}")
        return int(x)
    raise TypeError(f"not a rational: {x!r}")


def qarray(data, shape: tuple[int, int] | None = None) -> np.ndarray:
    """Build an exact matrix from nested sequences (or reshape a flat one)."""
    if isinstance(data, np.ndarray) and data.dtype != object:
        data = data.tolist()
    arr = np.array(data, dtype=object)
    if shape is not None:
        arr = arr.reshape(shape)
    if arr.ndim == 1 and shape is None and arr.size == 0:
        arr = arr.reshape(0, 0)
    if arr.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    out = np.empty(arr.shape, dtype=object)
    for idx, x in np.ndenumerate(arr):
        out[idx] = rational(x)
    return out


def zeros(rows: int, cols: int) -> np.ndarray:
    out = np.empty((rows, cols), dtype=object)
    out.fill(0)
    return out


def identity(n: int) -> np.ndarray:
    out = zeros(n, n)
    for t in range(n):
        out[t, t] = 1
    return out


def unit(n: int, t: int) -> np.ndarray:
    """Standard basis column e_t in Q^n."""
    out = zeros(n, 1)
    out[t, 0] = 1
    return out


def normalize(m: np.ndarray) -> np.ndarray:
    out = np.empty(m.shape, dtype=object)
    for idx, x in np.ndenumerate(m):
        out[idx] = rational(x)
    return out


def matmul(*ms: np.ndarray) -> np.ndarray:
    out = ms[0]
    for m in ms[1:]:
        if out.shape[1] != m.shape[0]:
            raise ValueError(f"shape mismatch {out.shape} @ {m.shape}")
        out = zeros(out.shape[0], m.shape[1]) if out.shape[1] == 0 else out @ m
    return normalize(out)


def is_zero(m: np.ndarray) -> bool:
    return all(x == 0 for x in m.flat)


def equal(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


def hstack(ms, rows: int | None = None) -> np.ndarray:
    ms = list(ms)
    if not ms:
        return zeros(rows or 0, 0)
    return np.concatenate(ms, axis=1)


def vstack(ms, cols: int | None = None) -> np.ndarray:
    ms = list(ms)
    if not ms:
        return zeros(0, cols or 0)
    return np.concatenate(ms, axis=0)


def _integer_rows(m: np.ndarray) -> list[list[int]]:
    rows = []
    for row in m.tolist():
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        rows.append([int(x * den) for x in row])
    return rows


def rank(m: np.ndarray) -> int:
    """Rank by fraction-free elimination on integer rows."""
    rows = [r for r in _integer_rows(m) if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        p = prow[c]
        for i in range(r + 1, len(rows)):
            a = rows[i][c]
            if a:
                new = [p * x - a * y for x, y in zip(rows[i], prow)]
                g = 0
                for x in new:
                    if x:
                        g = gcd(g, x)
                        if g == 1:
                            break
                rows[i] = [x // g for x in new] if g > 1 else new
        r += 1
        if r == len(rows):
            break
    return r


def rref(m: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    a = [[Fraction(x) for x in row] for row in m.tolist()]
    nrows, ncols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        if p != 1:
            a[r] = [x / p for x in a[r]]
        prow = a[r]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], prow)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return qarray(a, (nrows, ncols)), pivots


def kernel_basis(m: np.ndarray) -> np.ndarray:
    """Columns form the canonical basis of ker m (from the reduced echelon form)."""
    nrows, ncols = m.shape
    red, pivots = rref(m)
    free = [c for c in range(ncols) if c not in set(pivots)]
    out = zeros(ncols, len(free))
    for t, fc in enumerate(free):
        out[fc, t] = 1
        for i, pc in enumerate(pivots):
            out[pc, t] = rational(-red[i, fc])
    return out


def colspace_basis(m: np.ndarray) -> np.ndarray:
    """Canonical basis of the column span: nonzero rows of rref(m^T), transposed."""
    red, pivots = rref(m.T)
    return normalize(red[: len(pivots)].T) if pivots else zeros(m.shape[0], 0)


def nullity(m: np.ndarray) -> int:
    return m.shape[1] - rank(m)


def span_contains(big: np.ndarray, small: np.ndarray) -> bool:
    """Is colspan(small) inside colspan(big)?"""
    if small.shape[1] == 0:
        return True
    return rank(hstack([big, small])) == rank(big)


def same_span(a: np.ndarray, b: np.ndarray) -> bool:
    return span_contains(a, b) and span_contains(b, a)


def intersect(*spaces: np.ndarray) -> np.ndarray:
    """Basis of the intersection of column spans (all in the same ambient space)."""
    cur = colspace_basis(spaces[0])
    for other in spaces[1:]:
        other = colspace_basis(other)
        if cur.shape[1] == 0 or other.shape[1] == 0:
            return zeros(cur.shape[0], 0)
        ker = kernel_basis(hstack([cur, -other]))
        cur = colspace_basis(matmul(cur, ker[: cur.shape[1]]))
    return cur


def solve(m: np.ndarray, b: np.ndarray) -> np.ndarray | None:
    """One solution x of m x = b (b may have several columns), or None."""
    nrows, ncols = m.shape
    red, pivots = rref(hstack([m, b]))
    if any(p >= ncols for p in pivots):
        return None
    x = zeros(ncols, b.shape[1])
    for i, pc in enumerate(pivots):
        x[pc] = red[i, ncols:]
    return normalize(x)


def inverse(m: np.ndarray) -> np.ndarray:
    n = m.shape[0]
    if m.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    x = solve(m, identity(n))
    if x is None or rank(m) != n:
        raise ValueError("matrix is singular")
    return x


def complement_basis(sub: np.ndarray) -> np.ndarray:
    """Standard basis vectors spanning a complement of colspan(sub).

    These are the coordinates that are not pivots of the reduced echelon
    form of sub^T, which makes the choice canonical.
    """
    n = sub.shape[0]
    _, pivots = rref(sub.T)
    rest = [c for c in range(n) if c not in set(pivots)]
    out = zeros(n, len(rest))
    for t, c in enumerate(rest):
        out[c, t] = 1
    return out


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if 0 in a.shape or 0 in b.shape:
        return zeros(a.shape[0] * b.shape[0], a.shape[1] * b.shape[1])
    return np.kron(a, b)


def vec_operator(left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """Matrix of M -> left M right on column-major vectorisations."""
    return kron(right.T, left)


def rational_str(x) -> str:
    x = rational(x)
    return str(x) if isinstance(x, int) else f"{x.numerator}/{x.denominator}"


def to_strings(m: np.ndarray) -> list[list[str]]:
    return [[rational_str(x) for x in row] for row in m.tolist()]
