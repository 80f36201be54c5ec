"""Quivers, dimension vectors and the integer vector calculus built on them."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

VectorLike = "Mapping[str, int] | Iterable[int] | int | np.ndarray"


class Arrow(NamedTuple):
    id: str
    out: str
    in_: str


@dataclass(frozen=True)
class Quiver:
    """A finite quiver. Loops and parallel arrows are allowed.

    ``framing`` lists the vertices that play the role of framing vertices
    (only set by :func:`framed` and :func:`repetition`).
    """

    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...] = ()
    framing: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        verts = tuple(str(v) for v in self.vertices)
        arrows = tuple(Arrow(str(a[0]), str(a[1]), str(a[2])) for a in self.arrows)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "arrows", arrows)
        object.__setattr__(self, "framing", frozenset(self.framing))
        if len(set(verts)) != len(verts):
            raise ValueError("duplicate vertex labels")
        ids = [a.id for a in arrows]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate arrow ids")
        known = set(verts)
        for a in arrows:
            if a.out not in known or a.in_ not in known:
                raise ValueError(f"arrow {a.id!r} has an unknown endpoint")
        if not self.framing <= known:
            raise ValueError("framing vertices must be vertices")

    @property
    def n(self) -> int:
        return len(self.vertices)

    def index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise ValueError(f"unknown vertex {v!r}") from None

    @property
    def _index(self) -> dict[str, int]:
        cached = self.__dict__.get("_index_cache")
        if cached is None:
            cached = {v: i for i, v in enumerate(self.vertices)}
            object.__setattr__(self, "_index_cache", cached)
        return cached

    def arrow(self, arrow_id: str) -> Arrow:
        for a in self.arrows:
            if a.id == arrow_id:
                return a
        raise ValueError(f"unknown arrow {arrow_id!r}")

    def arrows_out(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.out == v]

    def arrows_in(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.in_ == v]

    def vector(self, data) -> np.ndarray:
        """Coerce ``data`` to an integer vector indexed by ``self.vertices``.

        Accepts a mapping label -> int (missing labels are 0), a sequence in
        vertex order, an ndarray, or a bare int when the quiver has one vertex.
        """
        if isinstance(data, np.ndarray):
            out = data.astype(np.int64)
            if out.shape != (self.n,):
                raise ValueError(f"expected a vector of length {self.n}")
            return out
        if isinstance(data, Mapping):
            out = np.zeros(self.n, dtype=np.int64)
            for key, val in data.items():
                out[self.index(str(key))] = _as_int(val)
            return out
        if isinstance(data, (int, np.integer)) and not isinstance(data, bool):
            if self.n != 1:
                raise ValueError("a bare integer needs a one-vertex quiver")
            return np.array([int(data)], dtype=np.int64)
        vals = [_as_int(x) for x in data]
        if len(vals) != self.n:
            raise ValueError(f"expected a vector of length {self.n}, got {len(vals)}")
        return np.array(vals, dtype=np.int64)

    def labelled(self, vec) -> dict[str, int]:
        return {v: int(x) for v, x in zip(self.vertices, self.vector(vec))}

    def delta(self, v: str) -> np.ndarray:
        out = np.zeros(self.n, dtype=np.int64)
        out[self.index(v)] = 1
        return out


def _as_int(x) -> int:
    if isinstance(x, bool):
        raise ValueError("booleans are not dimension entries")
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, float) and x.is_integer():
        return int(x)
    raise ValueError(f"not an integer: {x!r}")


def arrow_count(q: Quiver, v: str, w: str) -> int:
    """Number of arrows v -> w."""
    q.index(v), q.index(w)
    return sum(1 for a in q.arrows if a.out == v and a.in_ == w)


def adjacency(q: Quiver) -> np.ndarray:
    """Matrix of arrow counts, entry (v, w) = |Q1(v, w)|."""
    m = np.zeros((q.n, q.n), dtype=np.int64)
    for a in q.arrows:
        m[q.index(a.out), q.index(a.in_)] += 1
    return m


def cartan(q: Quiver) -> np.ndarray:
    adj = adjacency(q)
    return 2 * np.eye(q.n, dtype=np.int64) - adj - adj.T


def k0(q: Quiver, d, f) -> np.ndarray:
    """The vector C d - f."""
    return cartan(q) @ q.vector(d) - q.vector(f)


def double(q: Quiver) -> Quiver:
    rev = [Arrow(a.id + "*", a.in_, a.out) for a in q.arrows]
    return Quiver(q.vertices, q.arrows + tuple(rev), q.framing)


def framing_label(v: str) -> str:
    return f"[{v}]"


def framed(q: Quiver) -> Quiver:
    """Add one framing vertex per vertex with an arrow into it."""
    fr = tuple(framing_label(v) for v in q.vertices)
    arrows = q.arrows + tuple(Arrow(f"i:{v}", framing_label(v), v) for v in q.vertices)
    return Quiver(q.vertices + fr, arrows, frozenset(fr))


REPETITION_VARIANTS = ("plain", "framed", "framed_double")


def repetition(q: Quiver, ell: int, variant: str = "plain") -> Quiver:
    if ell < 0:
        raise ValueError("ell must be non-negative")
    if variant not in REPETITION_VARIANTS:
        raise ValueError(f"variant must be one of {REPETITION_VARIANTS}")
    base = double(q) if variant == "framed_double" else q
    verts = [f"{v}@{m}" for m in range(ell + 1) for v in q.vertices]
    arrows = [Arrow(f"{a.id}@{m}", f"{a.out}@{m}", f"{a.in_}@{m}")
              for m in range(ell + 1) for a in base.arrows]
    arrows += [Arrow(f"p:{v}@{m}", f"{v}@{m}", f"{v}@{m + 1}")
               for m in range(ell) for v in q.vertices]
    fr: list[str] = []
    if variant != "plain":
        fr = [framing_label(v) for v in q.vertices]
        for v in q.vertices:
            for m in range(ell + 1):
                arrows.append(Arrow(f"i:{v}@{m}", framing_label(v), f"{v}@{m}"))
                arrows.append(Arrow(f"j:{v}@{m}", f"{v}@{m}", framing_label(v)))
    return Quiver(tuple(verts + fr), tuple(arrows), frozenset(fr))


def is_nonneg(x: np.ndarray) -> bool:
    return bool(np.all(x >= 0))


def leq(x: np.ndarray, y: np.ndarray) -> bool:
    return bool(np.all(x <= y))


def sub_checked(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """x - y, refusing results with negative entries."""
    out = x - y
    if not is_nonneg(out):
        raise ValueError(f"{list(map(int, y))} is not below {list(map(int, x))}")
    return out


def pairing(x: np.ndarray, m: np.ndarray, y: np.ndarray) -> int:
    return int(x @ m @ y)


# Named quivers, also reachable by name from the command line.

def jordan() -> Quiver:
    return Quiver(("0",), (Arrow("x", "0", "0"),))


def a_n(n: int) -> Quiver:
    """Equioriented A_n with vertices 1..n and arrows a<m>: m -> m+1."""
    if n < 1:
        raise ValueError("n must be positive")
    verts = tuple(str(m) for m in range(1, n + 1))
    arrows = tuple(Arrow(f"a{m}", str(m), str(m + 1)) for m in range(1, n))
    return Quiver(verts, arrows)


def a1() -> Quiver:
    return a_n(1)


def loops(g: int) -> Quiver:
    """One vertex carrying g loops."""
    return Quiver(("0",), tuple(Arrow(f"x{t}", "0", "0") for t in range(g)))


def kronecker(m: int = 2) -> Quiver:
    return Quiver(("0", "1"), tuple(Arrow(f"b{t}", "0", "1") for t in range(m)))


def builtin(name: str) -> Quiver:
    """Look up a named quiver: jordan, a1, a<n>, loops<g>, kronecker<m>."""
    name = name.strip().lower()
    if name == "jordan":
        return jordan()
    for prefix, make in (("loops", loops), ("kronecker", kronecker), ("a", a_n)):
        if name.startswith(prefix) and name[len(prefix):].isdigit():
            return make(int(name[len(prefix):]))
    raise ValueError(f"unknown built-in quiver {name!r}")
