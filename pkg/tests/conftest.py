import numpy as np
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from quiverbn.quiver import Arrow, Quiver

settings.register_profile(
    "repo", deadline=None, derandomize=True, max_examples=100,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")


@st.composite
def quivers(draw, max_vertices=4, max_mult=3):
    n = draw(st.integers(1, max_vertices))
    verts = tuple(f"v{t}" for t in range(n))
    arrows = []
    for a in range(n):
        for b in range(n):
            for m in range(draw(st.integers(0, max_mult))):
                arrows.append(Arrow(f"e{a}{b}_{m}", verts[a], verts[b]))
    return Quiver(verts, tuple(arrows))


def vectors(n, lo=0, hi=6):
    return st.lists(st.integers(lo, hi), min_size=n, max_size=n).map(lambda x: np.array(x, dtype=np.int64))


@st.composite
def quiver_chain(draw, max_vertices=4, max_mult=3, top=6):
    """(q, d0, d1, d2, f) with d0 >= d1 >= d2 >= 0."""
    q = draw(quivers(max_vertices, max_mult))
    d0 = draw(vectors(q.n, 0, top))
    d1 = np.array([draw(st.integers(0, int(x))) for x in d0], dtype=np.int64)
    d2 = np.array([draw(st.integers(0, int(x))) for x in d1], dtype=np.int64)
    f = draw(vectors(q.n, 0, top))
    return q, d0, d1, d2, f
