"""The ten acceptance criteria, each reported as one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` or directly with
``python tests/test_acceptance.py``.
"""

import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quiverbn import dims, gallery, reps
from quiverbn import linalg as la
from quiverbn.quiver import Arrow, Quiver, a1, cartan, jordan, k0
from quiverbn.roots import nakajima_nonempty, parabolic_nonempty, strata_table

J, A1 = jordan(), a1()


def c1_hilbert_dimensions():
    cases = [(d, k) for d in range(1, 13) for k in range(d + 1)]
    bad = [c for c in cases if dims.dim_bn(J, c[0], 1, c[1]) != 2 * c[0] - c[1] * (c[1] + 1)]
    return not bad, f"{len(cases)} cases, {len(bad)} mismatches"


def c2_hilbert_nonempty():
    # the full 21 x 21 grid; for k > d both sides are false
    cases = [(d, k) for d in range(21) for k in range(21)]
    bad = [c for c in cases if parabolic_nonempty(J, c[0], c[1], 1) != (2 * c[0] >= c[1] * (c[1] + 1))]
    return len(cases) == 441 and not bad, f"{len(cases)} cases, {len(bad)} mismatches"


def c3_gieseker_dimensions():
    cases = [(d, f, k) for f in range(1, 6) for d in range(1, 9) for k in range(d + 1)]
    bad = [c for c in cases if dims.dim_bn(J, c[0], c[1], c[2]) != 2 * c[0] * c[1] - c[2] * (c[2] + c[1])]
    return not bad, f"{len(cases)} cases, {len(bad)} mismatches"


def c4_a1_family():
    n = bad = 0
    for f in range(11):
        for d in range(f + 3):
            n += 1
            bad += nakajima_nonempty(A1, d, f) != (d <= f)
            if d > f:
                continue
            bad += dims.dim_nakajima(A1, d, f) != 2 * d * (f - d)
            for k in range(max(0, 2 * d - f), d + 1):
                n += 1
                bad += dims.dim_bn(A1, d, f, k) != (2 * d - k) * f - 2 * d * (d - k) - k * k
    return bad == 0, f"{n} cases, {bad} mismatches"


def c5_composition_example():
    bad = 0
    for d in range(3, 11):
        got = (dims.dim_parabolic_pair(J, d, 1, 1), dims.dim_parabolic_pair(J, d - 1, 1, 1),
               dims.dim_parabolic_pair(J, d, 2, 1), dims.dim_parabolic_chain(J, [d, d - 1, d - 2], 1))
        bad += got != (2 * d - 2, 2 * d - 4, 2 * d - 6, 2 * d - 5)
        bad += dims.excess(J, d, d - 1, d - 2) != (1, 2)
    return bad == 0, f"8 values of d, {bad} mismatches"


@st.composite
def identity_cases(draw):
    n = draw(st.integers(1, 4))
    verts = tuple(f"v{t}" for t in range(n))
    arrows = [Arrow(f"e{a}{b}_{m}", verts[a], verts[b])
              for a in range(n) for b in range(n) for m in range(draw(st.integers(0, 3)))]
    q = Quiver(verts, tuple(arrows))
    entries = st.integers(0, 6)
    d0 = np.array(draw(st.lists(entries, min_size=n, max_size=n)))
    d1 = np.array([draw(st.integers(0, int(x))) for x in d0])
    d2 = np.array([draw(st.integers(0, int(x))) for x in d1])
    f = np.array(draw(st.lists(entries, min_size=n, max_size=n)))
    return q, d0, d1, d2, f


def _identities_hold(q, d0, d1, d2, f):
    k, kp = d0 - d1, d1 - d2
    pair = dims.dim_parabolic_pair(q, d0, k, f)
    m0, m1 = dims.dim_nakajima(q, d0, f), dims.dim_nakajima(q, d1, f)
    r1, r2 = dims.excess(q, d0, d1, d2)
    chain = dims.dim_parabolic_chain(q, [d0, d1, d2], f)
    return [
        2 * pair == m0 + m1 - 2 * dims.half_dim_defect(q, k),
        chain == pair + dims.dim_parabolic_pair(q, d1, kp, f) - m1 + r1 - r2,
        np.array_equal(k0(q, d0 - k, f), k0(q, d0, f) - cartan(q) @ k),
        chain == dims.dim_parabolic_pair(q, d0, d0 - d2, f) + dims.flag_fiber_dim(q, [d0, d1, d2]),
        dims.is_lagrangian_support(q, k) == (2 * pair == m0 + m1),
    ]


def c6_identity_suite():
    seen, bad = [], []

    @settings(max_examples=1000, derandomize=True, deadline=None, database=None)
    @given(identity_cases())
    def check(case):
        seen.append(1)
        if not all(_identities_hold(*case)):
            bad.append(case)

    check()
    return len(seen) >= 1000 and not bad, f"{len(seen)} random cases, {len(bad)} failures"


def c7_tangent_complex():
    n = bad = 0
    small = None
    for size in range(1, 9):
        for lam in gallery.partitions(size):
            for k in range(len(gallery.corners(lam)) + 1):
                for pt in gallery.corner_flag_points(lam, k):
                    t = reps.tangent_complex(pt)
                    n += 1
                    expected = dims.dim_parabolic_full(J, size, k, 1)
                    bad += not (t.ok and t.h_dim == expected)
                    if lam == (2, 1) and k == 1 and small is None:
                        small = t.h_dim
    return bad == 0 and small == 4, f"{n} flagged points, {bad} failures, lambda=(2,1) k=1 gives h={small}"


def c8_stratum_oracle():
    n = bad = 0
    for size in range(1, 9):
        for lam in gallery.partitions(size):
            cells = set(gallery.partition_cells(lam))
            corner_count = sum((a + 1, b) not in cells and (a, b + 1) not in cells for a, b in cells)
            n += 1
            bad += reps.bn_stratum_of(gallery.hilb_fixed_point(lam)) != (corner_count,)
    return bad == 0, f"{n} partitions, {bad} mismatches"


def c9_quotient_stability(runs=200):
    rng = np.random.default_rng(2024)
    bad = 0
    for t in range(runs):
        fam = gallery.FAMILIES[t % len(gallery.FAMILIES)]
        rep = gallery.random_gallery_point(fam, int(rng.integers(2**31)), max_size=6).rep
        K = {}
        for v in rep.quiver.vertices:
            hom = reps.hom_basis(rep, v)
            size = int(rng.integers(0, hom.shape[1] + 1))
            coeffs = la.qarray(rng.integers(-3, 4, size=(hom.shape[1], size)).tolist(), (hom.shape[1], size))
            K[v] = la.matmul(hom, coeffs)
        try:
            quo = reps.quotient_by_K(rep, K)
            bad += not reps.validate_rep(quo).ok
        except AssertionError:
            bad += 1
    return bad == 0, f"{runs} quotients, {bad} failures"


def c10_strata_preimages():
    n = bad = 0
    for d in range(1, 9):
        for k in range(d + 1):
            top = dims.dim_parabolic_pair(J, d, k, 1)
            for row in strata_table(J, d, 1, k):
                n += 1
                if row.r == (k,):
                    bad += row.pminus_preimage_dim != top
                else:
                    bad += row.pminus_preimage_dim >= top
    return bad == 0, f"{n} strata rows, {bad} violations"


CRITERIA = [
    (1, "Hilbert-scheme dimensions", c1_hilbert_dimensions),
    (2, "Hilbert-scheme nonemptiness", c2_hilbert_nonempty),
    (3, "Gieseker dimensions", c3_gieseker_dimensions),
    (4, "A1 family", c4_a1_family),
    (5, "composition example", c5_composition_example),
    (6, "algebraic identity suite", c6_identity_suite),
    (7, "tangent-complex certification", c7_tangent_complex),
    (8, "stratum oracle", c8_stratum_oracle),
    (9, "quotient stability", c9_quotient_stability),
    (10, "strata-table consistency", c10_strata_preimages),
]


def report_line(num, name, ok, detail):
    return f"criterion {num:2d} {'PASS' if ok else 'FAIL'}  {name}: {detail}"


@pytest.mark.parametrize("num,name,check", CRITERIA, ids=[f"c{n}" for n, _, _ in CRITERIA])
def test_criterion(num, name, check, capsys):
    ok, detail = check()
    with capsys.disabled():
        print("\n" + report_line(num, name, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = [(num, name, *check()) for num, name, check in CRITERIA]
    for num, name, ok, detail in results:
        print(report_line(num, name, ok, detail))
    sys.exit(0 if all(ok for _, _, ok, _ in results) else 1)
