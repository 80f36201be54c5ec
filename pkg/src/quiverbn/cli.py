"""Command-line front end.

Results go to stdout as JSON (TSV for ``strata --tsv``), diagnostics to
stderr.  Exit codes: 0 success, 1 failed verification or strata cap
overflow, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import dims, gallery, reps, roots, selftest
from . import serialize as ser
from .quiver import Quiver, k0


class InputError(Exception):
    pass


def _quiver(args) -> Quiver:
    return ser.load_quiver(args.quiver)


def _vec(q: Quiver, text: str | None, default: int | None = 0) -> np.ndarray:
    if text is None:
        if default is None:
            raise InputError("missing dimension vector")
        return q.vector([default] * q.n)
    return ser.parse_vector(q, text)


def _labelled(q: Quiver, vec) -> dict[str, int]:
    return q.labelled(vec)


def _emit(obj) -> None:
    sys.stdout.write(ser.dumps(obj))


# dim


def cmd_dim(args) -> int:
    q = _quiver(args)
    f = _vec(q, args.f)
    kind = args.kind
    out: dict = {"quantity": kind}
    if kind == "chain":
        if not args.chain:
            raise InputError("dim chain needs --chain d0;d1;...")
        chain = [_vec(q, part) for part in args.chain.split(";")]
        out["chain"] = [_labelled(q, c) for c in chain]
        out["dim"] = dims.dim_parabolic_chain(q, chain, f)
        _emit(out)
        return 0
    d = _vec(q, args.d, default=None)
    out["d"] = _labelled(q, d)
    if kind == "nakajima":
        out["dim"] = dims.dim_nakajima(q, d, f)
    elif kind == "stratum":
        r = _vec(q, args.r, default=None)
        out["r"] = _labelled(q, r)
        out["dim"] = dims.dim_bn_stratum(q, d, f, r)
    else:
        k = _vec(q, args.k, default=None)
        out["k"] = _labelled(q, k)
        if kind == "parabolic":
            out["dim"] = dims.dim_parabolic_pair(q, d, k, f)
        elif kind == "parabolic-full":
            out["dim"] = dims.dim_parabolic_full(q, d, k, f)
        else:
            out["effective_k"] = _labelled(q, dims.effective_k(q, d, f, k))
            out["dim"] = dims.dim_bn(q, d, f, k)
    _emit(out)
    return 0


# nonemptiness, roots, strata, excess


def cmd_nonempty(args) -> int:
    q = _quiver(args)
    d, f = _vec(q, args.d, default=None), _vec(q, args.f)
    k = _vec(q, args.k)
    verdict = roots.parabolic_nonempty_trace(q, d, k, f)
    out = {"d": _labelled(q, d), "k": _labelled(q, k), "f": _labelled(q, f),
           "verdict": "nonempty" if verdict.nonempty else "empty"}
    if args.trace:
        out["trace"] = [{"d": _labelled(q, dd), "k": _labelled(q, kk)} for dd, kk in verdict.trace]
        last = np.array(verdict.trace[-1][0])
        if not np.array(verdict.trace[-1][1]).any() and last.any():
            rv = roots.is_positive_root(roots.framed_graph(q, f), np.append(last, 1))
            out["root_test"] = _root_json(rv)
    _emit(out)
    return 0


def _root_json(rv: roots.RootVerdict) -> dict:
    return {"kind": rv.kind.value, "final": list(rv.final),
            "trace": [{"reflect_at": v, "vector": list(vec)} for v, vec in rv.trace]}


def cmd_root_check(args) -> int:
    q = _quiver(args)
    if args.f is not None:
        g = roots.framed_graph(q, _vec(q, args.f))
    else:
        g = roots.graph_of(q)
    text = args.alpha.strip()
    if "=" in text:
        labels = {v: t for t, v in enumerate(g.vertices)}
        alpha = [0] * len(g.vertices)
        for part in text.split(","):
            key, val = part.split("=", 1)
            if key.strip() not in labels:
                raise InputError(f"unknown vertex {key.strip()!r}")
            alpha[labels[key.strip()]] = int(val)
    else:
        alpha = [int(x) for x in text.split(",")]
    out = {"graph": list(g.vertices), "alpha": alpha}
    rv = roots.is_positive_root(g, alpha)
    out.update({"kind": rv.kind.value})
    if args.trace:
        out.update(_root_json(rv))
    _emit(out)
    return 0


TSV_COLUMNS = ("r", "stratum_dim", "fiber_dim", "preimage_dim", "nonempty")


def cmd_strata(args) -> int:
    q = _quiver(args)
    d, f, k = _vec(q, args.d, default=None), _vec(q, args.f), _vec(q, args.k)
    try:
        rows = roots.strata_table(q, d, f, k, cap=args.cap)
    except roots.StrataOverflow as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.tsv:
        lines = ["\t".join(TSV_COLUMNS)]
        for row in rows:
            lines.append("\t".join([",".join(map(str, row.r)), str(row.stratum_dim), str(row.pminus_fiber_dim),
                                    str(row.pminus_preimage_dim), str(row.nonempty).lower()]))
        sys.stdout.write("\n".join(lines) + "\n")
        return 0
    _emit({"d": _labelled(q, d), "f": _labelled(q, f), "k": _labelled(q, k),
           "k0": _labelled(q, k0(q, d, f)),
           "strata": [{"r": _labelled(q, row.r), "stratum_dim": row.stratum_dim,
                       "pminus_fiber_dim": row.pminus_fiber_dim,
                       "pminus_preimage_dim": row.pminus_preimage_dim,
                       "nonempty": row.nonempty} for row in rows]})
    return 0


def cmd_excess(args) -> int:
    q = _quiver(args)
    parts = args.chain.split(";")
    if len(parts) != 3:
        raise InputError("excess needs --chain d0;d1;d2")
    d0, d1, d2 = (_vec(q, p) for p in parts)
    r1, r2 = dims.excess(q, d0, d1, d2)
    _emit({"chain": [_labelled(q, x) for x in (d0, d1, d2)], "R1": r1, "R2": r2})
    return 0


# verify


def _read_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def cmd_verify(args) -> int:
    obj = ser.load_object(_read_json(args.file))
    checks: list[dict] = []

    def add(name, ok, detail=None):
        entry = {"check": name, "ok": bool(ok)}
        if detail:
            entry["detail"] = detail
        checks.append(entry)

    out: dict = {}
    if isinstance(obj, reps.ParabolicChainPoint):
        out["kind"] = "chain"
        report = reps.validate_chain(obj)
        add("chain", report.ok, report.failures)
        top = obj.levels[0]
        point = reps.flag_from_chain(obj) if report.ok else None
    else:
        top = obj if isinstance(obj, reps.FramedRep) else obj.rep
        point = obj if isinstance(obj, reps.ParabolicPoint) else reps.ParabolicPoint(obj, {})
        out["kind"] = "point" if isinstance(obj, reps.ParabolicPoint) else "rep"
        flat, stable = reps.is_flat(top), reps.is_stable(top)
        add("flat", flat)
        add("stable", stable)
        if isinstance(obj, reps.ParabolicPoint):
            report = reps.validate_point(obj)
            flag_failures = [m for m in report.failures if m.startswith("flag")]
            add("flags", not flag_failures, flag_failures)
    q = top.quiver
    if reps.is_flat(top) and reps.is_stable(top):
        r = reps.bn_stratum_of(top)
        out["stratum"] = _labelled(q, r)
        add("hom dimension at least k0", reps.k_bound_holds(top))
    if args.tangent:
        if point is None or not reps.validate_point(point):
            add("tangent complex", False, ["point is not valid"])
        else:
            t = reps.tangent_complex(point)
            out["tangent"] = {"rep_dim": t.rep_dim, "lie_dim": t.lie_dim, "mu_dim": t.mu_dim,
                              "rank_j": t.rank_j, "rank_dmu": t.rank_dmu, "complex_ok": t.complex_ok,
                              "h_dim": t.h_dim, "formula_dim": t.formula_dim}
            add("dmu after j vanishes", t.complex_ok)
            add("j injective", t.j_injective)
            add("dmu surjective", t.dmu_surjective)
            add("h_dim matches formula", t.h_dim == t.formula_dim)
    out["checks"] = checks
    out["ok"] = all(c["ok"] for c in checks)
    _emit(out)
    for c in checks:
        if not c["ok"]:
            print(f"FAILED {c['check']}: {'; '.join(c.get('detail', []))}", file=sys.stderr)
    return 0 if out["ok"] else 1


# example


def _ints(text: str) -> list[int]:
    text = text.strip()
    return [int(x) for x in text.split(",")] if text else []


def cmd_example(args) -> int:
    fam = args.family
    if fam == "hilb":
        lam = _ints(args.partition)
        corners = gallery.corners(lam)
        if not 0 <= args.k <= len(corners):
            raise InputError(f"k must lie between 0 and the number of corners ({len(corners)})")
        data = ser.point_to_json(gallery.corner_flag_point(lam, corners[: args.k]))
    elif fam == "a1":
        data = ser.point_to_json(gallery.a1_point(args.d, args.f, args.k))
    elif fam == "an":
        data = ser.rep_to_json(gallery.an_flag_point(_ints(args.dims), args.f))
    elif fam == "points":
        pts = [tuple(p.split(",")) for p in args.points.split(";") if p.strip()]
        data = ser.rep_to_json(gallery.hilb_distinct_points(pts))
    else:
        data = ser.point_to_json(gallery.random_gallery_point(args.random_family, args.seed))
        data = {"seed": args.seed, "family": args.random_family, **data}
    text = ser.dumps(data)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_selftest(args) -> int:
    results = selftest.run(args.seed)
    width = max(len(r.name) for r in results)
    for r in results:
        status = "pass" if r.ok else "FAIL"
        print(f"{r.name:<{width}}  {r.cases:>5} cases  {status}", file=sys.stderr)
        if not r.ok:
            print(f"    first failure: {r.example}", file=sys.stderr)
    ok = all(r.ok for r in results)
    _emit({"seed": args.seed, "ok": ok,
           "checks": [{"name": r.name, "cases": r.cases, "failures": r.failures} for r in results]})
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="quiverbn", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def with_quiver(sp, default="a1"):
        sp.add_argument("--quiver", default=default,
                        help="built-in name (jordan, a1, a3, loops2, kronecker2) or a JSON file")
        sp.add_argument("--f", help="framing vector (default 0)")
        return sp

    dim = with_quiver(sub.add_parser("dim", help="closed-form dimensions"))
    dim.add_argument("kind", choices=["nakajima", "parabolic", "parabolic-full", "chain", "bn", "stratum"])
    dim.add_argument("--d")
    dim.add_argument("--k")
    dim.add_argument("--r")
    dim.add_argument("--chain", help="dimension vectors separated by ';'")
    dim.set_defaults(func=cmd_dim)

    ne = with_quiver(sub.add_parser("nonempty", help="is P(d, d-k; f) (equivalently BN^k) nonempty"))
    ne.add_argument("--d", required=True)
    ne.add_argument("--k")
    ne.add_argument("--trace", action="store_true")
    ne.set_defaults(func=cmd_nonempty)

    rc = sub.add_parser("root-check", help="positive root test on the graph of a quiver")
    rc.add_argument("--quiver", default="a1")
    rc.add_argument("--f", help="if given, test on the framed graph (last entry is the extra vertex)")
    rc.add_argument("--alpha", required=True)
    rc.add_argument("--trace", action="store_true")
    rc.set_defaults(func=cmd_root_check)

    st = with_quiver(sub.add_parser("strata", help="table of BN strata"))
    st.add_argument("--d", required=True)
    st.add_argument("--k")
    st.add_argument("--cap", type=int, default=10**6)
    st.add_argument("--tsv", action="store_true")
    st.set_defaults(func=cmd_strata)

    ex = with_quiver(sub.add_parser("excess", help="excess numbers R1, R2"))
    ex.add_argument("--chain", required=True)
    ex.set_defaults(func=cmd_excess)

    ve = sub.add_parser("verify", help="check a representation, point or chain file")
    ve.add_argument("file", help="JSON file, or - for stdin")
    ve.add_argument("--tangent", action="store_true")
    ve.set_defaults(func=cmd_verify)

    eg = sub.add_parser("example", help="write a gallery point as JSON")
    eg.add_argument("family", choices=["hilb", "a1", "an", "points", "random"])
    eg.add_argument("--partition", default="")
    eg.add_argument("--k", type=int, default=0)
    eg.add_argument("--d", type=int, default=0)
    eg.add_argument("--f", type=int, default=0)
    eg.add_argument("--dims", default="", help="A_n dimension vector, e.g. 3,1")
    eg.add_argument("--points", default="", help="points as x,y;x,y;...")
    eg.add_argument("--random-family", default="hilb_monomial", choices=gallery.FAMILIES)
    eg.add_argument("--seed", type=int, default=0)
    eg.add_argument("-o", "--output")
    eg.set_defaults(func=cmd_example)

    sf = sub.add_parser("selftest", help="run the seeded identity and property suite")
    sf.add_argument("--seed", type=int, default=0)
    sf.set_defaults(func=cmd_selftest)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (InputError, ValueError, KeyError, TypeError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
