"""JSON encodings of quivers, dimension vectors, representations, points and chains.

Matrices are row-major nested lists of rational strings ("p/q" or "p").
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from . import linalg as la
from .quiver import Arrow, Quiver, builtin
from .reps import FramedRep, ParabolicChainPoint, ParabolicPoint


def quiver_to_json(q: Quiver) -> dict:
    out = {"vertices": list(q.vertices),
           "arrows": [{"id": a.id, "out": a.out, "in": a.in_} for a in q.arrows]}
    if q.framing:
        out["framing"] = sorted(q.framing)
    return out


def quiver_from_json(data: dict) -> Quiver:
    try:
        arrows = tuple(Arrow(a["id"], a["out"], a["in"]) for a in data.get("arrows", []))
        return Quiver(tuple(data["vertices"]), arrows, frozenset(data.get("framing", ())))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed quiver: {exc}") from None


def load_quiver(name_or_path: str) -> Quiver:
    """A built-in name (jordan, a1, a3, loops2, kronecker2, ...) or a path to a JSON file."""
    path = Path(name_or_path)
    if path.suffix == ".json" or path.exists():
        if not path.exists():
            try:
                return builtin(path.stem)
            except ValueError:
                raise ValueError(f"no such quiver file: {name_or_path}") from None
        return quiver_from_json(json.loads(path.read_text()))
    return builtin(name_or_path)


def parse_vector(q: Quiver, text: str) -> np.ndarray:
    """Parse "3", "v0=3,v1=2", "3,2" (vertex order) or a JSON object/array."""
    text = text.strip()
    if text.startswith(("{", "[")):
        return q.vector(json.loads(text))
    if text == "":
        return q.vector([0] * q.n)
    parts = [p.strip() for p in text.split(",")]
    if all("=" in p for p in parts):
        return q.vector({p.split("=", 1)[0].strip(): int(p.split("=", 1)[1]) for p in parts})
    if any("=" in p for p in parts):
        raise ValueError(f"cannot mix labelled and positional entries: {text!r}")
    vals = [int(p) for p in parts]
    if len(vals) == 1 and q.n > 1:
        raise ValueError("a single number needs a one-vertex quiver")
    return q.vector(vals)


def vector_to_json(q: Quiver, vec) -> dict[str, int]:
    return q.labelled(vec)


def matrix_from_json(data, shape: tuple[int, int]) -> np.ndarray:
    if np.size(data) == 0:
        return la.zeros(*shape)
    m = la.qarray(data)
    if m.shape != shape:
        raise ValueError(f"matrix has shape {m.shape}, expected {shape}")
    return m


def rep_to_json(rep: FramedRep) -> dict:
    q = rep.quiver
    return {
        "quiver": quiver_to_json(q),
        "d": vector_to_json(q, rep.d),
        "f": vector_to_json(q, rep.f),
        "A": {k: la.to_strings(m) for k, m in rep.A.items()},
        "B": {k: la.to_strings(m) for k, m in rep.B.items()},
        "i": {k: la.to_strings(m) for k, m in rep.i.items()},
        "j": {k: la.to_strings(m) for k, m in rep.j.items()},
    }


def rep_from_json(data: dict, quiver: Quiver | None = None) -> FramedRep:
    try:
        q = quiver if quiver is not None else quiver_from_json(data["quiver"])
        d, f = q.vector(data["d"]), q.vector(data["f"])
        dim = dict(zip(q.vertices, map(int, d)))
        fd = dict(zip(q.vertices, map(int, f)))
        arrows = {a.id: a for a in q.arrows}
        A = {e: matrix_from_json(m, (dim[arrows[e].in_], dim[arrows[e].out]))
             for e, m in data.get("A", {}).items()}
        B = {e: matrix_from_json(m, (dim[arrows[e].out], dim[arrows[e].in_]))
             for e, m in data.get("B", {}).items()}
        i = {v: matrix_from_json(m, (dim[v], fd[v])) for v, m in data.get("i", {}).items()}
        j = {v: matrix_from_json(m, (fd[v], dim[v])) for v, m in data.get("j", {}).items()}
    except KeyError as exc:
        raise ValueError(f"malformed representation: missing or unknown key {exc}") from None
    return FramedRep(q, d, f, A=A, B=B, i=i, j=j)


def point_to_json(pt: ParabolicPoint) -> dict:
    out = rep_to_json(pt.rep)
    out["flags"] = {v: [la.to_strings(m) for m in ms] for v, ms in pt.flags.items() if ms}
    return out


def point_from_json(data: dict) -> ParabolicPoint:
    rep = rep_from_json(data)
    flags = {}
    for v, ms in data.get("flags", {}).items():
        rep.quiver.index(v)
        flags[v] = [la.qarray(m) for m in ms]
    return ParabolicPoint(rep, flags)


def chain_to_json(ch: ParabolicChainPoint) -> dict:
    return {"levels": [rep_to_json(r) for r in ch.levels],
            "pi": [{v: la.to_strings(m) for v, m in step.items()} for step in ch.pi]}


def chain_from_json(data: dict) -> ParabolicChainPoint:
    levels = [rep_from_json(r) for r in data["levels"]]
    pi = []
    for step, hi, lo in zip(data.get("pi", []), levels, levels[1:]):
        pi.append({v: matrix_from_json(m, (lo.dim(v), hi.dim(v))) for v, m in step.items()})
    return ParabolicChainPoint(levels, pi)


def load_object(data: dict):
    """Decode whichever of rep, point or chain the JSON document holds."""
    if "levels" in data:
        return chain_from_json(data)
    if "flags" in data:
        return point_from_json(data)
    return rep_from_json(data)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"
