"""JSON-ready dictionaries for library results.

Elements of numerical monoids are plain integers; all other elements and
every factorization are integer lists.
"""
from __future__ import annotations

import json

from .betti import BettiGraph, BettiSet
from .classify import ClassificationReport, MasterFactorization, QuasiResult, Witness
from .factorization import FactorizationSet, length
from .monoid import ReducedMonoid, Vector


def element(v: Vector):
    return v[0] if len(v) == 1 else list(v)


def monoid_doc(M: ReducedMonoid) -> dict:
    return {"dimension": M.dim, "atoms": [element(a) for a in M.atoms]}


def completeness(b: BettiSet) -> dict:
    return {"completeness": b.completeness, "max_length": b.max_length}


def betti_doc(M: ReducedMonoid, b: BettiSet) -> dict:
    return {**monoid_doc(M), "betti": [element(x) for x in b.elements], **completeness(b)}


def factorizations_doc(M: ReducedMonoid, zs: FactorizationSet) -> dict:
    return {
        **monoid_doc(M),
        "element": element(zs.element),
        "factorizations": [list(z) for z in zs],
        "count": len(zs),
        "lengths": zs.lengths,
    }


def lengths_doc(zs: FactorizationSet) -> dict:
    return {"element": element(zs.element), "lengths": zs.lengths}


def graph_doc(g: BettiGraph) -> dict:
    return {
        "element": element(g.element),
        "vertices": [list(z) for z in g.vertices],
        "edges": [list(e) for e in g.edges],
        "components": [list(c) for c in g.components],
        "connected": g.connected,
    }


def master_doc(m: MasterFactorization | None) -> dict | None:
    if m is None:
        return None
    return {
        "element": element(m.element),
        "longer": list(m.longer),
        "shorter": list(m.shorter),
        "lengths": [length(m.longer), length(m.shorter)],
    }


def witness_doc(w: Witness | None) -> dict | None:
    if w is None:
        return None
    return {
        "element": element(w.element),
        "pair": [list(w.first), list(w.second)],
        "length": length(w.first),
        "nondegenerate": w.nondegenerate,
    }


def classification_doc(M: ReducedMonoid, r: ClassificationReport) -> dict:
    return {
        **monoid_doc(M),
        "flags": {
            "factorial": r.factorial,
            "half_factorial": r.half_factorial,
            "length_factorial": r.length_factorial,
        },
        "betti": [element(x) for x in r.betti.elements],
        **completeness(r.betti),
        "master": master_doc(r.master),
        "witness": witness_doc(r.witness),
    }


def quasi_doc(q: QuasiResult) -> dict:
    return {
        "n": q.n,
        "violations": [{"element": element(x), "pair": [list(z), list(w)]} for x, z, w in q.violations],
        "exhaustive": q.exhaustive,
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
