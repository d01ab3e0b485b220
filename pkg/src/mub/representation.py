"""Vertex-to-interval assignments and the class predicates over them.

A representation is valid for a bigraph when cross-side adjacency coincides
exactly with interval intersection; same-side intersections carry no meaning
(copies may share an interval).  Bad pairs are proper containments between
closed intervals, strict on both sides, and are the quantity the repair
pipeline drives to zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict

from .bigraph import Bigraph
from .intervals import Interval, intersects, is_unit, reflect, translate

Representation = Dict[str, Interval]


class CoverageError(ValueError):
    def __init__(self, missing, extra):
        self.missing = sorted(missing)
        self.extra = sorted(extra)
        super().__init__(
            f"representation does not cover the vertex set exactly: "
            f"missing={self.missing} extra={self.extra}"
        )


@dataclass
class ValidityReport:
    valid: bool
    missing_edges: list = field(default_factory=list)
    spurious_edges: list = field(default_factory=list)


@dataclass(frozen=True)
class BadPair:
    """Closed interval of `inner` strictly inside the closed interval of `outer`."""

    inner: str
    outer: str


def validate(b: Bigraph, rep: Representation) -> ValidityReport:
    """Check adjacency == intersection over every cross-side pair."""
    verts = set(b.vertices)
    keys = set(rep)
    if verts != keys:
        raise CoverageError(verts - keys, keys - verts)
    missing = []
    spurious = []
    for x in b.xs:
        ix = rep[x]
        nbrs = b.neighbors(x)
        for y in b.ys:
            meets = intersects(ix, rep[y])
            if y in nbrs and not meets:
                missing.append((x, y))
            elif y not in nbrs and meets:
                spurious.append((x, y))
    return ValidityReport(not missing and not spurious, sorted(missing), sorted(spurious))


def is_mixed_unit(rep: Representation) -> bool:
    return all(is_unit(iv) for iv in rep.values())


def _properly_contains(outer: Interval, inner: Interval) -> bool:
    # set containment between closed intervals, proper
    return outer.lo <= inner.lo and inner.hi <= outer.hi and (
        outer.lo != inner.lo or outer.hi != inner.hi
    )


def _has_closed_twin(rep: Representation, iv: Interval) -> bool:
    return any(
        o.klass == "CC" and o.lo == iv.lo and o.hi == iv.hi for o in rep.values()
    )


def is_mixed_proper(rep: Representation) -> bool:
    """No closed interval properly contains another closed one, and every
    non-closed interval has a closed interval with the same endpoints."""
    closed = [iv for iv in rep.values() if iv.klass == "CC"]
    for i, a in enumerate(closed):
        for b in closed[i + 1 :]:
            if _properly_contains(a, b) or _properly_contains(b, a):
                return False
    for iv in rep.values():
        if iv.klass != "CC" and not _has_closed_twin(rep, iv):
            return False
    return True


def is_almost_proper(rep: Representation) -> bool:
    """Two-class analogue: only CC/OO intervals, closed ones nest-free,
    every open one endpoint-matched by a closed one."""
    if any(iv.klass in ("CO", "OC") for iv in rep.values()):
        return False
    closed = [iv for iv in rep.values() if iv.klass == "CC"]
    for i, a in enumerate(closed):
        for b in closed[i + 1 :]:
            if _properly_contains(a, b) or _properly_contains(b, a):
                return False
    for iv in rep.values():
        if iv.klass == "OO" and not _has_closed_twin(rep, iv):
            return False
    return True


def list_bad_pairs(rep: Representation) -> list:
    """Ordered pairs (inner, outer), both CC, strictly nested on both sides."""
    items = sorted(rep.items())
    out = []
    for u, iu in items:
        if iu.klass != "CC":
            continue
        for v, iv in items:
            if u == v or iv.klass != "CC":
                continue
            if iv.lo < iu.lo and iu.hi < iv.hi:
                out.append(BadPair(u, v))
    return out


def intersection_bigraph(rep: Representation, side_of: Dict[str, str]) -> Bigraph:
    """Bigraph whose edges are exactly the cross-side intersecting pairs."""
    if set(rep) != set(side_of):
        raise CoverageError(set(rep) - set(side_of), set(side_of) - set(rep))
    xs = sorted(v for v, s in side_of.items() if s == "X")
    ys = sorted(v for v, s in side_of.items() if s == "Y")
    edges = [
        (x, y) for x in xs for y in ys if intersects(rep[x], rep[y])
    ]
    return Bigraph(xs, ys, edges)


def translate_rep(rep: Representation, t) -> Representation:
    return {v: translate(iv, t) for v, iv in rep.items()}


def reflect_rep(rep: Representation) -> Representation:
    return {v: reflect(iv) for v, iv in rep.items()}


# ---------------------------------------------------------------------------
# Text format: one `<label> <C|O> <lo> <hi> <C|O>` line per vertex.


def _fmt_q(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_representation(rep: Representation) -> str:
    lines = []
    for v in sorted(rep):
        iv = rep[v]
        lines.append(
            f"{v} {'C' if iv.left_closed else 'O'} {_fmt_q(iv.lo)} "
            f"{_fmt_q(iv.hi)} {'C' if iv.right_closed else 'O'}"
        )
    return "\n".join(lines) + "\n"


def parse_representation(text: str) -> Representation:
    rep: Representation = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 5:
            raise ValueError(f"line {lineno}: expected `label C|O lo hi C|O`")
        label, lf, lo, hi, rf = parts
        if lf not in "CO" or rf not in "CO":
            raise ValueError(f"line {lineno}: boundary flags must be C or O")
        if label in rep:
            raise ValueError(f"line {lineno}: duplicate vertex {label!r}")
        rep[label] = Interval(Fraction(lo), Fraction(hi), lf == "C", rf == "C")
    return rep
