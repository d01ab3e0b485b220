"""Generators for the forbidden-subgraph catalog and the pinned variants.

Fixed graphs (H1..H3, F1..F13, B0..B2, K, M, H0) are transcribed adjacency
lists.  The parameterized families L, M, N, H', K, P, T, Q, R, S grow two
vertices per parameter step.  Each of K, P, T, Q, S, R also has a "primed"
variant whose intersection model is rigid: the primed graph ends in a
vertex u carrying two special pendants v', v''.  Deleting v', v'' and
gluing the 6-vertex gadget B0 at u gives the "tilde" variant.

Generated labels follow the source figures where those are labeled, so the
interval tables in mub.fixtures apply to the same vertex names; tests
cross-check every primed generator against its interval table.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .bigraph import Bigraph

FIXED_TAGS = (
    "H1", "H2", "H3",
    "F1", "F2", "F3", "F4", "F5", "F6", "F7", "F8", "F9", "F10", "F11", "F12", "F13",
    "B0", "B1", "B2", "K", "M", "H0",
)
ONE_PARAM_TAGS = ("Mfam", "N", "Hp", "P", "Q", "R", "S")
TWO_PARAM_TAGS = ("L", "Kfam", "T")
PRIMED_TAGS = ("Kfam", "P", "T", "Q", "S", "R")
TILDE_TAGS = ("Kfam", "P", "Q", "R", "S")

# members the master forbidden list excludes (mixed-unit representable)
NON_FORBIDDEN_FIXED = ("H1", "H2", "H3", "F1", "F3", "F6", "F7", "F10", "F13", "B0")


class UnsupportedConstructionError(ValueError):
    pass


@dataclass(frozen=True)
class FamilyId:
    tag: str
    i: Optional[int] = None
    j: Optional[int] = None
    primed: bool = False
    tilde: bool = False

    def __post_init__(self):
        if self.tag in FIXED_TAGS:
            if self.i is not None or self.j is not None:
                raise ValueError(f"{self.tag} takes no parameters")
        elif self.tag in ONE_PARAM_TAGS:
            if self.i is None or self.i < 1 or self.j is not None:
                raise ValueError(f"{self.tag} takes a single parameter i >= 1")
        elif self.tag in TWO_PARAM_TAGS:
            if self.i is None or self.j is None or self.i < 1 or self.j < 1:
                raise ValueError(f"{self.tag} takes parameters i, j >= 1")
        else:
            raise ValueError(f"unknown family tag {self.tag!r}")
        if self.primed and self.tag not in PRIMED_TAGS:
            raise UnsupportedConstructionError(f"no primed variant for {self.tag}")
        if self.tilde and self.tag not in TILDE_TAGS:
            raise UnsupportedConstructionError(f"no tilde variant for {self.tag}")
        if self.primed and self.tilde:
            raise ValueError("primed and tilde are mutually exclusive")

    def __str__(self):
        s = self.tag
        if self.i is not None:
            s += f"({self.i}" + (f",{self.j})" if self.j is not None else ")")
        if self.primed:
            s += "'"
        if self.tilde:
            s = "~" + s
        return s


def _build(edges: Iterable[tuple], anchor_x: str) -> Bigraph:
    """Two-color a connected edge list, anchoring anchor_x on side X."""
    edges = list(edges)
    adj: dict = {}
    order: list = []
    for a, b in edges:
        for v in (a, b):
            if v not in adj:
                adj[v] = []
                order.append(v)
        adj[a].append(b)
        adj[b].append(a)
    side = {anchor_x: "X"}
    queue = [anchor_x]
    while queue:
        v = queue.pop()
        for w in adj[v]:
            if w not in side:
                side[w] = "Y" if side[v] == "X" else "X"
                queue.append(w)
            elif side[w] == side[v]:
                raise ValueError(f"odd cycle through {v!r}-{w!r}")
    if len(side) != len(adj):
        raise ValueError("construction is not connected")
    xs = [v for v in order if side[v] == "X"]
    ys = [v for v in order if side[v] == "Y"]
    for v in order:
        if len(v) > 1 and v[0] in "xy" and v[1] in "0123456789" and side[v] != v[0].upper():
            raise AssertionError(f"transcription bug: {v!r} colored {side[v]}")
    return Bigraph(xs, ys, edges)


# ---------------------------------------------------------------------------
# Fixed graphs.

_H1 = [("x4", "y1"), ("x4", "y2"), ("x4", "y3"),
       ("y1", "x1"), ("y2", "x2"), ("y3", "x3")]

_H2 = [("y2", "x2"), ("x2", "y1"), ("y1", "x1"), ("y1", "x3"),
       ("x3", "y3"), ("x2", "y4"), ("y4", "x3")]

_H3 = [("y2", "x2"), ("x2", "y1"), ("y1", "x3"), ("x3", "y3"),
       ("y3", "x4"), ("x4", "y2"), ("x4", "y1"), ("y1", "x1")]

_F1 = [("x1", "y0"), ("x1", "y1"), ("x1", "y2"), ("x1", "y3"),
       ("y0", "x0"), ("y1", "x2"), ("y2", "x3")]

_F2 = [("p", "a"), ("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"),
       ("a", "e"), ("e", "f"), ("f", "b"), ("b", "g")]

_F3 = [("d", "e"), ("e", "f"), ("f", "p1"), ("f", "g"), ("e", "h"),
       ("h", "p2"), ("g", "h"), ("g", "p3"), ("h", "i"), ("i", "f")]

_F4 = [("j", "k"), ("k", "l"), ("l", "p1"), ("l", "m"), ("k", "n"),
       ("m", "n"), ("m", "p2"), ("n", "o"), ("o", "l"), ("k", "o2"), ("o2", "m")]

_F5 = [("p", "b"), ("b", "q"), ("q", "c"), ("c", "d"), ("d", "r"),
       ("r", "s"), ("s", "b"), ("q", "r"), ("q", "t"), ("t", "s"), ("t", "e")]

_F6 = [("y4", "x3"), ("x3", "y1"), ("y1", "x2"), ("x2", "y2"), ("y2", "x4"),
       ("x4", "y3"), ("y3", "x3"), ("x4", "y1"), ("y1", "x1"),
       ("x2", "y5"), ("y5", "x4"), ("y5", "x5")]

_F7 = [("a", "b"), ("b", "c"), ("c", "p1"), ("p1", "p2"), ("c", "p3"),
       ("c", "d"), ("d", "e"), ("e", "p4"), ("e", "p5"), ("p5", "p6"), ("e", "b")]

_F8 = [("f", "g"), ("g", "p1"), ("p1", "p2"), ("p2", "h"), ("h", "p3"),
       ("p3", "p4"), ("p4", "k"), ("k", "f"), ("g", "h"), ("h", "k"), ("h", "p5")]

_F9 = [("l", "m"), ("m", "n"), ("n", "p1"), ("n", "o"), ("o", "p2"),
       ("p2", "m"), ("m", "p3"), ("p3", "q"), ("q", "n"), ("o", "l"),
       ("l", "q"), ("q", "p4"), ("o", "p5")]

_F10 = [("q", "r"), ("r", "s"), ("s", "p1"), ("r", "p2"), ("p2", "t"),
        ("t", "p3"), ("q", "t"), ("t", "s"), ("q", "u"), ("u", "s"),
        ("u", "p4"), ("p4", "p5"), ("u", "p6")]

_F11 = [("v", "w"), ("w", "p1"), ("p1", "z2"), ("z2", "x"), ("x", "p2"),
        ("p2", "z"), ("z", "y"), ("y", "v"), ("y", "x"), ("x", "w"),
        ("x", "p3"), ("z2", "z"), ("z", "w")]

_F12 = [("a", "b"), ("b", "p1"), ("p1", "c"), ("c", "d"), ("d", "e"),
        ("e", "p2"), ("p2", "f"), ("f", "d"), ("d", "b"), ("b", "g"),
        ("g", "f"), ("g", "e"), ("c", "a"), ("a", "f"), ("b", "p3"), ("c", "p4")]

_F13 = [("n", "p"), ("p", "q"), ("q", "p1"), ("p1", "p2"), ("p2", "r"),
        ("r", "s"), ("s", "p"), ("q", "r"), ("s", "p4"), ("q", "t"),
        ("t", "s"), ("t", "u"), ("u", "r"), ("u", "p")]

_B0 = [("u", "v0''"), ("v0''", "u0'"), ("u", "v0"), ("u", "v0'"),
       ("v0'", "u0"), ("u0", "v0''")]

_B1 = [("x0", "y1"), ("y1", "x1"), ("x0", "y2"), ("y2", "x2"),
       ("x0", "y3"), ("y3", "x3"), ("x0", "y4"), ("y4", "x4")]

_B2 = [("x0", "y1"), ("x0", "y2"), ("x0", "y3"), ("x0", "y4"), ("x0", "y5"),
       ("x0", "y6"), ("y1", "x1"), ("y6", "x2"), ("y2", "x3"),
       ("y3", "x4"), ("x4", "y2"), ("y4", "x5"), ("x5", "y1")]

_K = [("x2", "y1"), ("y1", "x3"), ("x3", "y4"), ("y4", "x2"),
      ("x2", "y2"), ("y2", "x4"), ("x2", "y2'"), ("y2'", "x4'"),
      ("x3", "y3"), ("y3", "x5"), ("x3", "y3'"), ("y1", "x1")]

_M = [("y3", "x3"), ("x3", "y1"), ("y1", "x2"), ("x2", "y2"),
      ("x3", "y4"), ("y4", "x2"), ("y1", "x5"), ("y1", "x1"),
      ("x1", "y5"), ("y5", "x4"), ("x4", "y1"), ("x1", "y6")]

_H0 = [("y2", "x4"), ("x4", "y3"), ("y3", "x3"), ("x3", "y1"),
       ("y1", "x2"), ("x2", "y2"), ("x4", "y1"), ("y1", "x1"),
       ("x1", "y5"), ("y1", "x5"), ("x5", "y4"), ("y4", "x1"), ("y1", "x6")]

_FIXED = {
    "H1": (_H1, "x4"), "H2": (_H2, "x2"), "H3": (_H3, "x2"),
    "F1": (_F1, "x1"), "F2": (_F2, "a"), "F3": (_F3, "e"),
    "F4": (_F4, "k"), "F5": (_F5, "b"), "F6": (_F6, "x3"),
    "F7": (_F7, "b"), "F8": (_F8, "g"), "F9": (_F9, "m"),
    "F10": (_F10, "r"), "F11": (_F11, "w"), "F12": (_F12, "b"),
    "F13": (_F13, "p"), "B0": (_B0, "u"), "B1": (_B1, "x0"),
    "B2": (_B2, "x0"), "K": (_K, "x2"), "M": (_M, "x3"), "H0": (_H0, "x4"),
}


# ---------------------------------------------------------------------------
# Parameterized families.  Helper: alternating path labels with the last
# position renamed (to "u" or "z"); attachments refer to positions so the
# rename stays consistent at small parameters.


def _alt_labels(first: str, count: int, fmt_a: str, fmt_b: str) -> list:
    """[first, fmt_a % 1, fmt_b % 1, fmt_a % 2, ...] of length count+1."""
    out = [first]
    for k in range(1, count + 1):
        out.append((fmt_a % ((k + 1) // 2)) if k % 2 else (fmt_b % (k // 2)))
    return out


def _path_edges(labels: list) -> list:
    return [(labels[k], labels[k + 1]) for k in range(len(labels) - 1)]


def _k_family(i: int, j: int, primed: bool) -> Bigraph:
    edges = [("x1''", "y0"), ("y0", "x1"), ("x1", "y"), ("y", "x1''"), ("y0", "x0")]
    right = ["x1"] + [
        ("y%d" % ((k + 1) // 2)) if k % 2 else ("x%d" % (k // 2 + 1))
        for k in range(1, j + 1)
    ]
    right[j] = "u"
    edges += _path_edges(right)
    for k in range(j):
        pend = ("y%d'" % (k // 2 + 1)) if k % 2 == 0 else ("x%d'" % ((k + 1) // 2))
        edges.append((right[k], pend))
    left = ["x1''"] + [
        ("y%d''" % ((k + 1) // 2)) if k % 2 else ("x%d''" % (k // 2 + 1))
        for k in range(1, i + 1)
    ]
    left[i] = "z"
    edges += _path_edges(left)
    for k in range(i):
        pend = ("y%d'''" % (k // 2 + 1)) if k % 2 == 0 else ("x%d'''" % ((k + 1) // 2))
        edges.append((left[k], pend))
    edges += [("z", "w"), ("w", "z'"), ("z", "w'"), ("w'", "z''")]
    edges += [("u", "v'"), ("u", "v''")]
    if not primed:
        edges += [("v'", "t'"), ("v''", "t''")]
    return _build(edges, "x1")


def _p_family(i: int, primed: bool) -> Bigraph:
    path = ["x1"] + [
        ("y%d" % ((k + 1) // 2)) if k % 2 else ("x%d" % (k // 2 + 1))
        for k in range(1, i)
    ]
    path[i - 1] = "u"
    edges = [("x1''", "y1''"), ("x2''", "y1''"), ("x2''", "y2''"), ("x2''", "y3''"),
             ("x3''", "y1''"), ("x3''", "y2''"), ("x3''", "y3''"), ("x3''", "y4''")]
    edges += [(path[0], "y1''"), (path[0], "y2''")]
    edges += _path_edges(path)
    for k in range(i - 1):
        pend = ("y%d'" % (k // 2 + 1)) if k % 2 == 0 else ("x%d'" % ((k + 1) // 2))
        edges.append((path[k], pend))
    edges += [("u", "v'"), ("u", "v''")]
    if not primed:
        edges += [("v'", "t'"), ("v''", "t''")]
    return _build(edges, "x1''")


def _t_family(i: int, j: int, primed: bool) -> Bigraph:
    edges = [("x", "y0"), ("y0", "x0"), ("x", "y")]
    right = _alt_labels("x", j, "y%d", "x%d")
    right[j] = "u"
    edges += _path_edges(right)
    for k in range(1, j):
        pend = ("x%d'" % ((k + 1) // 2)) if k % 2 else ("y%d'" % (k // 2))
        edges.append((right[k], pend))
    edges += [("u", "v0"), ("v0", "u0"), ("u", "v0'"), ("v0'", "u0'"),
              ("u0'", "v0"), ("u", "v'")]
    left = _alt_labels("x", i, "y%d''", "x%d''")
    left[i] = "z"
    edges += _path_edges(left)
    for k in range(1, i):
        pend = ("x%d'''" % ((k + 1) // 2)) if k % 2 else ("y%d'''" % (k // 2))
        edges.append((left[k], pend))
    edges += [("z", "w0"), ("w0", "z0"), ("z", "w0'"), ("w0'", "z0'"), ("z0'", "w0")]
    if not primed:
        edges.append(("z", "w'"))
    return _build(edges, "x")


def _q_family(i: int, primed: bool) -> Bigraph:
    path = ["x1"] + [
        ("y%d" % ((k + 1) // 2)) if k % 2 else ("x%d" % (k // 2 + 1))
        for k in range(1, i)
    ]
    path[i - 1] = "u"
    edges = [("x1''", "y1''"),
             ("x2''", "y1''"), ("x2''", "y2''"), ("x2''", "y4''"), ("x2''", "y5''"),
             ("x3''", "y1''"), ("x3''", "y3''"), ("x3''", "y4''"), ("x3''", "y5''"),
             ("x4''", "y2''"), ("x4''", "y5''"),
             ("x5''", "y1''"), ("x5''", "y4''"), ("x5''", "y5''")]
    edges += [(path[0], "y2''"), (path[0], "y5''")]
    edges += _path_edges(path)
    for k in range(i - 1):
        pend = ("y%d'" % (k // 2 + 1)) if k % 2 == 0 else ("x%d'" % ((k + 1) // 2 + 1))
        edges.append((path[k], pend))
    edges += [("u", "v'"), ("u", "v''")]
    if not primed:
        edges += [("v'", "t'"), ("v''", "t''")]
    return _build(edges, "x1''")


def _s_family(i: int, primed: bool) -> Bigraph:
    path = _alt_labels("x", i, "y%d", "x%d")
    path[i] = "u"
    edges = [("x", "y0"), ("x0", "y0"), ("x", "y'"), ("x'", "y'"), ("x", "y1'")]
    edges += [("x1''", "y1'"), ("x1''", path[1])]
    edges += _path_edges(path)
    for k in range(1, i):
        pend = ("x%d'" % ((k + 1) // 2)) if k % 2 else ("y%d'" % (k // 2 + 1))
        edges.append((path[k], pend))
    edges += [("u", "v'"), ("u", "v''")]
    if not primed:
        edges += [("v'", "t'"), ("v''", "t''")]
    return _build(edges, "x")


def _r_family(i: int, primed: bool) -> Bigraph:
    path = _alt_labels("x", i, "y%d", "x%d")
    path[i] = "u"
    edges = [("x", "y'"), ("x'", "y'"), ("x", "y1''"), ("x1''", "y1''"),
             ("x", "y2''"), ("x''", "y2''"), ("x''", "y1''"), ("x", "y1'")]
    edges += _path_edges(path)
    for k in range(1, i):
        pend = ("x%d'" % ((k + 1) // 2)) if k % 2 else ("y%d'" % (k // 2 + 1))
        edges.append((path[k], pend))
    edges += [("u", "v'"), ("u", "v''")]
    if not primed:
        edges += [("v'", "t'"), ("v''", "t''")]
    return _build(edges, "x")


def _two_leg_terminal(edges: list, term: str, stem: str) -> None:
    edges += [(term, f"{stem}1a"), (f"{stem}1a", f"{stem}1b"),
              (term, f"{stem}2a"), (f"{stem}2a", f"{stem}2b")]


def _l_family(i: int, j: int) -> Bigraph:
    edges = [("c", "c0"), ("c", "d1"), ("d1", "d2")]
    left = [f"a{k}" for k in range(1, i + 1)]
    edges.append(("c", left[0]))
    edges += _path_edges(left)
    for v in left[:-1]:
        edges.append((v, v + "p"))
    _two_leg_terminal(edges, left[-1], "aL")
    right = [f"b{k}" for k in range(1, j + 1)]
    edges.append(("c", right[0]))
    edges += _path_edges(right)
    for v in right[:-1]:
        edges.append((v, v + "p"))
    _two_leg_terminal(edges, right[-1], "bL")
    return _build(edges, "c")


def _m_family(i: int) -> Bigraph:
    edges = [("sq1", "sq2"), ("sq2", "sq3"), ("sq3", "sq4"), ("sq4", "sq1"),
             ("sq1", "e1"), ("sq3", "e2"), ("sq2", "e3")]
    path = [f"r{k}" for k in range(1, i + 1)]
    edges.append(("sq2", path[0]))
    edges += _path_edges(path)
    for v in path[:-1]:
        edges.append((v, v + "p"))
    _two_leg_terminal(edges, path[-1], "rL")
    return _build(edges, "sq1")


def _n_family(i: int) -> Bigraph:
    edges = [("n1", "n2"), ("n2", "n3"), ("n3", "n4"), ("n4", "n5"),
             ("n5", "n6"), ("n6", "n1"), ("n2", "n5"),
             ("n6", "e1"), ("n5", "e2"), ("d", "n2"), ("d", "n4")]
    path = ["d"] + [f"r{k}" for k in range(2, i + 1)]
    edges += _path_edges(path)
    for v in path[:-1]:
        edges.append((v, v + "p"))
    _two_leg_terminal(edges, path[-1], "rL")
    return _build(edges, "n1")


def _hp_family(i: int) -> Bigraph:
    edges = [("h1", "h2"), ("h2", "h3"), ("h3", "h4"), ("h4", "h5"),
             ("h5", "h6"), ("h6", "h1"), ("h3", "h6"), ("h3", "e1")]
    path = [f"r{k}" for k in range(1, i + 1)]
    edges.append(("h3", path[0]))
    edges += _path_edges(path)
    for v in path[:-1]:
        edges.append((v, v + "p"))
    _two_leg_terminal(edges, path[-1], "rL")
    return _build(edges, "h1")


_FAMILY_BUILDERS = {
    "Kfam": lambda fid: _k_family(fid.i, fid.j, fid.primed),
    "P": lambda fid: _p_family(fid.i, fid.primed),
    "T": lambda fid: _t_family(fid.i, fid.j, fid.primed),
    "Q": lambda fid: _q_family(fid.i, fid.primed),
    "S": lambda fid: _s_family(fid.i, fid.primed),
    "R": lambda fid: _r_family(fid.i, fid.primed),
    "L": lambda fid: _l_family(fid.i, fid.j),
    "Mfam": lambda fid: _m_family(fid.i),
    "N": lambda fid: _n_family(fid.i),
    "Hp": lambda fid: _hp_family(fid.i),
}

SPECIAL_VERTICES = ("u", "v'", "v''")


def tilde(fid: FamilyId) -> Bigraph:
    """Delete the special pendants from the primed graph and glue B0 at u."""
    if fid.tag not in TILDE_TAGS:
        raise UnsupportedConstructionError(
            f"tilde needs a primed construction published for {fid.tag}"
        )
    base = generate(FamilyId(fid.tag, fid.i, fid.j, primed=True))
    keep = [v for v in base.vertices if v not in ("v'", "v''")]
    edges = [(a, b) for a, b in base.edges if a in keep and b in keep]
    edges += [("u", "v0"), ("u", "v0'"), ("u", "v0''"),
              ("v0'", "u0"), ("u0", "v0''"), ("v0''", "u0'")]
    anchor = base.xs[0] if base.xs[0] != "v'" else base.xs[1]
    return _build(edges, anchor)


def generate(fid: FamilyId) -> Bigraph:
    """Deterministic generator for every catalog member and pinned variant."""
    if fid.tilde:
        return tilde(fid)
    if fid.tag in FIXED_TAGS:
        edges, anchor = _FIXED[fid.tag]
        return _build(edges, anchor)
    return _FAMILY_BUILDERS[fid.tag](fid)


@dataclass(frozen=True)
class CatalogEntry:
    fid: FamilyId
    graph: Bigraph


def _sweep_one(tag: str, bound: int, tilde_: bool) -> list:
    out = []
    i = 1
    while True:
        fid = FamilyId(tag, i, tilde=tilde_)
        g = generate(fid)
        if len(g.vertices) > bound:
            break
        out.append(CatalogEntry(fid, g))
        i += 1
    return out


def _sweep_two(tag: str, bound: int, tilde_: bool) -> list:
    out = []
    i = 1
    while True:
        fid = FamilyId(tag, i, 1, tilde=tilde_)
        if len(generate(fid).vertices) > bound:
            break
        j = 1
        while True:
            fid = FamilyId(tag, i, j, tilde=tilde_)
            g = generate(fid)
            if len(g.vertices) > bound:
                break
            out.append(CatalogEntry(fid, g))
            j += 1
        i += 1
    return out


def forbidden_catalog(max_vertices: int) -> list:
    """Every forbidden graph with at most max_vertices vertices, once each."""
    out = []
    for tag in ("F2", "F4", "F5", "F8", "F9", "F11", "F12", "B1", "B2", "K", "M", "H0"):
        g = generate(FamilyId(tag))
        if len(g.vertices) <= max_vertices:
            out.append(CatalogEntry(FamilyId(tag), g))
    for tag in ("L", "Kfam", "T"):
        out += _sweep_two(tag, max_vertices, False)
    for tag in ("Mfam", "N", "Hp", "P", "Q", "R", "S"):
        out += _sweep_one(tag, max_vertices, False)
    for tag in TILDE_TAGS:
        if tag in TWO_PARAM_TAGS:
            out += _sweep_two(tag, max_vertices, True)
        else:
            out += _sweep_one(tag, max_vertices, True)
    return out
