"""Bipartite graph model with a fixed, labeled bipartition.

A bigraph B = (X, Y, E) has edges only between the two sides.  Isomorphism
and induced-subgraph search respect the bipartition but also try the
side-swapped orientation, since an abstract bipartite graph does not
distinguish X from Y.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional


class GraphFormatError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class UnknownVertexError(KeyError):
    def __init__(self, label: str):
        super().__init__(label)
        self.label = label

    def __str__(self):
        return f"unknown vertex {self.label!r}"


class Bigraph:
    """Immutable simple bigraph; adjacency is precomputed on construction."""

    __slots__ = ("xs", "ys", "edges", "_adj", "_side")

    def __init__(self, xs: Iterable[str], ys: Iterable[str], edges: Iterable[tuple]):
        xs = tuple(dict.fromkeys(xs))
        ys = tuple(dict.fromkeys(ys))
        side = {}
        for v in xs:
            side[v] = "X"
        for v in ys:
            if v in side:
                raise ValueError(f"vertex {v!r} listed on both sides")
            side[v] = "Y"
        adj = {v: set() for v in side}
        norm = set()
        for a, b in edges:
            if a not in side:
                raise UnknownVertexError(a)
            if b not in side:
                raise UnknownVertexError(b)
            if side[a] == side[b]:
                raise ValueError(f"edge {a!r}-{b!r} joins two {side[a]} vertices")
            x, y = (a, b) if side[a] == "X" else (b, a)
            norm.add((x, y))
            adj[x].add(y)
            adj[y].add(x)
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "ys", ys)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "_adj", {v: frozenset(s) for v, s in adj.items()})
        object.__setattr__(self, "_side", side)

    def __setattr__(self, name, value):
        raise AttributeError("Bigraph is immutable")

    @property
    def vertices(self) -> tuple:
        return self.xs + self.ys

    def side(self, v: str) -> str:
        try:
            return self._side[v]
        except KeyError:
            raise UnknownVertexError(v) from None

    def neighbors(self, v: str) -> frozenset:
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertexError(v) from None

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))

    def has_edge(self, a: str, b: str) -> bool:
        return b in self.neighbors(a)

    def swap(self) -> "Bigraph":
        return Bigraph(self.ys, self.xs, self.edges)

    def induced(self, keep: Iterable[str]) -> "Bigraph":
        keep = set(keep)
        for v in keep:
            if v not in self._side:
                raise UnknownVertexError(v)
        return Bigraph(
            (v for v in self.xs if v in keep),
            (v for v in self.ys if v in keep),
            ((x, y) for (x, y) in self.edges if x in keep and y in keep),
        )

    def is_connected(self) -> bool:
        verts = self.vertices
        if not verts:
            return True
        seen = {verts[0]}
        stack = [verts[0]]
        while stack:
            for w in self._adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(verts)

    def __eq__(self, other):
        if not isinstance(other, Bigraph):
            return NotImplemented
        return (
            set(self.xs) == set(other.xs)
            and set(self.ys) == set(other.ys)
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((frozenset(self.xs), frozenset(self.ys), self.edges))

    def __repr__(self):
        return f"Bigraph(|X|={len(self.xs)}, |Y|={len(self.ys)}, |E|={len(self.edges)})"


@dataclass(frozen=True)
class Embedding:
    """Injective induced embedding of a pattern into a host."""

    mapping: dict
    side_swapped: bool

    def __post_init__(self):
        object.__setattr__(self, "mapping", dict(self.mapping))


def neighbors(b: Bigraph, v: str) -> frozenset:
    return b.neighbors(v)


def find_copies(b: Bigraph) -> list:
    """All unordered pairs {u, v} with identical neighborhoods (false twins)."""
    verts = b.vertices
    out = []
    for u, v in itertools.combinations(verts, 2):
        if b.neighbors(u) == b.neighbors(v):
            out.append(frozenset((u, v)))
    return out


def copy_classes(b: Bigraph) -> list:
    """Partition of the vertices into same-side identical-neighborhood classes."""
    groups: dict = {}
    for v in b.vertices:
        groups.setdefault((b.side(v), b.neighbors(v)), []).append(v)
    return [sorted(g) for g in groups.values()]


def copy_quotient(b: Bigraph):
    """Contract each copy class to its first member; returns (quotient, class map)."""
    classes = copy_classes(b)
    rep_of = {v: cls[0] for cls in classes for v in cls}
    keep = sorted({cls[0] for cls in classes})
    q = Bigraph(
        (v for v in b.xs if v in keep and rep_of[v] == v),
        (v for v in b.ys if v in keep and rep_of[v] == v),
        {(rep_of[x], rep_of[y]) for x, y in b.edges},
    )
    return q, rep_of


def induced_subgraph_search(host: Bigraph, pattern: Bigraph, limit: Optional[int] = None) -> list:
    """Find induced side-consistent embeddings of pattern into host.

    Both side orientations of the pattern are tried.  Pattern vertices are
    matched in descending-degree order with degree pruning.
    """
    if limit is not None and limit < 1:
        raise ValueError("limit must be >= 1 or None")
    results: list = []
    for swapped in (False, True):
        pat = pattern.swap() if swapped else pattern
        if len(pat.xs) > len(host.xs) or len(pat.ys) > len(host.ys):
            continue
        order = sorted(pat.vertices, key=lambda v: (-pat.degree(v), v))
        # prefer vertices adjacent to already-placed ones to keep pruning tight
        placed_order = []
        remaining = list(order)
        while remaining:
            pick = None
            for v in remaining:
                if any(u in placed_order for u in pat.neighbors(v)):
                    pick = v
                    break
            if pick is None:
                pick = remaining[0]
            placed_order.append(pick)
            remaining.remove(pick)
        host_by_side = {"X": host.xs, "Y": host.ys}
        mapping: dict = {}
        used = set()

        def extend(k: int) -> bool:
            if k == len(placed_order):
                results.append(Embedding(dict(mapping), swapped))
                return limit is not None and len(results) >= limit
            p = placed_order[k]
            pside = pat.side(p)
            pnbrs = pat.neighbors(p)
            for h in host_by_side[pside]:
                if h in used or host.degree(h) < pat.degree(p):
                    continue
                ok = True
                for q, hq in mapping.items():
                    if (q in pnbrs) != host.has_edge(h, hq):
                        ok = False
                        break
                if not ok:
                    continue
                mapping[p] = h
                used.add(h)
                if extend(k + 1):
                    return True
                del mapping[p]
                used.discard(h)
            return False

        if extend(0):
            return results
    return results


def contains_induced(host: Bigraph, pattern: Bigraph) -> bool:
    return bool(induced_subgraph_search(host, pattern, limit=1))


# ---------------------------------------------------------------------------
# Canonical form: color refinement plus backtracking over both orientations.


def _refine(n: int, adj: list, colors: list) -> list:
    while True:
        sig = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(n)]
        lut = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [lut[s] for s in sig]
        if new == colors:
            return colors
        colors = new


def _canon_code_oriented(nx: int, adj: list) -> tuple:
    n = len(adj)
    colors = _refine(n, adj, [0 if v < nx else 1 for v in range(n)])

    best: list = [None]

    def search(colors):
        cells: dict = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            perm = sorted(range(n), key=lambda v: colors[v])
            pos = {v: i for i, v in enumerate(perm)}
            code = tuple(
                tuple(sorted(pos[w] for w in adj[v])) for v in perm
            )
            if best[0] is None or code < best[0]:
                best[0] = code
            return
        for v in target:
            branched = list(colors)
            branched[v] = -1  # fresh color: individualize v within its cell
            search(_refine(n, adj, branched))

    search(colors)
    return (nx, n - nx) + best[0]


def canonical_form(b: Bigraph) -> tuple:
    """Canonical code equal across isomorphic bigraphs, side swap included."""
    verts = list(b.xs) + list(b.ys)
    idx = {v: i for i, v in enumerate(verts)}
    adj = [sorted(idx[w] for w in b.neighbors(v)) for v in verts]
    code = _canon_code_oriented(len(b.xs), adj)
    sverts = list(b.ys) + list(b.xs)
    sidx = {v: i for i, v in enumerate(sverts)}
    sadj = [sorted(sidx[w] for w in b.neighbors(v)) for v in sverts]
    scode = _canon_code_oriented(len(b.ys), sadj)
    return min(code, scode)


def are_isomorphic(a: Bigraph, b: Bigraph) -> bool:
    return canonical_form(a) == canonical_form(b)


# ---------------------------------------------------------------------------
# Exhaustive enumeration of small connected bipartite graphs.


def enumerate_connected_bipartite(max_n: int) -> Iterator[Bigraph]:
    """One representative per isomorphism class, n <= max_n, side swap folded in."""
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    for n in range(1, max_n + 1):
        seen = set()
        for a in range(0, n // 2 + 1):
            b = n - a
            if a == 0:
                if n == 1:
                    g = Bigraph(("x1",), (), ())
                    code = canonical_form(g)
                    if code not in seen:
                        seen.add(code)
                        yield g
                continue
            xs = tuple(f"x{i+1}" for i in range(a))
            ys = tuple(f"y{i+1}" for i in range(b))
            pairs = [(i, j) for i in range(a) for j in range(b)]
            m = len(pairs)
            row = [0] * a
            col = [0] * b
            for k, (i, j) in enumerate(pairs):
                row[i] |= 1 << k
                col[j] |= 1 << k
            for mask in range(1 << m):
                if mask.bit_count() < n - 1:
                    continue
                if any(not mask & r for r in row) or any(not mask & c for c in col):
                    continue
                sel = [pairs[k] for k in range(m) if mask >> k & 1]
                adj = {v: [] for v in range(n)}
                for i, j in sel:
                    adj[i].append(a + j)
                    adj[a + j].append(i)
                seen_v = {0}
                stack = [0]
                while stack:
                    for w in adj[stack.pop()]:
                        if w not in seen_v:
                            seen_v.add(w)
                            stack.append(w)
                if len(seen_v) != n:
                    continue
                g = Bigraph(xs, ys, [(xs[i], ys[j]) for i, j in sel])
                code = canonical_form(g)
                if code not in seen:
                    seen.add(code)
                    yield g


# ---------------------------------------------------------------------------
# Text format: `X a b`, `Y c d`, `E a c` lines; '#' starts a comment.


def parse_graph(text: str) -> Bigraph:
    xs: list = []
    ys: list = []
    edges: list = []
    labels = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind, args = parts[0], parts[1:]
        if kind == "X" or kind == "Y":
            for lbl in args:
                if lbl in labels:
                    raise GraphFormatError(lineno, f"duplicate label {lbl!r}")
                labels.add(lbl)
                (xs if kind == "X" else ys).append(lbl)
        elif kind == "E":
            if len(args) != 2:
                raise GraphFormatError(lineno, "edge line needs exactly two labels")
            edges.append((lineno, args[0], args[1]))
        else:
            raise GraphFormatError(lineno, f"unknown directive {kind!r}")
    xset, yset = set(xs), set(ys)
    for lineno, a, b in edges:
        if a not in labels:
            raise GraphFormatError(lineno, f"edge uses undeclared label {a!r}")
        if b not in labels:
            raise GraphFormatError(lineno, f"edge uses undeclared label {b!r}")
        if (a in xset) == (b in xset):
            raise GraphFormatError(lineno, f"edge {a!r}-{b!r} has both ends on one side")
    return Bigraph(xs, ys, [(a, b) for _, a, b in edges])


def format_graph(b: Bigraph) -> str:
    lines = []
    if b.xs:
        lines.append("X " + " ".join(b.xs))
    if b.ys:
        lines.append("Y " + " ".join(b.ys))
    for x, y in sorted(b.edges):
        lines.append(f"E {x} {y}")
    return "\n".join(lines) + "\n"
