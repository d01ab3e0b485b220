"""Brute-force recognition of mixed unit interval bigraphs.

Unit intervals are determined by their left endpoint plus two boundary
flags, and two unit intervals meet iff their left endpoints differ by less
than 1, or by exactly 1 with both touching ends closed.  Recognition
therefore reduces to a difference-constraint system over left endpoints:

* edge u~v:        l(v)-l(u) <= 1 and l(u)-l(v) <= 1, each strict unless
                   the touching ends are both closed;
* non-edge u,v:    one of l(v)-l(u) >= 1 / l(u)-l(v) >= 1 (branched),
                   strict iff the touching ends are both closed.

The search branches over non-edge orientations only.  Boundary flags never
need enumeration: an orientation is realizable iff the integer-weight
constraint graph has no negative cycle and the flag demands collected from
its zero-weight cycles are consistent (every constraint on a zero cycle is
tight in every solution, so an edge touch there forces closed ends and a
non-edge touch forbids them; all other flags are free).  UNSAT is reported
only after the orientation tree is exhausted, and every SAT witness is
validated before being returned.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Optional

from .bigraph import Bigraph
from .intervals import Interval
from .representation import Representation, list_bad_pairs, validate, is_mixed_unit

INF = 1 << 40


@dataclass(frozen=True)
class DifferenceConstraint:
    """value(hi) - value(lo) <= bound, strict when flagged."""

    hi: str
    lo: str
    bound: Fraction
    strict: bool = False

    def __post_init__(self):
        if self.hi == self.lo:
            raise ValueError("constraint needs two distinct variables")
        object.__setattr__(self, "bound", Fraction(self.bound))


def solve_difference_constraints(
    constraints: Iterable[DifferenceConstraint], variables: Iterable[str]
) -> Optional[Dict[str, Fraction]]:
    """Feasible rational assignment, or None.

    Bellman-Ford over lexicographic weights (bound, strict-count): a cycle of
    total bound < 0, or = 0 with a strict edge, is infeasible.  A feasible
    system is realized as w - eps*s with eps below every positive slack.
    """
    variables = list(dict.fromkeys(variables))
    cs = list(constraints)
    for c in cs:
        if c.hi not in variables or c.lo not in variables:
            raise ValueError(f"constraint uses unknown variable: {c}")
    dist = {v: (Fraction(0), 0) for v in variables}

    def relaxed_once() -> bool:
        changed = False
        for c in cs:
            w, s = dist[c.lo]
            cand = (w + c.bound, s + (1 if c.strict else 0))
            cur = dist[c.hi]
            if cand[0] < cur[0] or (cand[0] == cur[0] and cand[1] > cur[1]):
                dist[c.hi] = cand
                changed = True
        return changed

    for _ in range(len(variables)):
        if not relaxed_once():
            break
    else:
        if relaxed_once():
            return None

    ratios = []
    for c in cs:
        dw = c.bound - (dist[c.hi][0] - dist[c.lo][0])
        ds = dist[c.hi][1] - dist[c.lo][1]
        if dw > 0 and ds < 0:
            ratios.append(Fraction(dw, -ds))
    eps = min(ratios) / 2 if ratios else Fraction(1, 2)
    eps = min(eps, Fraction(1, len(variables) + 1))
    return {v: w - s * eps for v, (w, s) in dist.items()}


@dataclass
class SearchStats:
    nodes: int = 0
    seconds: float = 0.0


@dataclass
class RecognitionOutcome:
    status: str  # "SAT" | "UNSAT" | "BudgetExceeded"
    witness: Optional[Representation] = None
    stats: SearchStats = field(default_factory=SearchStats)


class _Budget:
    def __init__(self, nodes, secs):
        self.nodes = nodes
        self.deadline = time.monotonic() + secs if secs is not None else None
        self.used = 0

    def tick(self) -> bool:
        self.used += 1
        if self.nodes is not None and self.used > self.nodes:
            return False
        if self.deadline is not None and not self.used % 256 and time.monotonic() > self.deadline:
            return False
        return True


def _closure_with_edges(n: int, arcs) -> Optional[list]:
    d = [[INF] * n for _ in range(n)]
    for v in range(n):
        d[v][v] = 0
    for a, b, w in arcs:
        if w < d[a][b]:
            d[a][b] = w
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            if dik == INF:
                continue
            di = d[i]
            for j in range(n):
                c = dik + dk[j]
                if c < di[j]:
                    di[j] = c
    for v in range(n):
        if d[v][v] < 0:
            return None
    return d


def _add_arc(d: list, n: int, a: int, b: int, w: int) -> list:
    """New closure matrix with constraint arc a->b of weight w added."""
    nd = [row[:] for row in d]
    if w < nd[a][b]:
        nd[a][b] = w
    for i in range(n):
        dia = d[i][a]
        if dia == INF:
            continue
        base = dia + w
        nrow = nd[i]
        brow = d[b]
        for j in range(n):
            c = base + brow[j]
            if c < nrow[j]:
                nrow[j] = c
    return nd


def _flags_consistent(d, cons):
    """Zero-cycle analysis: returns (forced_left_closed, forced_right_closed)
    flag sets or None when the demands clash."""
    forced_a = set()  # left end closed
    forced_b = set()  # right end closed
    clauses = []
    for a, b, w, p, q, needs in cons:
        if d[b][a] + w == 0:
            if needs:
                forced_b.add(p)
                forced_a.add(q)
            else:
                clauses.append((p, q))
    for p, q in clauses:
        if p in forced_b and q in forced_a:
            return None
    return forced_a, forced_b


def recognize_mixed_unit(
    b: Bigraph,
    budget_nodes: Optional[int] = None,
    budget_secs: Optional[float] = None,
    deterministic: bool = True,
) -> RecognitionOutcome:
    """Decide whether b has a mixed unit interval representation.

    SAT comes with a validated witness; UNSAT means the orientation search
    was exhausted; budget overruns surface as BudgetExceeded.
    """
    t0 = time.monotonic()
    verts = list(b.xs) + list(b.ys)
    n = len(verts)
    idx = {v: k for k, v in enumerate(verts)}
    if n == 0:
        return RecognitionOutcome("SAT", {}, SearchStats(0, 0.0))

    cons = []  # (from, to, weight, left_vertex, right_vertex, needs_touch)
    arcs = []
    for x, y in sorted(b.edges):
        u, v = idx[x], idx[y]
        cons.append((u, v, 1, verts[u], verts[v], True))
        cons.append((v, u, 1, verts[v], verts[u], True))
        arcs.append((u, v, 1))
        arcs.append((v, u, 1))
    nonedges = [
        (idx[x], idx[y])
        for x in b.xs
        for y in b.ys
        if not b.has_edge(x, y)
    ]

    budget = _Budget(budget_nodes, budget_secs)
    d0 = _closure_with_edges(n, arcs)
    if d0 is None or _flags_consistent(d0, cons) is None:
        return RecognitionOutcome("UNSAT", None, SearchStats(0, time.monotonic() - t0))

    witness_out: list = []

    def build_witness(d, cons_now) -> bool:
        res = _flags_consistent(d, cons_now)
        if res is None:
            return False
        forced_a, forced_b = res
        final = []
        for a, bb, w, p, q, needs in cons_now:
            touch_closed = p in forced_b and q in forced_a
            strict = (not touch_closed) if needs else touch_closed
            final.append(DifferenceConstraint(verts[bb], verts[a], Fraction(w), strict))
        sol = solve_difference_constraints(final, verts)
        if sol is None:
            return False
        rep = {
            v: Interval(sol[v], sol[v] + 1, v in forced_a, v in forced_b)
            for v in verts
        }
        report = validate(b, rep)
        assert report.valid and is_mixed_unit(rep), "witness failed validation"
        witness_out.append(rep)
        return True

    overflow = []

    def search(d, cons_now, undecided, first) -> bool:
        # returns True when SAT found; overflow flags budget exhaustion
        while True:
            forced = None
            for k, (p, q) in enumerate(undecided):
                left_ok = d[p][q] > 0
                right_ok = d[q][p] > 0
                if not left_ok and not right_ok:
                    return False
                if left_ok != right_ok:
                    forced = (k, (p, q) if left_ok else (q, p))
                    break
            if forced is None:
                break
            k, (p, q) = forced
            d = _add_arc(d, n, q, p, -1)
            cons_now = cons_now + [(q, p, -1, verts[p], verts[q], False)]
            if any(d[v][v] < 0 for v in range(n)):
                return False
            if _flags_consistent(d, cons_now) is None:
                return False
            undecided = undecided[:k] + undecided[k + 1 :]
        if _flags_consistent(d, cons_now) is None:
            return False
        if not undecided:
            return build_witness(d, cons_now)
        pick = min(
            range(len(undecided)),
            key=lambda k: (
                min(d[undecided[k][0]][undecided[k][1]], INF)
                + min(d[undecided[k][1]][undecided[k][0]], INF),
                k,
            ),
        )
        p, q = undecided[pick]
        rest = undecided[:pick] + undecided[pick + 1 :]
        orientations = ((p, q),) if first else ((p, q), (q, p))
        for pp, qq in orientations:
            if not budget.tick():
                overflow.append(True)
                return False
            if d[pp][qq] <= 0:
                continue
            nd = _add_arc(d, n, qq, pp, -1)
            ncons = cons_now + [(qq, pp, -1, verts[pp], verts[qq], False)]
            if _flags_consistent(nd, ncons) is None:
                continue
            if search(nd, ncons, rest, False):
                return True
            if overflow:
                return False
        return False

    found = search(d0, list(cons), nonedges, bool(nonedges))
    stats = SearchStats(budget.used, time.monotonic() - t0)
    if overflow:
        return RecognitionOutcome("BudgetExceeded", None, stats)
    if found:
        return RecognitionOutcome("SAT", witness_out[0], stats)
    return RecognitionOutcome("UNSAT", None, stats)


# ---------------------------------------------------------------------------
# Closed-interval (all ends closed) representations via endpoint orderings.


class SizeBoundExceeded(ValueError):
    pass


_DESK_LIMIT = 12


def _order_search(b: Bigraph, minimize: bool, weights: Optional[Dict[str, int]] = None):
    """Backtracking over the 2n endpoint-event orders.

    Opening v while a non-neighbor of the other side is open, or closing v
    before all its neighbors opened, is pruned.  For minimize=True, counts
    containment pairs (closing inside a still-open earlier interval),
    weighted when vertices stand for copy classes, and returns an exact
    minimizer by branch and bound.
    """
    verts = list(b.xs) + list(b.ys)
    n = len(verts)
    if n > _DESK_LIMIT:
        raise SizeBoundExceeded(f"endpoint-order search capped at {_DESK_LIMIT} vertices")
    if n == 0:
        return {}
    side = {v: b.side(v) for v in verts}
    nbrs = {v: set(b.neighbors(v)) for v in verts}
    w = weights or {v: 1 for v in verts}
    best_count = [None]
    best_events = [None]

    opened: Dict[str, int] = {}
    open_now: list = []
    events: list = []

    def rec(count: int) -> bool:
        if minimize:
            if best_count[0] is not None and count >= best_count[0]:
                return False
        if len(events) == 2 * n:
            best_count[0] = count
            best_events[0] = list(events)
            return not minimize or count == 0
        # close moves
        for v in list(open_now):
            if not nbrs[v] <= opened.keys():
                continue
            added = w[v] * sum(w[u] for u in open_now if u != v and opened[u] < opened[v])
            open_now.remove(v)
            events.append(("c", v))
            if rec(count + added):
                return True
            events.pop()
            open_now.append(v)
        # open moves
        for v in verts:
            if v in opened:
                continue
            if any(side[u] != side[v] and u not in nbrs[v] for u in open_now):
                continue
            opened[v] = len(opened)
            open_now.append(v)
            events.append(("o", v))
            if rec(count):
                return True
            events.pop()
            open_now.remove(v)
            del opened[v]
        return False

    rec(0)
    if best_events[0] is None:
        return None
    rep: Representation = {}
    lo: Dict[str, int] = {}
    for pos, (kind, v) in enumerate(best_events[0], start=1):
        if kind == "o":
            lo[v] = pos
        else:
            rep[v] = Interval(Fraction(lo[v]), Fraction(pos), True, True)
    return rep


def recognize_interval_closed(b: Bigraph) -> Optional[Representation]:
    """A closed representation with 2n distinct endpoints, or None."""
    rep = _order_search(b, minimize=False)
    if rep is not None:
        report = validate(b, rep)
        assert report.valid
    return rep


def min_bad_pair_representation(b: Bigraph) -> Optional[Representation]:
    """Closed representation minimizing the bad-pair count; exact by exhaustion.

    Copies share one interval (always at least as good, and required for the
    layered repair structure), so the search runs on the copy quotient with
    class sizes as containment weights.
    """
    from .bigraph import copy_quotient

    q, rep_of = copy_quotient(b)
    weights: Dict[str, int] = {}
    for v, r in rep_of.items():
        weights[r] = weights.get(r, 0) + 1
    rep = _order_search(q, minimize=True, weights=weights)
    if rep is None:
        return None
    full = {v: rep[rep_of[v]] for v in b.vertices}
    report = validate(b, full)
    assert report.valid
    return full
