"""Constructive conversion of closed representations into mixed proper ones.

A bad pair (inner, outer) in a closed representation forces a layered
structure: Z_1 holds the vertices right of inner that meet outer, and each
two-element layer {a_k, b_k} (interleaved, not left-distinguishable) spawns
the next layer from the vertices right of a_k meeting b_k, ending in a
singleton; symmetrically on the left.  Rewriting layer k to span
[r(b_{k-1}), r(b_k)] (upper closed, lower closed-open; mirrored with
open-closed intervals on the left) keeps the representation valid, pins the
innermost layers exactly onto the outer interval's endpoints -- making the
pair clean -- after which the inner vertex becomes the open copy of the
outer interval and stops being a bad pair.

Every structural precondition is checked at runtime and every intermediate
representation is re-validated, so inputs that are not minimum-bad-pair
representations fail loudly instead of corrupting silently.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple, Union

from .bigraph import Bigraph
from .intervals import Interval, intersects
from .representation import (
    BadPair,
    Representation,
    is_mixed_proper,
    list_bad_pairs,
    validate,
)


class RepairError(ValueError):
    pass


class NotMinimalRepresentation(RepairError):
    pass


class StructureViolation(RepairError):
    def __init__(self, claim: str, message: str):
        super().__init__(f"{claim}: {message}")
        self.claim = claim


class RewriteInvalid(RepairError):
    pass


class NotClean(RepairError):
    pass


@dataclass
class BadPairStructure:
    pair: BadPair
    right_layers: List[List[str]]
    left_layers: List[List[str]]
    witnesses: Tuple[str, str]

    @property
    def k_r(self) -> int:
        return len(self.right_layers)

    @property
    def k_l(self) -> int:
        return len(self.left_layers)


@dataclass
class FailureReport:
    pair: Optional[BadPair]
    claim: str
    message: str


def claim1_witnesses(b: Bigraph, rep: Representation, p: BadPair) -> Tuple[str, str]:
    """Vertices z1, z2 with l(outer) <= r(z1) < l(inner) and
    r(inner) < l(z2) <= r(outer), on the side opposite the inner vertex.

    Equality at the outer endpoints covers the clean case; absence of a
    witness means the representation is not bad-pair-minimal.
    """
    if p not in list_bad_pairs(rep):
        raise RepairError(f"({p.inner},{p.outer}) is not a bad pair of this representation")
    inner, outer = rep[p.inner], rep[p.outer]
    side = b.side(p.inner)
    z1 = z2 = None
    for v in b.vertices:
        if v in (p.inner, p.outer) or b.side(v) == side:
            continue
        iv = rep[v]
        if outer.lo <= iv.hi < inner.lo and (z1 is None or iv.hi > rep[z1].hi):
            z1 = v
        if inner.hi < iv.lo <= outer.hi and (z2 is None or iv.lo < rep[z2].lo):
            z2 = v
    if z1 is None or z2 is None:
        raise NotMinimalRepresentation(
            f"bad pair ({p.inner},{p.outer}) lacks flanking witnesses; "
            "representation cannot be bad-pair-minimal"
        )
    return z1, z2


def _check_no_left_distinguisher(b, rep, lower, upper, claim):
    for w in b.vertices:
        if w in (lower, upper) or b.side(w) == b.side(upper):
            continue
        if rep[w].hi < rep[upper].lo and intersects(rep[w], rep[lower]):
            raise StructureViolation(
                claim, f"{w} distinguishes {lower} and {upper} from the left"
            )


def _check_no_right_distinguisher(b, rep, lower, upper, claim):
    for w in b.vertices:
        if w in (lower, upper) or b.side(w) == b.side(lower):
            continue
        if rep[w].lo > rep[lower].hi and intersects(rep[w], rep[upper]):
            raise StructureViolation(
                claim, f"{w} distinguishes {lower} and {upper} from the right"
            )


def extract_structure(b: Bigraph, rep: Representation, p: BadPair) -> BadPairStructure:
    """Compute and verify the layer sets flanking a bad pair."""
    z1, z2 = claim1_witnesses(b, rep, p)
    verts = list(b.vertices)

    def grow(rightward: bool) -> List[List[str]]:
        # layers hold only the alternating edge-relevant side; same-side
        # bystanders are left to the post-rewrite validation
        layers: List[List[str]] = []
        want = "Y" if b.side(p.inner) == "X" else "X"
        if rightward:
            members = [
                v for v in verts
                if v != p.outer and b.side(v) == want
                and rep[v].lo > rep[p.inner].hi
                and intersects(rep[v], rep[p.outer])
            ]
        else:
            members = [
                v for v in verts
                if v != p.outer and b.side(v) == want
                and rep[v].hi < rep[p.inner].lo
                and intersects(rep[v], rep[p.outer])
            ]
        while True:
            if not members:
                raise StructureViolation(
                    "Claim 4", "layer ran empty before reaching a singleton"
                )
            want = "Y" if want == "X" else "X"
            members.sort(key=lambda v: (rep[v].lo, rep[v].hi))
            layers.append(members)
            if len(members) == 1:
                return layers
            if len(members) > 2:
                raise StructureViolation(
                    "Claim 4", f"layer {sorted(members)} has more than two vertices"
                )
            a, bb = members if rightward else members[::-1]
            # a reaches less far than bb in the growth direction
            ia, ib = rep[a], rep[bb]
            if rightward:
                if not (ia.lo < ib.lo < ia.hi < ib.hi):
                    raise StructureViolation(
                        "Claim 4", f"layer {{{a},{bb}}} is not interleaved"
                    )
                _check_no_left_distinguisher(b, rep, a, bb, "Claim 4")
                members = [
                    v for v in verts
                    if v not in (a, bb) and b.side(v) == want
                    and rep[v].lo > ia.hi and intersects(rep[v], ib)
                ]
            else:
                if not (ib.lo < ia.lo < ib.hi < ia.hi):
                    raise StructureViolation(
                        "Claim 4", f"layer {{{a},{bb}}} is not interleaved"
                    )
                _check_no_right_distinguisher(b, rep, bb, a, "Claim 4")
                members = [
                    v for v in verts
                    if v not in (a, bb) and b.side(v) == want
                    and rep[v].hi < ia.lo and intersects(rep[v], ib)
                ]

    right = grow(True)
    left = grow(False)
    bps = list_bad_pairs(rep)
    # the claim covers the two-element layers only; terminal singletons may
    # themselves sit in another bad pair
    layer_verts = {
        v for layer in right + left if len(layer) == 2 for v in layer
    }
    for q in bps:
        if q != p and (q.inner in layer_verts or q.outer in layer_verts):
            raise StructureViolation(
                "Claim 5", f"layer vertex occurs in bad pair ({q.inner},{q.outer})"
            )
    return BadPairStructure(p, right, left, (z1, z2))


def rewrite_right(b: Bigraph, rep: Representation, s: BadPairStructure) -> Representation:
    """Collapse each right layer onto [r(previous upper), r(upper)]."""
    out = dict(rep)
    prev_hi = rep[s.pair.outer].hi
    for k, layer in enumerate(s.right_layers):
        if len(layer) == 1:
            v = layer[0]
            out[v] = Interval(prev_hi, rep[v].hi, True, True)
        else:
            lower, upper = layer
            hi = rep[upper].hi
            out[upper] = Interval(prev_hi, hi, True, True)
            out[lower] = Interval(prev_hi, hi, True, False)
            prev_hi = hi
    report = validate(b, out)
    if not report.valid:
        raise RewriteInvalid(
            f"right rewrite broke validity: missing={report.missing_edges} "
            f"spurious={report.spurious_edges}"
        )
    return out


def rewrite_left(b: Bigraph, rep: Representation, s: BadPairStructure) -> Representation:
    """Mirror image: collapse each left layer onto [l(far), l(previous far)]."""
    out = dict(rep)
    prev_lo = rep[s.pair.outer].lo
    for layer in s.left_layers:
        if len(layer) == 1:
            v = layer[0]
            out[v] = Interval(rep[v].lo, prev_lo, True, True)
        else:
            far, near = layer  # sorted by lo: far reaches further left
            lo = rep[far].lo
            out[far] = Interval(lo, prev_lo, True, True)
            out[near] = Interval(lo, prev_lo, False, True)
            prev_lo = lo
    report = validate(b, out)
    if not report.valid:
        raise RewriteInvalid(
            f"left rewrite broke validity: missing={report.missing_edges} "
            f"spurious={report.spurious_edges}"
        )
    return out


def finish_clean(b: Bigraph, rep: Representation, p: BadPair) -> Representation:
    """Replace the inner interval by the open copy of the outer one."""
    inner, outer = rep[p.inner], rep[p.outer]
    side = b.side(p.inner)
    has_z1 = any(
        rep[v].hi == outer.lo
        for v in b.vertices
        if v not in (p.inner, p.outer) and b.side(v) != side
    )
    has_z2 = any(
        rep[v].lo == outer.hi
        for v in b.vertices
        if v not in (p.inner, p.outer) and b.side(v) != side
    )
    if not (has_z1 and has_z2):
        raise NotClean(
            f"bad pair ({p.inner},{p.outer}) is not clean: no witnesses with "
            "endpoints matching the outer interval"
        )
    out = dict(rep)
    out[p.inner] = Interval(outer.lo, outer.hi, False, False)
    report = validate(b, out)
    if not report.valid:
        raise RewriteInvalid(
            f"open-copy step broke validity: missing={report.missing_edges} "
            f"spurious={report.spurious_edges}"
        )
    return out


def repair(
    b: Bigraph, rep: Representation, trace: Optional[list] = None
) -> Union[Representation, FailureReport]:
    """Drive the bad-pair count to zero, validating every step.

    Copies sharing one interval are contracted first (the layer structure
    presumes a copy-free bigraph) and re-expanded at the end.  Success is
    guaranteed only from a minimum-bad-pair representation; other inputs
    either succeed anyway or return a FailureReport naming the violated
    claim.
    """
    from .bigraph import copy_quotient

    report = validate(b, rep)
    if not report.valid:
        raise RepairError("input representation is not valid for the bigraph")
    q, rep_of = copy_quotient(b)
    if len(q.vertices) < len(b.vertices) and all(
        rep[v] == rep[rep_of[v]] for v in b.vertices
    ):
        inner = repair(q, {v: rep[v] for v in q.vertices}, trace)
        if isinstance(inner, FailureReport):
            return inner
        full = {v: inner[rep_of[v]] for v in b.vertices}
        final = validate(b, full)
        if not final.valid:
            return FailureReport(None, "copy-expansion", "expanded representation invalid")
        return full
    current = dict(rep)
    cap = len(list_bad_pairs(current)) + 2
    iterations = 0
    while True:
        bps = list_bad_pairs(current)
        if not bps:
            break
        if iterations >= cap:
            return FailureReport(bps[0], "cap", "iteration cap exceeded")
        pair = max(
            bps,
            key=lambda q: (current[q.outer].hi - current[q.outer].lo, q.outer, q.inner),
        )
        try:
            s = extract_structure(b, current, pair)
            step = rewrite_right(b, current, s)
            if trace is not None:
                trace.append((f"rewrite_right({pair.inner},{pair.outer})", dict(step)))
            step = rewrite_left(b, step, s)
            if trace is not None:
                trace.append((f"rewrite_left({pair.inner},{pair.outer})", dict(step)))
            step = finish_clean(b, step, pair)
            if trace is not None:
                trace.append((f"finish_clean({pair.inner},{pair.outer})", dict(step)))
        except StructureViolation as e:
            return FailureReport(pair, e.claim, str(e))
        except (NotMinimalRepresentation, NotClean, RewriteInvalid) as e:
            return FailureReport(pair, type(e).__name__, str(e))
        if len(list_bad_pairs(step)) > len(bps) - 1:
            return FailureReport(pair, "monotonicity", "bad-pair count failed to drop")
        current = step
        iterations += 1
    if not is_mixed_proper(current):
        return FailureReport(None, "mixed-proper", "zero bad pairs but twin condition fails")
    return current
