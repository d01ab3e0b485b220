"""Explicit mixed unit interval models with closed-form tables.

Each fixture pairs a generated graph with the interval assignment that the
uniqueness arguments pin down for it.  The tables are keyed purely by vertex
label, so they instantiate at any parameter; tests check that the
intersection bigraph of every table equals the generator output under the
identity labeling, which guards both transcriptions against each other.

Where a table offers a choice ("closed" or "half-open" for the special
pendants, or for one end vertex in S'/R'), both variants are exposed;
`closed` is the default.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Optional, Tuple

from .bigraph import Bigraph
from .families import FamilyId, generate
from .intervals import Interval, cc, co, oc, oo
from .representation import Representation

FIXTURE_TAGS = (
    "H1", "H2_first", "H2_second", "H3_first", "H3_second", "F1", "F6",
    "Kp", "Pp", "Tp", "Qp", "Sp", "Rp",
)

VARIANTS = ("closed", "half_open")

_STATIC_TABLES = {
    "H1": ("H1", {
        "y2": cc(6, 7), "y1": cc(5, 6), "y3": cc(7, 8),
        "x1": cc(4, 5), "x4": cc(6, 7), "x3": cc(8, 9), "x2": oo(6, 7),
    }),
    "H2_first": ("H2", {
        "y2": cc(4, 5), "y1": cc(6, 7), "y4": cc(5, 6), "y3": cc(7, 8),
        "x2": cc(5, 6), "x3": cc(6, 7), "x1": oo(6, 7),
    }),
    "H2_second": ("H2", {
        "x2": cc(11, 12), "x1": cc(13, 14), "x3": cc(Fraction(23, 2), Fraction(25, 2)),
        "y2": cc(10, 11), "y1": cc(12, 13), "y4": cc(Fraction(21, 2), Fraction(23, 2)),
        "y3": oo(12, 13),
    }),
    "H3_first": ("H3", {
        "y1": cc(5, 6), "y2": cc(4, 5), "y3": cc(6, 7),
        "x2": cc(4, 5), "x3": cc(6, 7), "x4": cc(5, 6), "x1": oo(5, 6),
    }),
    "H3_second": ("H3", {
        "x4": cc(10, 11), "x2": cc(9, 10), "x3": cc(Fraction(21, 2), Fraction(23, 2)),
        "x1": cc(11, 12), "y2": cc(9, 10), "y1": cc(10, 11), "y3": oo(10, 11),
    }),
    "F1": ("F1", {
        "x1": cc(6, 7), "y0": cc(6, 7), "y1": cc(5, 6), "y2": cc(7, 8),
        "x3": cc(8, 9), "x2": cc(4, 5), "y3": oc(5, 6), "x0": oo(6, 7),
    }),
    "F6": ("F6", {
        "y5": cc(5, 6), "y3": cc(7, 8), "y1": cc(6, 7), "y4": cc(8, 9),
        "x2": cc(5, 6), "x3": cc(7, 8), "x5": cc(4, 5), "x4": cc(6, 7),
        "x1": oo(6, 7), "y2": oc(5, 6),
    }),
}

_RX = re.compile(r"^([xy])(\d+)('{0,3})$")


def _kp_interval(label: str, i: int, j: int, halfopen: bool) -> Interval:
    h = Fraction(1, 2)
    fixed = {
        "x0": oo(0, 1), "y0": cc(-h, h), "y": cc(-1, 0),
        "u": cc(j, j + 1),
        "v'": co(j + 1, j + 2) if halfopen else cc(j + 1, j + 2),
        "v''": co(j + 1, j + 2) if halfopen else cc(j + 1, j + 2),
        "z": cc(-i - Fraction(3, 2), -i - h),
        "w": cc(-i - Fraction(5, 2), -i - Fraction(3, 2)),
        "w'": oo(-i - Fraction(3, 2), -i - h),
        "z'": cc(-i - Fraction(7, 2), -i - Fraction(5, 2)),
        "z''": oo(-i - Fraction(3, 2), -i - h),
    }
    if label in fixed:
        return fixed[label]
    side, n, primes = _RX.match(label).groups()
    n = int(n)
    if side == "x":
        if primes == "":
            return cc(2 * n - 2, 2 * n - 1)
        if primes == "'":
            return co(2 * n, 2 * n + 1)
        if primes == "''":
            return cc(-2 * n + h, -2 * n + 1 + h)
        return oc(-2 * n - h, -2 * n + h)
    if primes == "":
        return cc(2 * n - 1, 2 * n)
    if primes == "'":
        return co(2 * n - 1, 2 * n)
    if primes == "''":
        return cc(-2 * n - h, -2 * n + h)
    return oc(-2 * n + h, -2 * n + 1 + h)


def _pp_interval(label: str, i: int, halfopen: bool) -> Interval:
    h = Fraction(1, 2)
    fixed = {
        "x1''": oo(0, 1), "y1''": cc(-h, h), "x2''": cc(-h, h),
        "y2''": cc(-1, 0), "x3''": cc(-1, 0), "y3''": cc(-Fraction(3, 2), -h),
        "y4''": cc(-2, -1),
        "u": cc(i - 1, i),
        "v'": co(i, i + 1) if halfopen else cc(i, i + 1),
        "v''": co(i, i + 1) if halfopen else cc(i, i + 1),
    }
    if label in fixed:
        return fixed[label]
    side, n, primes = _RX.match(label).groups()
    n = int(n)
    if side == "x":
        return cc(2 * n - 2, 2 * n - 1) if primes == "" else co(2 * n, 2 * n + 1)
    return cc(2 * n - 1, 2 * n) if primes == "" else co(2 * n - 1, 2 * n)


def _tp_interval(label: str, i: int, j: int) -> Interval:
    fixed = {
        "x": cc(0, 1), "x0": oo(0, 1), "y0": oo(0, 1), "y": oc(-1, 0),
        "u": cc(j, j + 1), "v0": cc(j + 1, j + 2), "v0'": co(j + 1, j + 2),
        "u0": cc(j + 2, j + 3), "u0'": oo(j + 1, j + 2), "v'": oc(j, j + 1),
        "z": cc(-i, -i + 1), "w0": cc(-i - 1, -i), "w0'": oc(-i - 1, -i),
        "z0'": oo(-i - 1, -i), "z0": cc(-i - 2, -i - 1),
    }
    if label in fixed:
        return fixed[label]
    side, n, primes = _RX.match(label).groups()
    n = int(n)
    if side == "x":
        if primes == "":
            return cc(2 * n, 2 * n + 1)
        if primes == "'":
            return co(2 * n - 1, 2 * n)
        if primes == "''":
            return cc(-2 * n, -2 * n + 1)
        return oc(-2 * n, -2 * n + 1)
    if primes == "":
        return cc(2 * n - 1, 2 * n)
    if primes == "'":
        return co(2 * n, 2 * n + 1)
    if primes == "''":
        return cc(-2 * n + 1, -2 * n + 2)
    return oc(-2 * n - 1, -2 * n)


def _qp_interval(label: str, i: int, halfopen: bool) -> Interval:
    fixed = {
        "x1''": oo(-1, 0), "y1''": cc(-1, 0), "x3''": cc(-1, 0),
        "y3''": cc(-2, -1), "x2''": cc(0, 1), "y5''": cc(0, 1),
        "x5''": co(0, 1), "y4''": co(0, 1), "y2''": cc(1, 2), "x4''": co(1, 2),
        "u": cc(i, i + 1),
        "v'": co(i + 1, i + 2) if halfopen else cc(i + 1, i + 2),
        "v''": co(i + 1, i + 2) if halfopen else cc(i + 1, i + 2),
    }
    if label in fixed:
        return fixed[label]
    side, n, primes = _RX.match(label).groups()
    n = int(n)
    if side == "x":
        return cc(2 * n - 1, 2 * n) if primes == "" else co(2 * n - 1, 2 * n)
    return cc(2 * n, 2 * n + 1) if primes == "" else co(2 * n, 2 * n + 1)


def _sp_interval(label: str, i: int, halfopen: bool) -> Interval:
    fixed = {
        "x": cc(0, 1), "y'": oo(0, 1), "x'": oo(0, 1), "y0": cc(-1, 0),
        "x0": oc(-2, -1) if halfopen else cc(-2, -1),
        "y1'": co(1, 2), "x1''": oo(1, 2),
        "u": cc(i, i + 1), "v'": cc(i + 1, i + 2), "v''": co(i + 1, i + 2),
    }
    if label in fixed:
        return fixed[label]
    side, n, primes = _RX.match(label).groups()
    n = int(n)
    if side == "x":
        return cc(2 * n, 2 * n + 1) if primes == "" else co(2 * n, 2 * n + 1)
    return cc(2 * n - 1, 2 * n) if primes == "" else co(2 * n - 1, 2 * n)


def _rp_interval(label: str, i: int, halfopen: bool) -> Interval:
    fixed = {
        "x": cc(0, 1), "y'": oo(0, 1), "x'": oo(0, 1), "y1''": cc(-1, 0),
        "x1''": oc(-2, -1) if halfopen else cc(-2, -1),
        "y2''": oc(-1, 0), "x''": oo(-1, 0), "y1'": co(1, 2),
        "u": cc(i, i + 1), "v'": cc(i + 1, i + 2), "v''": co(i + 1, i + 2),
    }
    if label in fixed:
        return fixed[label]
    side, n, primes = _RX.match(label).groups()
    n = int(n)
    if side == "x":
        return cc(2 * n, 2 * n + 1) if primes == "" else co(2 * n, 2 * n + 1)
    return cc(2 * n - 1, 2 * n) if primes == "" else co(2 * n - 1, 2 * n)


_PRIMED = {
    "Kp": ("Kfam", _kp_interval, True),
    "Pp": ("P", _pp_interval, False),
    "Tp": ("T", _tp_interval, True),
    "Qp": ("Q", _qp_interval, False),
    "Sp": ("S", _sp_interval, False),
    "Rp": ("R", _rp_interval, False),
}


def fixture(
    tag: str,
    i: Optional[int] = None,
    j: Optional[int] = None,
    variant: str = "closed",
) -> Tuple[Bigraph, Representation]:
    """Return (graph, representation) for a fixture tag."""
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    if tag in _STATIC_TABLES:
        family, table = _STATIC_TABLES[tag]
        return generate(FamilyId(family)), dict(table)
    if tag not in _PRIMED:
        raise ValueError(f"unknown fixture tag {tag!r}")
    family, table_fn, two_param = _PRIMED[tag]
    if two_param:
        if i is None or j is None:
            raise ValueError(f"{tag} needs parameters i and j")
        graph = generate(FamilyId(family, i, j, primed=True))
        if tag == "Tp":
            rep = {v: table_fn(v, i, j) for v in graph.vertices}
        else:
            rep = {v: table_fn(v, i, j, variant == "half_open") for v in graph.vertices}
    else:
        if i is None or j is not None:
            raise ValueError(f"{tag} needs a single parameter i")
        graph = generate(FamilyId(family, i, primed=True))
        rep = {v: table_fn(v, i, variant == "half_open") for v in graph.vertices}
    return graph, rep
