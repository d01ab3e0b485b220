"""Exact intervals on the rational line with open/closed ends.

Endpoints are Fractions, never floats: touching ends (r(a) == l(b)) must
compare exactly, since whether a touch counts as an intersection depends
only on the two boundary flags.  The four flag combinations form the
classes CC (closed), OO (open), CO (closed-open) and OC (open-closed).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

CLASS_TAGS = ("CC", "OO", "CO", "OC")


@dataclass(frozen=True)
class Interval:
    """A nonempty interval.  Degenerate points are allowed only fully closed."""

    lo: Fraction
    hi: Fraction
    left_closed: bool
    right_closed: bool

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval: lo={self.lo} > hi={self.hi}")
        if self.lo == self.hi and not (self.left_closed and self.right_closed):
            raise ValueError("degenerate interval must be closed at both ends")

    @property
    def klass(self) -> str:
        if self.left_closed:
            return "CC" if self.right_closed else "CO"
        return "OC" if self.right_closed else "OO"

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    def __str__(self) -> str:
        return format_interval(self)


def cc(lo, hi) -> Interval:
    return Interval(Fraction(lo), Fraction(hi), True, True)


def oo(lo, hi) -> Interval:
    return Interval(Fraction(lo), Fraction(hi), False, False)


def co(lo, hi) -> Interval:
    return Interval(Fraction(lo), Fraction(hi), True, False)


def oc(lo, hi) -> Interval:
    return Interval(Fraction(lo), Fraction(hi), False, True)


def intersects(a: Interval, b: Interval) -> bool:
    """Point-set intersection; a touch counts only if both ends are closed."""
    if a.lo > b.lo or (a.lo == b.lo and not a.left_closed):
        lo, lo_closed = a.lo, a.left_closed and (a.lo != b.lo or b.left_closed)
    else:
        lo, lo_closed = b.lo, b.left_closed and (a.lo != b.lo or a.left_closed)
    if a.hi < b.hi or (a.hi == b.hi and not a.right_closed):
        hi, hi_closed = a.hi, a.right_closed and (a.hi != b.hi or b.right_closed)
    else:
        hi, hi_closed = b.hi, b.right_closed and (a.hi != b.hi or a.right_closed)
    if lo < hi:
        return True
    return lo == hi and lo_closed and hi_closed


def is_unit(a: Interval) -> bool:
    return a.hi - a.lo == 1


def translate(a: Interval, t) -> Interval:
    t = Fraction(t)
    return Interval(a.lo + t, a.hi + t, a.left_closed, a.right_closed)


def reflect(a: Interval) -> Interval:
    """Mirror about 0; the set image forces the flag swap CO <-> OC."""
    return Interval(-a.hi, -a.lo, a.right_closed, a.left_closed)


def contains(outer: Interval, inner: Interval) -> bool:
    """Set containment inner subset-of outer (not necessarily proper)."""
    if inner.lo < outer.lo or (inner.lo == outer.lo and inner.left_closed and not outer.left_closed):
        return False
    if inner.hi > outer.hi or (inner.hi == outer.hi and inner.right_closed and not outer.right_closed):
        return False
    return True


def _format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_interval(a: Interval) -> str:
    lb = "[" if a.left_closed else "("
    rb = "]" if a.right_closed else ")"
    return f"{lb}{_format_rational(a.lo)},{_format_rational(a.hi)}{rb}"


def parse_interval(text: str) -> Interval:
    """Parse the `[p/q,r/s)` rendering; exact round trip with format_interval."""
    s = text.strip()
    if len(s) < 2 or s[0] not in "[(" or s[-1] not in ")]":
        raise ValueError(f"malformed interval: {text!r}")
    body = s[1:-1].split(",")
    if len(body) != 2:
        raise ValueError(f"malformed interval: {text!r}")
    return Interval(
        Fraction(body[0].strip()),
        Fraction(body[1].strip()),
        s[0] == "[",
        s[-1] == "]",
    )
