"""Interval algebra: examples plus randomized laws."""

import random
from fractions import Fraction

import pytest

from mub.intervals import (
    Interval,
    cc,
    co,
    format_interval,
    intersects,
    is_unit,
    oc,
    oo,
    parse_interval,
    reflect,
    translate,
)


def test_touching_closed_ends_intersect():
    assert intersects(cc(0, 1), cc(1, 2))


def test_open_end_excludes_touch_point():
    assert not intersects(co(0, 1), cc(1, 2))


def test_open_interval_touch_rules():
    # (1,2) meets [1,2] but not [0,1]
    assert intersects(oo(1, 2), cc(1, 2))
    assert not intersects(oo(1, 2), cc(0, 1))


def test_unit_lengths():
    assert is_unit(cc(Fraction(-1, 2), Fraction(1, 2)))
    assert not is_unit(cc(0, 2))
    assert is_unit(oo(0, 1))


def test_translate_and_reflect():
    assert translate(co(0, 1), 2) == co(2, 3)
    assert reflect(co(0, 1)) == oc(-1, 0)
    a = oc(Fraction(1, 3), Fraction(7, 3))
    assert reflect(reflect(a)) == a


def test_degenerate_point_must_be_closed():
    cc(2, 2)
    with pytest.raises(ValueError):
        co(2, 2)
    with pytest.raises(ValueError):
        cc(3, 2)


def test_degenerate_point_intersections():
    assert intersects(cc(2, 2), oo(1, 3))
    assert not intersects(cc(2, 2), oo(2, 3))


def _random_interval(rng):
    den = rng.choice([1, 2, 3, 4])
    lo = Fraction(rng.randint(-8, 8), den)
    hi = lo + Fraction(rng.randint(0, 8), den)
    if lo == hi:
        return cc(lo, hi)
    return Interval(lo, hi, rng.random() < 0.5, rng.random() < 0.5)


def test_intersects_symmetric_and_reflexive():
    rng = random.Random(7)
    for _ in range(10_000):
        a, b = _random_interval(rng), _random_interval(rng)
        assert intersects(a, b) == intersects(b, a)
        assert intersects(a, a)


def test_intersects_invariant_under_translation_and_reflection():
    rng = random.Random(11)
    for _ in range(10_000):
        a, b = _random_interval(rng), _random_interval(rng)
        t = Fraction(rng.randint(-12, 12), rng.choice([1, 2, 3]))
        base = intersects(a, b)
        assert intersects(translate(a, t), translate(b, t)) == base
        assert intersects(reflect(a), reflect(b)) == base
        assert is_unit(translate(a, t)) == is_unit(a)
        assert is_unit(reflect(a)) == is_unit(a)


def test_format_parse_round_trip():
    rng = random.Random(13)
    for _ in range(2_000):
        a = _random_interval(rng)
        assert parse_interval(format_interval(a)) == a
    assert format_interval(co(0, 1)) == "[0,1)"
    assert parse_interval("(-3/2,-1/2]") == oc(Fraction(-3, 2), Fraction(-1, 2))
