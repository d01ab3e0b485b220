"""Fixture tables validate and pin down exactly the generated graphs."""

import pytest

from mub.fixtures import fixture
from mub.intervals import cc, co, oo
from mub.representation import intersection_bigraph, is_mixed_unit, validate

STATIC = ("H1", "H2_first", "H2_second", "H3_first", "H3_second", "F1", "F6")
PRIMED_IDS = (
    [("Kp", i, j) for i in (1, 2, 3) for j in (1, 2, 3)]
    + [("Tp", i, j) for i in (1, 2, 3) for j in (1, 2, 3)]
    + [(t, i, None) for t in ("Pp", "Qp", "Sp", "Rp") for i in (1, 2, 3)]
)


@pytest.mark.parametrize("tag", STATIC)
def test_static_fixture_valid_unit_and_matches_generator(tag):
    g, rep = fixture(tag)
    assert validate(g, rep).valid
    assert is_mixed_unit(rep)
    assert intersection_bigraph(rep, {v: g.side(v) for v in g.vertices}) == g


@pytest.mark.parametrize("tag,i,j", PRIMED_IDS)
@pytest.mark.parametrize("variant", ("closed", "half_open"))
def test_primed_fixture_valid_unit_and_matches_generator(tag, i, j, variant):
    g, rep = fixture(tag, i, j, variant)
    assert validate(g, rep).valid
    assert is_mixed_unit(rep)
    assert intersection_bigraph(rep, {v: g.side(v) for v in g.vertices}) == g


def test_two_class_tables_use_only_closed_and_open_intervals():
    # the claw/net/tent tables use closed and open intervals only
    for tag in ("H1", "H2_first", "H2_second", "H3_first", "H3_second"):
        _, rep = fixture(tag)
        assert all(iv.klass in ("CC", "OO") for iv in rep.values())


def test_spot_values_from_the_tables():
    _, kp = fixture("Kp", 1, 1)
    assert kp["y0"] == cc(-0.5, 0.5)
    assert kp["y"] == cc(-1, 0)
    assert kp["x1"] == cc(0, 1)
    assert kp["x0"] == oo(0, 1)
    assert kp["y1'"] == co(1, 2)
    _, pp = fixture("Pp", 2)
    assert pp["u"] == cc(1, 2)
    assert pp["v'"] == cc(2, 3)
    _, pph = fixture("Pp", 2, variant="half_open")
    assert pph["v'"] == co(2, 3)
    _, sp = fixture("Sp", 1)
    assert sp["x1''"] == oo(1, 2)
    g6, f6 = fixture("F6")
    assert len(f6) == 10 and f6["x1"] == oo(6, 7)


def test_both_variant_choices_validate_where_offered():
    for tag, i in (("Sp", 2), ("Rp", 2)):
        for variant in ("closed", "half_open"):
            g, rep = fixture(tag, i, variant=variant)
            assert validate(g, rep).valid


def test_unknown_fixture_rejected():
    with pytest.raises(ValueError):
        fixture("nope")
    with pytest.raises(ValueError):
        fixture("Kp", 1)
    with pytest.raises(ValueError):
        fixture("Pp", 1, 2)
    with pytest.raises(ValueError):
        fixture("Pp", 1, variant="bogus")
