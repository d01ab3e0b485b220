"""Bad-pair structure extraction and the repair pipeline."""

from fractions import Fraction

import pytest

from mub.bigraph import Bigraph
from mub.families import FamilyId, generate
from mub.intervals import cc, co, oc, oo
from mub.recognize import min_bad_pair_representation
from mub.repair import (
    FailureReport,
    NotClean,
    NotMinimalRepresentation,
    RepairError,
    StructureViolation,
    claim1_witnesses,
    extract_structure,
    finish_clean,
    repair,
    rewrite_left,
    rewrite_right,
)
from mub.representation import (
    BadPair,
    is_mixed_proper,
    list_bad_pairs,
    validate,
)


def running_example():
    """Star plus pendant with a representation forcing one bad pair."""
    g = Bigraph(("x", "x'"), ("y1", "y2", "y3"),
                [("x", "y1"), ("x", "y2"), ("x", "y3"), ("x'", "y2")])
    rep = {"y1": cc(0, 1), "y2": cc(Fraction(5, 2), Fraction(9, 2)), "y3": cc(4, 5),
           "x": cc(1, 4), "x'": cc(Fraction(21, 10), Fraction(29, 10))}
    return g, rep


def test_running_example_claim1_and_structure():
    g, rep = running_example()
    assert list_bad_pairs(rep) == [BadPair("x'", "x")]
    p = BadPair("x'", "x")
    assert claim1_witnesses(g, rep, p) == ("y1", "y3")
    s = extract_structure(g, rep, p)
    assert s.k_r == 1 and s.right_layers == [["y3"]]
    assert s.k_l == 1 and s.left_layers == [["y1"]]


def test_claim1_requires_a_bad_pair():
    g, rep = running_example()
    with pytest.raises(RepairError):
        claim1_witnesses(g, rep, BadPair("y1", "x"))


def test_claim1_missing_witness_flags_nonminimal():
    g = Bigraph(("x", "x'"), ("y",), [("x", "y")])
    rep = {"x": cc(0, 3), "x'": cc(1, 2), "y": cc(Fraction(5, 2), Fraction(7, 2))}
    assert validate(g, rep).valid
    with pytest.raises(NotMinimalRepresentation):
        claim1_witnesses(g, rep, BadPair("x'", "x"))


def test_structure_violation_wide_layer():
    # three staggered intervals right of x' all meet x: |Z_1| = 3
    g = Bigraph(("x", "x'"), ("y00", "y0", "y1", "y2", "y3"),
                [("x", "y00"), ("x", "y0"), ("x", "y1"), ("x", "y2"), ("x", "y3"),
                 ("x'", "y0")])
    rep = {"x": cc(0, 10), "x'": cc(1, 2),
           "y00": cc(Fraction(-1, 2), Fraction(1, 2)),
           "y0": cc(Fraction(3, 2), Fraction(21, 2)),
           "y1": cc(3, 11), "y2": cc(4, 12), "y3": cc(5, 13)}
    assert validate(g, rep).valid
    assert list_bad_pairs(rep) == [BadPair("x'", "x")]
    with pytest.raises(StructureViolation) as exc:
        extract_structure(g, rep, BadPair("x'", "x"))
    assert exc.value.claim == "Claim 4"


def test_structure_violation_layer_vertex_in_bad_pair():
    # layer pair {y1, y2}; y1 additionally nests inside yb, violating Claim 5
    g = Bigraph(("x", "x'", "xz"), ("y00", "yb", "y1", "y2"),
                [("x", "y00"), ("x", "yb"), ("x", "y1"), ("x", "y2"),
                 ("x'", "yb"), ("xz", "y2"), ("xz", "yb")])
    rep = {"x": cc(0, 10), "x'": cc(1, 2),
           "y00": cc(Fraction(-1, 2), Fraction(1, 2)),
           "yb": cc(Fraction(3, 2), 12), "y1": cc(4, 11), "y2": cc(5, 12),
           "xz": cc(Fraction(23, 2), 13)}
    assert validate(g, rep).valid
    assert BadPair("y1", "yb") in list_bad_pairs(rep)
    with pytest.raises(StructureViolation) as exc:
        extract_structure(g, rep, BadPair("x'", "x"))
    assert exc.value.claim == "Claim 5"


def test_rewrite_formula_instantiation():
    # layer {y1, y2} with r(x) = 4, r(y2) = 6 collapses onto [4,6] and [4,6)
    g = Bigraph(("x", "x'", "x1"), ("y00", "y0", "y1", "y2"),
                [("x", "y00"), ("x", "y0"), ("x", "y1"), ("x", "y2"),
                 ("x'", "y0"), ("x1", "y2")])
    rep = {"x": cc(0, 4), "x'": cc(1, 2),
           "y00": cc(Fraction(-1, 2), Fraction(1, 2)),
           "y0": cc(1, Fraction(9, 2)),
           "y1": cc(3, 5), "y2": cc(Fraction(7, 2), 6),
           "x1": cc(Fraction(11, 2), 7)}
    assert validate(g, rep).valid
    p = BadPair("x'", "x")
    s = extract_structure(g, rep, p)
    assert s.right_layers == [["y1", "y2"], ["x1"]]
    assert s.left_layers == [["y00"]]
    step = rewrite_right(g, rep, s)
    assert step["y2"] == cc(4, 6)
    assert step["y1"] == co(4, 6)
    assert step["x1"] == cc(6, 7)
    step = rewrite_left(g, step, s)
    assert step["y00"] == cc(Fraction(-1, 2), 0)
    out = finish_clean(g, step, p)
    assert out["x'"] == oo(0, 4)
    assert validate(g, out).valid
    assert is_mixed_proper(out)


def test_rewrite_left_formula_instantiation():
    # mirror image of the right formula: reflecting the model swaps the roles
    from mub.representation import reflect_rep

    g = Bigraph(("x", "x'", "x1"), ("y00", "y0", "y1", "y2"),
                [("x", "y00"), ("x", "y0"), ("x", "y1"), ("x", "y2"),
                 ("x'", "y0"), ("x1", "y2")])
    rep = {"x": cc(0, 4), "x'": cc(1, 2),
           "y00": cc(Fraction(-1, 2), Fraction(1, 2)),
           "y0": cc(1, Fraction(9, 2)),
           "y1": cc(3, 5), "y2": cc(Fraction(7, 2), 6),
           "x1": cc(Fraction(11, 2), 7)}
    mrep = reflect_rep(rep)
    assert validate(g, mrep).valid
    p = BadPair("x'", "x")
    s = extract_structure(g, mrep, p)
    assert s.left_layers == [["y2", "y1"], ["x1"]]
    assert s.right_layers == [["y00"]]
    step = rewrite_left(g, mrep, s)
    assert step["y2"] == cc(-6, -4)
    assert step["y1"] == oc(-6, -4)
    assert step["x1"] == cc(-7, -6)


def test_finish_clean_requires_matching_endpoints():
    g, rep = running_example()
    bad = dict(rep)
    bad["y1"] = cc(0, Fraction(3, 2))  # no endpoint meets l(x) exactly
    assert validate(g, bad).valid
    with pytest.raises(NotClean):
        finish_clean(g, bad, BadPair("x'", "x"))


def test_repair_running_example():
    g, rep = running_example()
    out = repair(g, rep)
    assert isinstance(out, dict)
    assert out["x'"] == oo(1, 4)
    assert all(out[v] == rep[v] for v in ("x", "y1", "y2", "y3"))
    assert validate(g, out).valid
    assert is_mixed_proper(out)
    assert list_bad_pairs(out) == []


def test_repair_identity_on_input_without_bad_pairs():
    g = Bigraph(("a",), ("b",), [("a", "b")])
    rep = {"a": cc(0, 2), "b": cc(1, 3)}
    assert repair(g, rep) == rep


def test_repair_rejects_invalid_input():
    g = Bigraph(("a",), ("b",), [("a", "b")])
    with pytest.raises(RepairError):
        repair(g, {"a": cc(0, 1), "b": cc(5, 6)})


def test_repair_trace_records_steps():
    g, rep = running_example()
    trace = []
    out = repair(g, rep, trace)
    assert isinstance(out, dict)
    names = [name for name, _ in trace]
    assert any(name.startswith("finish_clean") for name in names)
    for _, snapshot in trace:
        assert validate(g, snapshot).valid


def test_repair_reports_failure_on_nonminimal_input():
    g = Bigraph(("x", "x'"), ("y",), [("x", "y")])
    rep = {"x": cc(0, 3), "x'": cc(1, 2), "y": cc(Fraction(5, 2), Fraction(7, 2))}
    out = repair(g, rep)
    assert isinstance(out, FailureReport)
    assert out.claim == "NotMinimalRepresentation"


def test_repair_through_min_representation_of_claw_graphs():
    for tag in ("H1", "H2", "H3", "F1"):
        g = generate(FamilyId(tag))
        m = min_bad_pair_representation(g)
        out = repair(g, m)
        assert isinstance(out, dict), tag
        assert validate(g, out).valid
        assert is_mixed_proper(out)
        assert list_bad_pairs(out) == []
