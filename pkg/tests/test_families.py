"""Generators: structure, copies, parameter growth, catalog sweep."""

import pytest

from mub.bigraph import contains_induced, find_copies, induced_subgraph_search, Bigraph
from mub.families import (
    FamilyId,
    UnsupportedConstructionError,
    forbidden_catalog,
    generate,
)

ALL_SMALL_IDS = (
    [FamilyId(t) for t in ("H1", "H2", "H3", "B0", "B1", "B2", "K", "M", "H0")]
    + [FamilyId(f"F{k}") for k in range(1, 14)]
    + [FamilyId(t, i) for t in ("Mfam", "N", "Hp", "P", "Q", "R", "S") for i in (1, 2, 3)]
    + [FamilyId(t, i, j) for t in ("L", "Kfam", "T") for i in (1, 2) for j in (1, 2)]
    + [FamilyId(t, i, primed=True) for t in ("P", "Q", "R", "S") for i in (1, 2, 3)]
    + [FamilyId(t, i, j, primed=True) for t in ("Kfam", "T") for i in (1, 2) for j in (1, 2)]
    + [FamilyId(t, 1, tilde=True) for t in ("P", "Q", "R", "S")]
    + [FamilyId("Kfam", 1, 1, tilde=True)]
)


@pytest.mark.parametrize("fid", ALL_SMALL_IDS, ids=str)
def test_generated_graphs_are_connected_bipartite_simple(fid):
    g = generate(fid)
    assert g.is_connected()
    for x, y in g.edges:
        assert g.side(x) == "X" and g.side(y) == "Y"


def test_vertex_and_edge_counts():
    assert (len(generate(FamilyId("H2")).vertices), len(generate(FamilyId("H2")).edges)) == (7, 7)
    assert (len(generate(FamilyId("H1")).vertices), len(generate(FamilyId("H1")).edges)) == (7, 6)
    assert (len(generate(FamilyId("H3")).vertices), len(generate(FamilyId("H3")).edges)) == (7, 8)
    b0 = generate(FamilyId("B0"))
    assert len(b0.vertices) == 6 and len(b0.edges) == 6
    assert set(b0.vertices) == {"u", "v0", "v0'", "v0''", "u0", "u0'"}


def test_copy_structure():
    # the two special pendants are copies in the pinned variants; everything
    # else in the catalog is copy-free
    for fid in ALL_SMALL_IDS:
        g = generate(fid)
        copies = find_copies(g)
        if fid.primed and fid.tag != "T":
            assert copies == [frozenset({"v'", "v''"})]
        else:
            assert copies == []


def test_family_sizes_strictly_increase_in_each_parameter():
    for tag in ("Mfam", "N", "Hp", "P", "Q", "R", "S"):
        sizes = [len(generate(FamilyId(tag, i)).vertices) for i in range(1, 5)]
        assert sizes == sorted(set(sizes))
    for tag in ("L", "Kfam", "T"):
        for j in (1, 2):
            sizes = [len(generate(FamilyId(tag, i, j)).vertices) for i in range(1, 5)]
            assert sizes == sorted(set(sizes))
        for i in (1, 2):
            sizes = [len(generate(FamilyId(tag, i, j)).vertices) for j in range(1, 5)]
            assert sizes == sorted(set(sizes))


def test_unprimed_contains_primed_essence():
    # deleting the two extension leaves of the unprimed member gives the primed one
    for fid in (FamilyId("Kfam", 1, 1), FamilyId("P", 2), FamilyId("Q", 1),
                FamilyId("R", 1), FamilyId("S", 2)):
        g = generate(fid)
        primed = generate(FamilyId(fid.tag, fid.i, fid.j, primed=True))
        pruned = g.induced([v for v in g.vertices if v not in ("t'", "t''")])
        assert pruned == primed
    t = generate(FamilyId("T", 1, 2))
    tp = generate(FamilyId("T", 1, 2, primed=True))
    assert t.induced([v for v in t.vertices if v != "w'"]) == tp


def test_tilde_construction():
    s1t = generate(FamilyId("S", 1, tilde=True))
    sp = generate(FamilyId("S", 1, primed=True))
    assert len(s1t.vertices) == len(sp.vertices) - 2 + 5
    assert s1t.neighbors("v0") == frozenset({"u"})
    assert s1t.neighbors("u0'") == frozenset({"v0''"})
    assert s1t.neighbors("u0") == frozenset({"v0'", "v0''"})
    k11t = generate(FamilyId("Kfam", 1, 1, tilde=True))
    assert len(k11t.vertices) == 18
    with pytest.raises(UnsupportedConstructionError):
        FamilyId("L", 1, 1, tilde=True)
    with pytest.raises(UnsupportedConstructionError):
        FamilyId("T", 1, 1, tilde=True)
    with pytest.raises(UnsupportedConstructionError):
        FamilyId("Mfam", 1, primed=True)


def test_parameter_validation():
    with pytest.raises(ValueError):
        FamilyId("H1", 1)
    with pytest.raises(ValueError):
        FamilyId("P")
    with pytest.raises(ValueError):
        FamilyId("Kfam", 1)
    with pytest.raises(ValueError):
        FamilyId("P", 0)
    with pytest.raises(ValueError):
        FamilyId("nope")


def test_catalog_membership_and_monotonicity():
    assert [str(e.fid) for e in forbidden_catalog(8)] == ["F2"]
    assert forbidden_catalog(0) == []
    ids12 = {str(e.fid) for e in forbidden_catalog(12)}
    ids13 = {str(e.fid) for e in forbidden_catalog(13)}
    assert ids12 <= ids13
    assert "P(1)" in ids12 and "B2" in ids12 and "K" in ids12
    assert "R(1)" in ids13 and "~P(1)" in ids13
    # every member fits the bound and appears exactly once
    entries = forbidden_catalog(14)
    assert len({str(e.fid) for e in entries}) == len(entries)
    assert all(len(e.graph.vertices) <= 14 for e in entries)


def test_scan_style_search_against_catalog():
    h1 = generate(FamilyId("H1"))
    assert all(
        not induced_subgraph_search(h1, e.graph, limit=1)
        for e in forbidden_catalog(len(h1.vertices))
    )
    f2 = generate(FamilyId("F2"))
    hits = [e.fid.tag for e in forbidden_catalog(8) if induced_subgraph_search(f2, e.graph, limit=1)]
    assert hits == ["F2"]
    # a host made of B1 plus one extra pendant still contains B1
    b1 = generate(FamilyId("B1"))
    host = Bigraph(b1.xs + ("xx",), b1.ys, list(b1.edges) + [("xx", "y1")])
    assert contains_induced(host, b1)
