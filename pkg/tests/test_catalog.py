"""Catalog assembly, published-table checks, stats, and probes."""

import functools

import pytest

from haddiag.auxsearch import GraphRecord, SearchCounters, SearchOutcome, enumerate_graphs
from haddiag.catalog import (
    BoundReport,
    ClassEntry,
    ProbeReport,
    build_catalog,
    catalog_document,
    class_size_scatter,
    match_zoo,
    probe_conjecture_26,
    probe_equivalence_conjecture,
    set_fingerprint,
    standard_four,
    stats_report,
    stats_rows,
    verify_mod8,
)
from haddiag.data import load
from haddiag.errors import MixedOrders, OddOrder, SchemaViolation, WrongResidue
from haddiag.graphs import (
    canonical_form,
    complete,
    complete_bipartite,
    disjoint_copies,
    empty_graph,
    from_edges,
    is_isomorphic,
)
from haddiag.hadamard import normalize, permute_rows, sylvester
from haddiag.spectra import SpectrumVector, verify_diagonalization


@functools.lru_cache(maxsize=None)
def outcome(name, matrix_id=None):
    if name.startswith("syl"):
        mat = sylvester(int(name[3:]))
    else:
        mat = load(name)
    return enumerate_graphs(normalize(mat), matrix_id=matrix_id or name)


def fake_outcome(matrix_id, nh, graphs):
    recs = tuple(
        GraphRecord(canonical_form(g), g, verify_diagonalization(nh, g)) for g in graphs
    )
    return SearchOutcome(matrix_id, nh.n, recs, SearchCounters())


def test_set_fingerprint():
    forms = list(outcome("syl2").forms())
    fp = set_fingerprint(forms)
    assert len(fp) == 16 and int(fp, 16) >= 0
    assert set_fingerprint(reversed(forms)) == fp
    assert set_fingerprint(forms[1:]) != fp


def test_build_catalog_groups_equal_sets():
    a = outcome("syl2", "a")
    # a row-permuted variant has the same graph set under a different id
    b = enumerate_graphs(normalize(permute_rows(sylvester(2), [2, 0, 3, 1])), matrix_id="b")
    cat = build_catalog([a, b])
    assert cat.n == 4
    assert sorted(cat.per_matrix) == ["a", "b"]
    assert len(cat.union) == 4
    fp = set_fingerprint(a.forms())
    assert cat.classes == (ClassEntry(fp, 4, ("a", "b")),)


def test_build_catalog_errors():
    with pytest.raises(MixedOrders):
        build_catalog([])
    with pytest.raises(MixedOrders):
        build_catalog([outcome("syl2"), outcome("syl3")])
    with pytest.raises(SchemaViolation):
        build_catalog([outcome("syl2"), outcome("syl2")])


def test_class_sorting_and_scatter():
    cat = build_catalog(
        [
            outcome("had.16.4", "m4"),
            outcome("had.16.0", "m0"),
            enumerate_graphs(normalize(load("had.16.0")), matrix_id="m0b"),
        ]
    )
    assert [(e.graphs, e.matrix_ids) for e in cat.classes] == [
        (46, ("m0", "m0b")),
        (10, ("m4",)),
    ]
    assert class_size_scatter(cat) == [(46, 2), (10, 1)]


def test_standard_four():
    four = standard_four(4)
    targets = [complete(4), complete_bipartite(2, 2), empty_graph(4),
               disjoint_copies(2, complete(2))]
    for (g, spec), want in zip(four, targets):
        assert is_isomorphic(g, want)
    assert four[0][1] == SpectrumVector((0, 4, 4, 4))
    assert four[1][1] == SpectrumVector((0, 2, 2, 4))
    assert four[2][1] == SpectrumVector((0, 0, 0, 0))
    assert four[3][1] == SpectrumVector((0, 0, 2, 2))
    with pytest.raises(OddOrder):
        standard_four(5)
    with pytest.raises(OddOrder):
        standard_four(0)


def test_verify_mod8():
    assert verify_mod8(build_catalog([outcome("syl2")]))
    assert verify_mod8(build_catalog([outcome("had.12")]))
    with pytest.raises(WrongResidue):
        verify_mod8(build_catalog([outcome("syl3")]))
    nh = normalize(load("had.12"))
    short = fake_outcome("short", nh, [empty_graph(12), complete(12)])
    assert not verify_mod8(build_catalog([short]))


def test_match_zoo():
    cat = build_catalog([outcome("syl2")])
    full = [complete(4), complete_bipartite(2, 2), empty_graph(4),
            disjoint_copies(2, complete(2))]
    rep = match_zoo(cat, full)
    assert len(rep.matched) == 4 and rep.missing == () and rep.extra == ()
    rep = match_zoo(cat, full[:3])
    assert len(rep.matched) == 3 and rep.missing == () and len(rep.extra) == 1
    p4 = from_edges(4, [(0, 1), (1, 2), (2, 3)])
    rep = match_zoo(cat, [complete(4), p4])
    assert len(rep.matched) == 1
    assert rep.missing == (canonical_form(p4),)
    assert len(rep.extra) == 3
    with pytest.raises(MixedOrders):
        match_zoo(cat, [complete(8)])


def test_stats_report_order8():
    rep = stats_report(build_catalog([outcome("syl3")]))
    assert rep.graphs == 10
    assert rep.degree == ((0, 1), (1, 1), (2, 1), (3, 2), (4, 2), (5, 1), (6, 1), (7, 1))
    assert rep.clique_number == ((1, 1), (2, 4), (4, 4), (8, 1))
    assert rep.girth == ((3, 5), (4, 3), ("acyclic", 2))
    assert rep.diameter == ((1, 1), (2, 4), (3, 1))
    assert rep.algebraic_connectivity == ((0, 4), (2, 2), (4, 2), (6, 1), (8, 1))
    assert rep.cospectral_sizes == ((1, 10),)
    assert rep.disconnected == 4
    assert rep.cograph == 8
    assert rep.chordal == 4
    assert rep.distance_regular == 4
    assert rep.clique_overflow == 0


def test_stats_report_clique_budget():
    rep = stats_report(build_catalog([outcome("syl3")]), clique_budget=1)
    assert rep.clique_overflow == 10
    assert rep.clique_number == ()
    rows = stats_rows(rep)
    assert ("clique_number", "overflow", 10) in rows


def test_stats_rows():
    rep = stats_report(build_catalog([outcome("syl2")]))
    rows = stats_rows(rep)
    assert rows[0] == ("degree", 0, 1)
    assert ("disconnected", "true", 2) in rows
    assert ("disconnected", "false", 2) in rows
    assert ("cograph", "true", 4) in rows
    assert ("clique_number", "overflow", 0) not in rows
    for stat in ("disconnected", "cograph", "chordal", "distance_regular"):
        yes = next(r[2] for r in rows if r[0] == stat and r[1] == "true")
        no = next(r[2] for r in rows if r[0] == stat and r[1] == "false")
        assert yes + no == rep.graphs


def test_catalog_document():
    a = outcome("syl2", "a")
    cat = build_catalog([a])
    doc = catalog_document(cat)
    assert doc == {
        "order": 4,
        "union_graphs": 4,
        "matrices": [{"matrix_id": "a", "graphs": 4}],
        "classes": [
            {
                "fingerprint": set_fingerprint(a.forms()),
                "graphs": 4,
                "matrix_ids": ["a"],
            }
        ],
    }
    assert list(doc) == ["order", "union_graphs", "matrices", "classes"]


def test_probe_equivalence_conjecture():
    rep = probe_equivalence_conjecture(normalize(sylvester(2)), trials=3, seed=0)
    assert rep == ProbeReport(trials=3, agreements=3, disagreements=())
    rep = probe_equivalence_conjecture(normalize(load("had.12")), trials=2, seed=7)
    assert rep.disagreements == () and rep.agreements == 2


def test_probe_conjecture_26():
    rep = probe_conjecture_26([outcome("syl3")])
    assert rep == BoundReport(n=8, union_graphs=10, exceeded=False)
    with pytest.raises(WrongResidue):
        probe_conjecture_26([outcome("syl2")])
    with pytest.raises(WrongResidue):
        probe_conjecture_26([])
