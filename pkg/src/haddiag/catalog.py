"""Catalogs over per-matrix search outcomes.

A catalog aggregates same-order outcomes: the union of all diagonalized
graphs with one representative per isomorphism class, per-matrix
canonical-form sets, and the partition of matrices into classes that
diagonalize identical graph sets.  Statistics, published-count checks, and
the two conjecture probes work off catalogs or outcomes.
"""

import hashlib
import random
from collections import Counter
from dataclasses import dataclass

from .auxsearch import enumerate_graphs
from .errors import Aborted, MixedOrders, OddOrder, SchemaViolation, WrongResidue
from .graphs import (
    canonical_form,
    clique_number,
    complete,
    complete_bipartite,
    connected_components,
    diameter,
    disjoint_copies,
    empty_graph,
    girth,
    is_chordal,
    is_cograph,
    is_distance_regular,
)
from .hadamard import (
    negate_columns,
    negate_rows,
    normalize,
    permute_columns,
    permute_rows,
)
from .spectra import SpectrumVector, algebraic_connectivity, spectrum_multiset


def _form_key(form):
    return (form.n, form.bits)


def set_fingerprint(forms):
    """Order-independent digest of a set of canonical forms."""
    payload = ";".join(f"{f.n}:{f.bits:x}" for f in sorted(forms, key=_form_key))
    return hashlib.sha256(payload.encode("ascii")).hexdigest()[:16]


@dataclass(frozen=True)
class ClassEntry:
    """Matrices whose outcomes share one graph set."""

    fingerprint: str
    graphs: int
    matrix_ids: tuple


@dataclass(frozen=True)
class Catalog:
    n: int
    per_matrix: dict  # matrix_id -> frozenset of CanonicalForm
    union: dict  # CanonicalForm -> GraphRecord representative
    classes: tuple  # ClassEntry, largest graph sets first


def build_catalog(outcomes):
    """Cross-matrix union plus the partition of matrices by equal graph sets."""
    if not outcomes:
        raise MixedOrders("catalog needs at least one outcome")
    n = outcomes[0].n
    per_matrix = {}
    union = {}
    for out in outcomes:
        if out.n != n:
            raise MixedOrders(f"outcome of order {out.n} in an order-{n} catalog")
        if out.matrix_id in per_matrix:
            raise SchemaViolation(f"duplicate matrix id {out.matrix_id!r}")
        per_matrix[out.matrix_id] = out.forms()
        for rec in out.graphs:
            union.setdefault(rec.form, rec)
    groups = {}
    for mid, forms in per_matrix.items():
        groups.setdefault(set_fingerprint(forms), []).append(mid)
    classes = [
        ClassEntry(fp, len(per_matrix[ids[0]]), tuple(sorted(ids)))
        for fp, ids in groups.items()
    ]
    classes.sort(key=lambda e: (-e.graphs, len(e.matrix_ids), e.fingerprint))
    return Catalog(n, per_matrix, union, tuple(classes))


def standard_four(n):
    """K_n, K_{n/2,n/2}, nK_1, 2K_{n/2} with their Laplacian spectra.

    These four are diagonalized by every normalized Hadamard matrix of
    order n, and for n = 8k+4 they are the whole catalog.
    """
    if n < 2 or n % 2:
        raise OddOrder(f"standard four need an even order >= 2, got {n}")
    half = n // 2
    return (
        (complete(n), SpectrumVector((0,) + (n,) * (n - 1))),
        (complete_bipartite(half, half), SpectrumVector((0,) + (half,) * (n - 2) + (n,))),
        (empty_graph(n), SpectrumVector((0,) * n)),
        (disjoint_copies(2, complete(half)), SpectrumVector((0, 0) + (half,) * (n - 2))),
    )


def verify_mod8(catalog):
    """True iff the union is exactly the standard four; order must be 8k+4."""
    if catalog.n % 8 != 4:
        raise WrongResidue(f"order {catalog.n} is not 4 mod 8")
    expected = {canonical_form(g) for g, _ in standard_four(catalog.n)}
    return set(catalog.union) == expected


@dataclass(frozen=True)
class ZooReport:
    matched: tuple
    missing: tuple
    extra: tuple


def match_zoo(catalog, expected):
    """Match the enumerated union against independently constructed graphs."""
    for g in expected:
        if g.n != catalog.n:
            raise MixedOrders(f"expected graph of order {g.n} against catalog order {catalog.n}")
    want = {canonical_form(g) for g in expected}
    have = set(catalog.union)
    return ZooReport(
        matched=tuple(sorted(want & have, key=_form_key)),
        missing=tuple(sorted(want - have, key=_form_key)),
        extra=tuple(sorted(have - want, key=_form_key)),
    )


@dataclass(frozen=True)
class StatsReport:
    """Distributions over the union set; each as ascending (value, count) pairs.

    diameter covers connected graphs only and girth labels acyclic graphs;
    together with the clique overflow row every distribution accounts for
    all graphs it covers.
    """

    graphs: int
    degree: tuple
    clique_number: tuple
    girth: tuple
    diameter: tuple
    algebraic_connectivity: tuple
    cospectral_sizes: tuple
    disconnected: int
    cograph: int
    chordal: int
    distance_regular: int
    clique_overflow: int


def _dist(counter):
    return tuple(sorted(counter.items(), key=lambda kv: (isinstance(kv[0], str), kv[0])))


def stats_report(catalog, clique_budget=None):
    """Invariant distributions over the catalog's union set.

    Clique number is exponential-time in the worst case; graphs whose
    branch-and-bound search exceeds clique_budget nodes are counted in
    clique_overflow instead of being silently dropped.
    """
    degree = Counter()
    cliques = Counter()
    girths = Counter()
    diameters = Counter()
    connectivity = Counter()
    spectra = Counter()
    disconnected = cograph = chordal = dreg = overflow = 0
    for form, rec in sorted(catalog.union.items(), key=lambda kv: _form_key(kv[0])):
        g = rec.graph
        degs = {g.degree(v) for v in range(g.n)}
        if len(degs) != 1:
            raise SchemaViolation(f"catalog graph on {g.n} vertices is not regular")
        degree[degs.pop()] += 1
        try:
            cliques[clique_number(g, clique_budget)] += 1
        except Aborted:
            overflow += 1
        gi = girth(g)
        girths["acyclic" if gi is None else gi] += 1
        if len(connected_components(g)) > 1:
            disconnected += 1
        else:
            diameters[diameter(g)] += 1
        connectivity[algebraic_connectivity(rec.spectrum)] += 1
        spectra[spectrum_multiset(rec.spectrum)] += 1
        cograph += is_cograph(g)
        chordal += is_chordal(g)
        dreg += is_distance_regular(g)
    return StatsReport(
        graphs=len(catalog.union),
        degree=_dist(degree),
        clique_number=_dist(cliques),
        girth=_dist(girths),
        diameter=_dist(diameters),
        algebraic_connectivity=_dist(connectivity),
        cospectral_sizes=_dist(Counter(spectra.values())),
        disconnected=disconnected,
        cograph=cograph,
        chordal=chordal,
        distance_regular=dreg,
        clique_overflow=overflow,
    )


def stats_rows(report):
    """(statistic, value, count) rows for the stats CSV."""
    rows = []
    for stat, dist in (
        ("degree", report.degree),
        ("clique_number", report.clique_number),
        ("girth", report.girth),
        ("diameter", report.diameter),
        ("algebraic_connectivity", report.algebraic_connectivity),
        ("cospectral_class_size", report.cospectral_sizes),
    ):
        rows.extend((stat, value, count) for value, count in dist)
    if report.clique_overflow:
        rows.append(("clique_number", "overflow", report.clique_overflow))
    total = report.graphs
    for stat, yes in (
        ("disconnected", report.disconnected),
        ("cograph", report.cograph),
        ("chordal", report.chordal),
        ("distance_regular", report.distance_regular),
    ):
        rows.append((stat, "true", yes))
        rows.append((stat, "false", total - yes))
    return rows


def class_size_scatter(catalog):
    """(graphs-per-class, matrices-per-class) points, one per class."""
    return [(e.graphs, len(e.matrix_ids)) for e in catalog.classes]


def catalog_document(catalog):
    """JSON-ready summary with deterministic field and row order."""
    return {
        "order": catalog.n,
        "union_graphs": len(catalog.union),
        "matrices": [
            {"matrix_id": mid, "graphs": len(forms)}
            for mid, forms in sorted(catalog.per_matrix.items())
        ],
        "classes": [
            {
                "fingerprint": e.fingerprint,
                "graphs": e.graphs,
                "matrix_ids": list(e.matrix_ids),
            }
            for e in catalog.classes
        ],
    }


@dataclass(frozen=True)
class ProbeReport:
    trials: int
    agreements: int
    disagreements: tuple  # 0-based trial numbers whose graph set differed


def probe_equivalence_conjecture(nh, trials, seed, node_budget=None):
    """Re-enumerate random equivalent forms of nh and compare graph sets.

    Equivalent matrices are conjectured to diagonalize the same graphs up to
    relabeling; a disagreement here would refute that, so it is reported
    rather than assumed away.
    """
    kwargs = {} if node_budget is None else {"node_budget": node_budget}
    base = enumerate_graphs(nh, matrix_id="probe-base", **kwargs).forms()
    rng = random.Random(seed)
    n = nh.n
    disagreements = []
    for t in range(trials):
        h = nh.matrix
        h = negate_rows(h, [i for i in range(n) if rng.random() < 0.5])
        h = negate_columns(h, [j for j in range(n) if rng.random() < 0.5])
        rp = list(range(n))
        rng.shuffle(rp)
        cp = list(range(n))
        rng.shuffle(cp)
        h = permute_columns(permute_rows(h, rp), cp)
        out = enumerate_graphs(normalize(h), matrix_id=f"probe-{t}", **kwargs)
        if out.forms() != base:
            disagreements.append(t)
    return ProbeReport(trials, trials - len(disagreements), tuple(disagreements))


@dataclass(frozen=True)
class BoundReport:
    n: int
    union_graphs: int
    exceeded: bool
    bound: int = 26


def probe_conjecture_26(outcomes):
    """Union count for an order 16k+8 batch, flagged against the bound of 26."""
    if not outcomes:
        raise WrongResidue("bound probe needs at least one outcome")
    n = outcomes[0].n
    if n % 16 != 8:
        raise WrongResidue(f"order {n} is not 8 mod 16")
    count = len(build_catalog(outcomes).union)
    return BoundReport(n=n, union_graphs=count, exceeded=count > 26)
