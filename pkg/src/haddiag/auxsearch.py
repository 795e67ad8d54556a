"""Enumerate every graph a normalized Hadamard matrix diagonalizes.

For a normalized H of order n, a diagonalized Laplacian is determined by its
first row: with the core matrix C (drop the all-ones row/column of H),
(1/n C)^{-1} = C^T - J, so every off-diagonal entry L_ij is an integer linear
combination of L_12..L_1n.  Writing x_j = -L_1j in {0,1}, the matrix is a
Laplacian iff every one of those combinations lands in {0,-1}; scaling by n
keeps all coefficients integral, with acceptance targets {0, n}.

The search walks the 2^(n-1) assignments depth-first (include before exclude)
in a chosen column order, keeping per-combination partial sums and pruning a
branch as soon as some combination can no longer reach 0 or n given suffix
bounds on the remaining coefficients.  Rows that are scaled unit vectors are
satisfied by construction and excluded from prune bookkeeping.

A search can be restricted to a fixed prefix of include/exclude decisions so
independent workers can split one matrix; counter events on the shared prefix
path are attributed to the first-visited descendant, which makes merged
counters equal the sequential ones exactly.
"""

from dataclasses import dataclass

import numpy as np

from .errors import Aborted, BadOrder, NotALaplacian, TooLarge
from .graphs import Graph, canonical_form, complement
from .spectra import inverse_core, verify_diagonalization

DEFAULT_NODE_BUDGET = 2**34


@dataclass(frozen=True)
class AuxiliaryMatrix:
    """Distinct scaled coefficient rows plus the pairs realizing each row.

    rows[r][t] = n * (coefficient of x_{t+1} in the combination for row r);
    entry_map[r] lists the 0-based vertex pairs (i, j) whose Laplacian entry
    equals that combination.  column_order, when set, is the 0-based variable
    order the search walks (variable t corresponds to vertex t+1).
    """

    n: int
    rows: tuple
    entry_map: tuple
    column_order: tuple = None


@dataclass
class SearchCounters:
    leaves: int = 0
    pruned: int = 0
    accepted: int = 0


@dataclass(frozen=True)
class GraphRecord:
    form: object
    graph: Graph
    spectrum: object


@dataclass(frozen=True)
class SearchOutcome:
    matrix_id: str
    n: int
    graphs: tuple
    counters: SearchCounters

    def forms(self):
        return frozenset(rec.form for rec in self.graphs)


def build_auxiliary(nh):
    """Expand every off-diagonal Laplacian entry over x_1..x_{n-1}, merging equal rows."""
    n = nh.n
    if n < 4:
        raise BadOrder("auxiliary matrix needs order >= 4")
    h = nh.to_array()
    w = inverse_core(nh)
    p = h[:, 1:]
    rows = []
    entry_map = []
    index = {}
    for i in range(n):
        coeffs = (p[i] * p[i + 1 :]) @ w
        for j in range(i + 1, n):
            m = tuple(int(v) for v in coeffs[j - i - 1])
            r = index.get(m)
            if r is None:
                index[m] = len(rows)
                rows.append(m)
                entry_map.append([(i, j)])
            else:
                entry_map[r].append((i, j))
    return AuxiliaryMatrix(n, tuple(rows), tuple(tuple(p_) for p_ in entry_map))


def _is_unit_row(row, n):
    nz = [v for v in row if v]
    return len(nz) == 1 and nz[0] == n


def sort_columns(aux):
    """Order columns by descending count of nonzero non-unit coefficients, ties by index."""
    m = aux.n - 1
    counts = [0] * m
    for row in aux.rows:
        for t, v in enumerate(row):
            if v and v != aux.n:
                counts[t] += 1
    order = sorted(range(m), key=lambda t: (-counts[t], t))
    return AuxiliaryMatrix(aux.n, aux.rows, aux.entry_map, tuple(order))


def subset_to_graph(aux, subset):
    """Graph whose first row selects vertices `subset` (labels in 1..n-1), or NotALaplacian."""
    n = aux.n
    cols = set()
    for j in subset:
        j = int(j)
        if not 1 <= j <= n - 1:
            raise BadOrder(f"subset element {j} outside 1..{n - 1}")
        cols.add(j - 1)
    rows_edges = []
    for r, row in enumerate(aux.rows):
        s = sum(row[t] for t in cols)
        if s == n:
            rows_edges.append(r)
        elif s != 0:
            raise NotALaplacian(f"combination {r} sums to {s}/{n} (pairs {aux.entry_map[r][0]}...)")
    edges = []
    for r in rows_edges:
        edges.extend(aux.entry_map[r])
    g_rows = [0] * n
    for i, j in edges:
        g_rows[i] |= 1 << j
        g_rows[j] |= 1 << i
    return Graph(n, tuple(g_rows))


def _prepare(aux):
    """Suffix reachability bounds for the prune test, in search order."""
    n = aux.n
    order = aux.column_order if aux.column_order is not None else tuple(range(n - 1))
    track = [r for r, row in enumerate(aux.rows) if not _is_unit_row(row, n)]
    m = len(order)
    k = len(track)
    p = np.zeros((k, m), dtype=np.int64)
    for a, r in enumerate(track):
        for b, t in enumerate(order):
            p[a, b] = aux.rows[r][t]
    lo = np.zeros((m + 1, k), dtype=np.int64)
    hi = np.zeros((m + 1, k), dtype=np.int64)
    for t in range(m - 1, -1, -1):
        lo[t] = lo[t + 1] + np.minimum(p[:, t], 0)
        hi[t] = hi[t + 1] + np.maximum(p[:, t], 0)
    return order, p, lo, hi


def _viable(s, lo, hi, n):
    reach0 = (s + lo <= 0) & (s + hi >= 0)
    reachn = (s + lo <= n) & (s + hi >= n)
    return bool(np.all(reach0 | reachn))


def enumerate_graphs(
    nh,
    matrix_id="",
    node_budget=DEFAULT_NODE_BUDGET,
    column_order=None,
    prefix=None,
    aux=None,
):
    """Pruned DFS over all first-row assignments; returns a SearchOutcome.

    column_order overrides the sorting heuristic (0-based variable order).
    prefix, when given, fixes the first len(prefix) include(1)/exclude(0)
    decisions; counters only include events this prefix is responsible for.
    Raises Aborted when more than node_budget nodes are visited.
    """
    if aux is None:
        aux = build_auxiliary(nh)
    if column_order is not None:
        aux = AuxiliaryMatrix(aux.n, aux.rows, aux.entry_map, tuple(column_order))
    elif aux.column_order is None:
        aux = sort_columns(aux)
    n = aux.n
    order, p, lo, hi = _prepare(aux)
    m = len(order)
    counters = SearchCounters()
    found = {}
    budget = [int(node_budget)]

    full = (1 << m) - 1

    def visit_leaf(chosen):
        # Reaching depth m means every tracked row already sits in {0, n}:
        # the interval test is exact there, so the assignment is accepted.
        counters.leaves += 1
        counters.accepted += 1
        # Accepted assignments come in complement pairs giving complement
        # graphs; dedup only the smaller half and close under complement after
        # the walk (n-1 is odd, so a pair never collides).
        if chosen > (full ^ chosen):
            return
        subset = sorted(order[t] + 1 for t in range(m) if (chosen >> t) & 1)
        g = subset_to_graph(aux, subset)
        form = canonical_form(g)
        if form not in found:
            spectrum = verify_diagonalization(nh, g)
            found[form] = GraphRecord(form, g, spectrum)

    def spend():
        if budget[0] <= 0:
            raise Aborted(f"node budget {node_budget} exhausted")
        budget[0] -= 1

    prefix = tuple(prefix) if prefix else ()
    if len(prefix) > m:
        raise BadOrder(f"prefix longer than {m} decisions")
    sums0 = np.zeros(p.shape[0], dtype=np.int64)

    # Walk the fixed prefix; attribute an event at depth d to this worker only
    # if it is the first visitor (all later prefix decisions are include=1).
    chosen0 = 0
    s = sums0
    dead = False
    for d, bit in enumerate(prefix):
        # Node at depth d is shared by workers agreeing on prefix[:d]; its pop
        # is charged to the worker whose decisions from d on are all include.
        # The test of the child reached by prefix[d] is shared by workers
        # agreeing on prefix[:d+1]; its prune event is charged likewise.
        if all(b == 1 for b in prefix[d:]):
            spend()
        s2 = s + p[:, d] if bit else s
        if not _viable(s2, lo[d + 1], hi[d + 1], n):
            if all(b == 1 for b in prefix[d + 1 :]):
                counters.pruned += 1
            dead = True
            break
        if bit:
            chosen0 |= 1 << d
        s = s2
    depth0 = len(prefix)

    if not dead:
        stack = [(depth0, chosen0, s)]
        while stack:
            t, chosen, s = stack.pop()
            spend()
            if t == m:
                visit_leaf(chosen)
                continue
            for bit in (0, 1):  # pushed exclude-first so include pops first
                s2 = s + p[:, t] if bit else s
                if _viable(s2, lo[t + 1], hi[t + 1], n):
                    stack.append((t + 1, chosen | (bit << t), s2))
                else:
                    counters.pruned += 1

    _close_under_complement(nh, found)
    graphs = tuple(found[f] for f in sorted(found))
    return SearchOutcome(matrix_id, n, graphs, counters)


def _close_under_complement(nh, found):
    for rec in list(found.values()):
        comp = complement(rec.graph)
        form = canonical_form(comp)
        if form not in found:
            found[form] = GraphRecord(form, comp, verify_diagonalization(nh, comp))


def merge_outcomes(outcomes):
    """Combine prefix-split outcomes of one matrix into the sequential result."""
    outcomes = list(outcomes)
    n = outcomes[0].n
    matrix_id = outcomes[0].matrix_id
    counters = SearchCounters()
    found = {}
    for o in outcomes:
        if o.n != n or o.matrix_id != matrix_id:
            raise BadOrder("cannot merge outcomes of different matrices")
        counters.leaves += o.counters.leaves
        counters.pruned += o.counters.pruned
        counters.accepted += o.counters.accepted
        for rec in o.graphs:
            found.setdefault(rec.form, rec)
    return SearchOutcome(matrix_id, n, tuple(found[f] for f in sorted(found)), counters)


def brute_force_enumerate(nh, matrix_id=""):
    """Evaluate all 2^(n-1) subsets with one matrix product; oracle for the DFS."""
    n = nh.n
    if n > 16:
        raise TooLarge("brute force capped at order 16")
    aux = sort_columns(build_auxiliary(nh))
    m = n - 1
    r = np.array(aux.rows, dtype=np.int64)
    total = 1 << m
    picks = (np.arange(total, dtype=np.uint32)[:, None] >> np.arange(m)) & 1
    sums = picks.astype(np.int64) @ r.T
    good = np.all((sums == 0) | (sums == n), axis=1)
    counters = SearchCounters(leaves=total, pruned=0, accepted=int(good.sum()))
    found = {}
    full = total - 1
    for idx in np.nonzero(good)[0]:
        idx = int(idx)
        if idx > (full ^ idx):
            continue
        subset = [t + 1 for t in range(m) if (idx >> t) & 1]
        g = subset_to_graph(aux, subset)
        form = canonical_form(g)
        if form not in found:
            found[form] = GraphRecord(form, g, verify_diagonalization(nh, g))
    _close_under_complement(nh, found)
    return SearchOutcome(matrix_id, n, tuple(found[f] for f in sorted(found)), counters)
