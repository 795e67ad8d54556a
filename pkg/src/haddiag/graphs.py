"""Simple graphs on up to 64 vertices as bitmask adjacency rows.

rows[i] is the neighbor set of vertex i packed into an int, which keeps the
Laplacian exact, makes isomorphism dedup cheap (see canon), and lets the named
families, products, and Cayley constructions stay tiny.  All functions return
new Graph values; nothing mutates.
"""

import itertools
from dataclasses import dataclass

import numpy as np

from . import canon
from .errors import BadIndex, BadOrder, ContainsIdentity, NotSymmetricSet, OddOrder, TooLarge

MAX_VERTICES = 64


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple

    def __post_init__(self):
        n = self.n
        if not 1 <= n <= MAX_VERTICES:
            raise TooLarge(f"vertex count {n} outside 1..{MAX_VERTICES}")
        if len(self.rows) != n:
            raise BadOrder(f"need {n} adjacency rows")
        mask = (1 << n) - 1
        for i, r in enumerate(self.rows):
            if r & ~mask:
                raise BadIndex(f"row {i} has bits outside 0..{n - 1}")
            if (r >> i) & 1:
                raise BadIndex(f"self-loop at vertex {i}")
        for i in range(n):
            for j in range(i + 1, n):
                if ((self.rows[i] >> j) & 1) != ((self.rows[j] >> i) & 1):
                    raise BadIndex(f"asymmetric pair ({i},{j})")

    def degree(self, v):
        return self.rows[v].bit_count()

    def has_edge(self, u, v):
        return bool((self.rows[u] >> v) & 1)

    def edges(self):
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n) if self.has_edge(i, j)]

    def num_edges(self):
        return sum(r.bit_count() for r in self.rows) // 2


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Order plus upper-triangle bits of the canonically relabeled adjacency."""

    n: int
    bits: int


def from_edges(n, edges):
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise BadIndex(f"bad edge ({u},{v}) for n={n}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def relabel(g, perm):
    """perm[v] = new label of v."""
    rows = [0] * g.n
    for v in range(g.n):
        r = g.rows[v]
        nr = 0
        while r:
            low = r & -r
            nr |= 1 << perm[low.bit_length() - 1]
            r ^= low
        rows[perm[v]] = nr
    return Graph(g.n, tuple(rows))


def canonical_form(g):
    bits, _, _ = canon.canonical_labeling(g.n, g.rows)
    return CanonicalForm(g.n, bits)


def canonical_graph(g):
    _, lab, _ = canon.canonical_labeling(g.n, g.rows)
    pos = [0] * g.n
    for p, v in enumerate(lab):
        pos[v] = p
    return relabel(g, pos)


def is_isomorphic(a, b):
    return a.n == b.n and canonical_form(a) == canonical_form(b)


# ---------------------------------------------------------------- constructors

def empty_graph(n):
    return Graph(n, (0,) * n)


def complete(n):
    mask = (1 << n) - 1
    return Graph(n, tuple(mask ^ (1 << i) for i in range(n)))


def complete_bipartite(a, b):
    left = (1 << a) - 1
    right = ((1 << b) - 1) << a
    return Graph(a + b, (right,) * a + (left,) * b)


def complete_multipartite(parts):
    n = sum(parts)
    mask = (1 << n) - 1
    rows, start = [], 0
    for p in parts:
        block = ((1 << p) - 1) << start
        rows += [mask ^ block] * p
        start += p
    return Graph(n, tuple(rows))


def disjoint_union(g, h):
    rows = list(g.rows) + [r << g.n for r in h.rows]
    return Graph(g.n + h.n, tuple(rows))


def disjoint_copies(k, g):
    out = g
    for _ in range(k - 1):
        out = disjoint_union(out, g)
    return out


def join(g, h):
    """Disjoint union plus all edges between the two parts."""
    hmask = ((1 << h.n) - 1) << g.n
    gmask = (1 << g.n) - 1
    rows = [r | hmask for r in g.rows] + [(r << g.n) | gmask for r in h.rows]
    return Graph(g.n + h.n, tuple(rows))


def crown(m):
    """K_{m,m} minus a perfect matching."""
    g = complete_bipartite(m, m)
    rows = list(g.rows)
    for i in range(m):
        rows[i] ^= 1 << (m + i)
        rows[m + i] ^= 1 << i
    return Graph(2 * m, tuple(rows))


def cocktail_party(m):
    """K_{2m} minus a perfect matching."""
    g = complete(2 * m)
    rows = list(g.rows)
    for i in range(m):
        rows[2 * i] ^= 1 << (2 * i + 1)
        rows[2 * i + 1] ^= 1 << (2 * i)
    return Graph(2 * m, tuple(rows))


def complement(g):
    mask = (1 << g.n) - 1
    return Graph(g.n, tuple((mask ^ r) ^ (1 << i) for i, r in enumerate(g.rows)))


def cartesian_product(g, h):
    """Vertex (u,x) -> u*h.n + x; edges when one coordinate steps along an edge."""
    n = g.n * h.n
    if n > MAX_VERTICES:
        raise TooLarge(f"product order {n} exceeds {MAX_VERTICES}")
    rows = [0] * n
    for u in range(g.n):
        for x in range(h.n):
            i = u * h.n + x
            rows[i] |= h.rows[x] << (u * h.n)
            r = g.rows[u]
            while r:
                low = r & -r
                rows[i] |= 1 << ((low.bit_length() - 1) * h.n + x)
                r ^= low
    return Graph(n, tuple(rows))


def lexicographic_product(g, h):
    """A(G o H) = A(G) (x) J + I (x) A(H): copies of H, complete between G-adjacent copies."""
    n = g.n * h.n
    if n > MAX_VERTICES:
        raise TooLarge(f"product order {n} exceeds {MAX_VERTICES}")
    hall = (1 << h.n) - 1
    rows = [0] * n
    for u in range(g.n):
        for x in range(h.n):
            i = u * h.n + x
            rows[i] |= h.rows[x] << (u * h.n)
            r = g.rows[u]
            while r:
                low = r & -r
                rows[i] |= hall << ((low.bit_length() - 1) * h.n)
                r ^= low
    return Graph(n, tuple(rows))


def cube():
    """Q_3, the 3-cube: K_2 `cartesian` K_2 `cartesian` K_2."""
    k2 = complete(2)
    return cartesian_product(cartesian_product(k2, k2), k2)


def cayley(orders, connection):
    """Cayley graph of Z_{m1} x ... x Z_{mk}; vertices in lexicographic tuple order."""
    orders = tuple(int(m) for m in orders)
    n = 1
    for m in orders:
        n *= m
    if n > MAX_VERTICES:
        raise TooLarge(f"group order {n} exceeds {MAX_VERTICES}")
    conn = {tuple(int(c) % m for c, m in zip(s, orders)) for s in connection}
    zero = (0,) * len(orders)
    if zero in conn:
        raise ContainsIdentity("connection set contains the identity")
    for s in conn:
        if tuple((-c) % m for c, m in zip(s, orders)) not in conn:
            raise NotSymmetricSet(f"connection set not closed under inversion: {s}")
    elements = list(itertools.product(*(range(m) for m in orders)))
    index = {e: i for i, e in enumerate(elements)}
    rows = [0] * n
    for i, e in enumerate(elements):
        for s in conn:
            j = index[tuple((a + b) % m for a, b, m in zip(e, s, orders))]
            rows[i] |= 1 << j
    return Graph(n, tuple(rows))


_NAMED = {
    "K_n": lambda n: complete(n),
    "nK1": lambda n: empty_graph(n),
    "K_mm": lambda m: complete_bipartite(m, m),
    "kK_m": lambda k, m: disjoint_copies(k, complete(m)),
    "H_nn": lambda m: crown(m),
    "CP_2n": lambda m: cocktail_party(m),
    "Q3": lambda: cube(),
    "K_multi": lambda parts: complete_multipartite(tuple(parts)),
}


def named(kind, **params):
    if kind not in _NAMED:
        raise BadIndex(f"unknown named family {kind!r}; have {sorted(_NAMED)}")
    return _NAMED[kind](**params)


# ------------------------------------------------------------------- matrices

def adjacency_array(g):
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for i, r in enumerate(g.rows):
        while r:
            low = r & -r
            a[i, low.bit_length() - 1] = 1
            r ^= low
    return a


def laplacian(g):
    a = adjacency_array(g)
    return np.diag(a.sum(axis=1)) - a


# ----------------------------------------------------------- structural tests

def four_path_closure(g):
    """True iff every path u-v-w-x on four distinct vertices has the chord u-x."""
    for v in range(g.n):
        for w in range(v + 1, g.n):
            if not g.has_edge(v, w):
                continue
            us = g.rows[v] & ~(1 << w)
            xs = g.rows[w] & ~(1 << v)
            u = us
            while u:
                lu = u & -u
                ui = lu.bit_length() - 1
                need = xs & ~(1 << ui)
                if need & ~g.rows[ui]:
                    return False
                u ^= lu
    return True


def connected_components(g):
    seen = 0
    sizes = []
    for v in range(g.n):
        if (seen >> v) & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= g.rows[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        sizes.append(comp.bit_count())
    return sorted(sizes, reverse=True)


def _bfs_dist(g, v):
    dist = [-1] * g.n
    dist[v] = 0
    frontier = 1 << v
    seen = frontier
    d = 0
    while frontier:
        d += 1
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= g.rows[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= frontier
        f = frontier
        while f:
            low = f & -f
            dist[low.bit_length() - 1] = d
            f ^= low
    return dist


def diameter(g):
    """Longest shortest path; None when disconnected."""
    best = 0
    for v in range(g.n):
        dist = _bfs_dist(g, v)
        if -1 in dist:
            return None
        best = max(best, max(dist))
    return best


def girth(g):
    """Shortest cycle length; None when acyclic."""
    best = None
    for v in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[v] = 0
        queue = [v]
        qi = 0
        while qi < len(queue):
            x = queue[qi]
            qi += 1
            r = g.rows[x]
            while r:
                low = r & -r
                u = low.bit_length() - 1
                r ^= low
                if dist[u] == -1:
                    dist[u] = dist[x] + 1
                    parent[u] = x
                    queue.append(u)
                elif u != parent[x]:
                    c = dist[x] + dist[u] + 1
                    if best is None or c < best:
                        best = c
    return best


def clique_number(g, node_budget=None):
    """Branch and bound max clique; raises Aborted when node_budget runs out."""
    from .errors import Aborted

    order = sorted(range(g.n), key=g.degree)
    best = [0]
    budget = [node_budget if node_budget is not None else -1]

    def grow(candidates, size):
        if budget[0] == 0:
            raise Aborted("clique search budget exhausted")
        if budget[0] > 0:
            budget[0] -= 1
        if size + candidates.bit_count() <= best[0]:
            return
        if not candidates:
            best[0] = max(best[0], size)
            return
        c = candidates
        while c:
            if size + c.bit_count() <= best[0]:
                return
            low = c & -c
            v = low.bit_length() - 1
            c ^= low
            grow(c & g.rows[v], size + 1)

    grow((1 << g.n) - 1, 0)
    return best[0]


def is_cograph(g):
    """Cotree recursion: every induced piece >= 2 vertices splits in G or in its complement."""

    def split(rows, verts):
        if len(verts) <= 1:
            return True
        comps = _mask_components(rows, verts)
        if len(comps) == 1:
            vm = 0
            for v in verts:
                vm |= 1 << v
            crows = {v: (vm & ~rows[v]) & ~(1 << v) for v in verts}
            comps = _mask_components(crows, verts)
            if len(comps) == 1:
                return False
            rows = crows
        return all(split(rows, [v for v in verts if (comp >> v) & 1]) for comp in comps)

    return split({v: g.rows[v] for v in range(g.n)}, list(range(g.n)))


def _mask_components(rows, verts):
    vm = 0
    for v in verts:
        vm |= 1 << v
    seen = 0
    comps = []
    for v in verts:
        if (seen >> v) & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= rows[low.bit_length() - 1] & vm
                f ^= low
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def is_chordal(g):
    """Maximum cardinality search, then verify the perfect elimination order."""
    n = g.n
    weight = [0] * n
    order = []
    placed = 0
    for _ in range(n):
        v = max((x for x in range(n) if not (placed >> x) & 1), key=lambda x: (weight[x], -x))
        order.append(v)
        placed |= 1 << v
        r = g.rows[v]
        while r:
            low = r & -r
            weight[low.bit_length() - 1] += 1
            r ^= low
    order.reverse()
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    for i, v in enumerate(order):
        later = [u for u in range(n) if g.has_edge(v, u) and pos[u] > i]
        if later:
            w = min(later, key=lambda u: pos[u])
            for u in later:
                if u != w and not g.has_edge(w, u):
                    return False
    return True


def is_distance_regular(g):
    """Connected with intersection numbers a_j, b_j, c_j independent of the vertex pair."""
    dists = [_bfs_dist(g, v) for v in range(g.n)]
    if any(-1 in d for d in dists):
        return False
    diam = max(max(d) for d in dists)
    table = {}
    for v in range(g.n):
        dv = dists[v]
        for u in range(g.n):
            j = dv[u]
            c = a = b = 0
            r = g.rows[u]
            while r:
                low = r & -r
                w = low.bit_length() - 1
                r ^= low
                dw = dv[w]
                if dw == j - 1:
                    c += 1
                elif dw == j:
                    a += 1
                else:
                    b += 1
            if j in table:
                if table[j] != (c, a, b):
                    return False
            else:
                table[j] = (c, a, b)
    return len(table) == diam + 1


@dataclass(frozen=True)
class GraphInvariants:
    degree_sequence: tuple
    regular_degree: object
    component_sizes: tuple
    girth: object
    diameter: object
    clique_number: int
    is_cograph: bool
    is_chordal: bool
    is_distance_regular: bool


def invariants(g, clique_budget=None):
    degs = tuple(sorted((g.degree(v) for v in range(g.n)), reverse=True))
    return GraphInvariants(
        degree_sequence=degs,
        regular_degree=degs[0] if len(set(degs)) == 1 else None,
        component_sizes=tuple(connected_components(g)),
        girth=girth(g),
        diameter=diameter(g),
        clique_number=clique_number(g, clique_budget),
        is_cograph=is_cograph(g),
        is_chordal=is_chordal(g),
        is_distance_regular=is_distance_regular(g),
    )


# ------------------------------------------------------------ perfect matchings

def remove_perfect_matching(g):
    """All graphs G - M over perfect matchings M of G, one per isomorphism class.

    The matching DFS always extends the lowest unmatched vertex; partial states
    are deduped by the canonical form of the current graph with matched
    vertices colored, which collapses isomorphic branches (essential for very
    symmetric inputs).  Result is sorted by canonical form.
    """
    if g.n % 2:
        raise OddOrder(f"no perfect matching on {g.n} vertices")
    results = {}
    seen_states = set()

    def state_key(rows, matched):
        colors = [(matched >> v) & 1 for v in range(g.n)]
        bits, _, _ = canon.canonical_labeling(g.n, tuple(rows), colors)
        return (matched.bit_count(), bits)

    def walk(rows, matched):
        if matched.bit_count() == g.n:
            h = Graph(g.n, tuple(rows))
            results[canonical_form(h)] = h
            return
        v = (~matched & -~matched).bit_length() - 1
        options = rows[v] & ~matched
        while options:
            low = options & -options
            u = low.bit_length() - 1
            options ^= low
            nrows = list(rows)
            nrows[v] &= ~(1 << u)
            nrows[u] &= ~(1 << v)
            nmatched = matched | (1 << v) | (1 << u)
            key = state_key(nrows, nmatched)
            if key in seen_states:
                continue
            seen_states.add(key)
            walk(nrows, nmatched)

    walk(list(g.rows), 0)
    return tuple(results[k] for k in sorted(results))


def add_perfect_matching(g):
    """All graphs G + M over perfect matchings M of the complement, one per class.

    Uses the identity G + M = complement(complement(G) - M).
    """
    return tuple(
        sorted(
            (complement(h) for h in remove_perfect_matching(complement(g))),
            key=canonical_form,
        )
    )
