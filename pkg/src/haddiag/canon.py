"""Canonical labeling by partition refinement with individualization and backtracking.

The engine computes, for a (optionally vertex-colored) simple graph given as
bitmask adjacency rows, a canonical labeling: the vertex ordering whose
relabeled upper-triangle adjacency bitstring is lexicographically least over
the leaves of the refinement search tree.  Two graphs are isomorphic (with
colors preserved) iff they have equal color signatures and equal canonical
bitstrings, which is what the catalog uses for dedup.

Outline, following the usual McKay-style scheme:

- An ordered partition of the vertices is refined to the coarsest equitable
  partition (every cell sees every other cell with uniform degree).  The
  refinement worklist starts with all cells and processes splitter sets as
  bitmasks; when a cell splits, fragments are ordered by ascending degree
  toward the splitter, and all fragments but one largest are queued (the
  parent, if still queued, is replaced by all fragments).
- If the partition is not discrete, the first smallest non-singleton cell is
  the target: each of its vertices in turn is individualized (moved into a
  singleton cell placed in front of the remainder) and refinement continues.
- Leaves yield candidate labelings.  Automorphisms are discovered whenever a
  leaf reproduces the bitstring of the first or the best leaf; their orbits,
  restricted to generators fixing the current branching prefix, prune sibling
  branches that can only repeat earlier leaves.  Pruned search still attains
  the unpruned minimum because automorphisms map leaves to equal-bits leaves.

Everything is pure Python over int bitmasks except leaf extraction, which
gathers the relabeled upper triangle with numpy; graphs here are small (n <= 96
in the offline tooling, n <= 64 in the engine) but are often highly symmetric,
which is exactly the regime where the orbit pruning pays off.
"""

import numpy as np


def refine(adj, cells, alpha):
    """Coarsest equitable refinement of ordered partition `cells` w.r.t. adj.

    cells: list of vertex lists.  alpha: initial splitter bitmasks.  Returns a
    new list of cells; input lists are not mutated.
    """
    cells = list(cells)
    queue = list(alpha)
    queued = set(queue)
    qi = 0
    while qi < len(queue):
        a = queue[qi]
        qi += 1
        if a not in queued:
            continue
        queued.discard(a)
        out = []
        changed = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            buckets = {}
            for v in c:
                buckets.setdefault((adj[v] & a).bit_count(), []).append(v)
            if len(buckets) == 1:
                out.append(c)
                continue
            changed = True
            frags = [buckets[k] for k in sorted(buckets)]
            out.extend(frags)
            cmask = 0
            for v in c:
                cmask |= 1 << v
            fmasks = []
            for f in frags:
                fm = 0
                for v in f:
                    fm |= 1 << v
                fmasks.append(fm)
            if cmask in queued:
                queued.discard(cmask)
                add = fmasks
            else:
                big = max(range(len(frags)), key=lambda k: len(frags[k]))
                add = [fm for k, fm in enumerate(fmasks) if k != big]
            for fm in add:
                if fm not in queued:
                    queue.append(fm)
                    queued.add(fm)
        if changed:
            cells = out
    return cells


def _leaf_bits(amat, iu, pad, cells):
    """Upper-triangle bits of the relabeled adjacency, MSB = pair (0,1)."""
    lab = [c[0] for c in cells]
    sub = amat[np.ix_(lab, lab)]
    packed = np.packbits(sub[iu])
    bits = int.from_bytes(packed.tobytes(), "big") >> pad
    return bits, lab


class _Search:
    def __init__(self, n, adj):
        self.n = n
        self.adj = adj
        amat = np.zeros((n, n), dtype=np.uint8)
        for i, r in enumerate(adj):
            for j in range(n):
                if (r >> j) & 1:
                    amat[i, j] = 1
        self.amat = amat
        self.iu = np.triu_indices(n, 1)
        m = n * (n - 1) // 2
        self.pad = (-m) % 8
        self.best_bits = None
        self.best_lab = None
        self.first_bits = None
        self.first_pos = None
        self.gens = []
        self._gen_seen = set()

    def _record_aut(self, ref_pos, lab):
        # sigma maps the reference leaf's labeling onto this leaf's: an automorphism.
        sigma = tuple(lab[ref_pos[x]] for x in range(self.n))
        if sigma in self._gen_seen:
            return
        self._gen_seen.add(sigma)
        if any(sigma[i] != i for i in range(self.n)):
            self.gens.append(sigma)

    def run(self, cells, prefix, fixed, checked):
        """fixed: indices of generators (among gens[:checked]) fixing every prefix vertex.

        Generators found during this node's lifetime are absorbed incrementally;
        a per-node union-find over the currently fixed generators prunes sibling
        branches whose target vertex shares an orbit with one already explored.
        """
        n = self.n
        target = None
        for idx, c in enumerate(cells):
            if len(c) > 1 and (target is None or len(c) < len(cells[target])):
                target = idx
        if target is None:
            bits, lab = _leaf_bits(self.amat, self.iu, self.pad, cells)
            if self.first_bits is None:
                self.first_bits = bits
                pos = [0] * n
                for p, v in enumerate(lab):
                    pos[v] = p
                self.first_pos = pos
            elif bits == self.first_bits:
                self._record_aut(self.first_pos, lab)
            if self.best_bits is None or bits < self.best_bits:
                self.best_bits = bits
                self.best_lab = lab
            elif bits == self.best_bits and lab != self.best_lab:
                pos = [0] * n
                for p, v in enumerate(self.best_lab):
                    pos[v] = p
                self._record_aut(pos, lab)
            return
        cell = cells[target]
        gens = self.gens
        parent = list(range(n))

        def find(x):
            root = x
            while parent[root] != root:
                root = parent[root]
            while parent[x] != root:
                parent[x], x = root, parent[x]
            return root

        applied = 0
        labels = None
        branched = []
        branched_labels = set()
        for v in sorted(cell):
            while checked < len(gens):
                g = gens[checked]
                for p_ in prefix:
                    if g[p_] != p_:
                        break
                else:
                    fixed.append(checked)
                checked += 1
            if applied < len(fixed):
                while applied < len(fixed):
                    g = gens[fixed[applied]]
                    applied += 1
                    for x in range(n):
                        rx, ry = find(x), find(g[x])
                        if rx != ry:
                            parent[rx] = ry
                labels = None
            if branched:
                if labels is None:
                    labels = [find(x) for x in range(n)]
                    branched_labels = {labels[u] for u in branched}
                if labels[v] in branched_labels:
                    continue
                branched_labels.add(labels[v])
            branched.append(v)
            rest = [u for u in cell if u != v]
            child = cells[:target] + [[v], rest] + cells[target + 1 :]
            child = refine(self.adj, child, [1 << v])
            prefix.append(v)
            child_fixed = [i for i in fixed if gens[i][v] == v]
            self.run(child, prefix, child_fixed, checked)
            prefix.pop()


def canonical_labeling(n, adj, colors=None):
    """Return (bits, lab, generators).

    bits: canonical upper-triangle adjacency as an int, pair (0,1) most
    significant.  lab: tuple with lab[position] = original vertex.  generators:
    automorphism generators discovered along the way (not a full generating
    set in general, but each is a genuine automorphism).
    """
    if n == 0:
        return 0, (), []
    if colors is None:
        cells = [list(range(n))]
    else:
        groups = {}
        for v in range(n):
            groups.setdefault(colors[v], []).append(v)
        cells = [groups[c] for c in sorted(groups)]
    masks = []
    for c in cells:
        m = 0
        for v in c:
            m |= 1 << v
        masks.append(m)
    cells = refine(adj, cells, masks)
    s = _Search(n, adj)
    s.run(cells, [], [], 0)
    return s.best_bits, tuple(s.best_lab), s.gens


def color_signature(n, colors):
    """Ordered (color, class size) pairs; part of the canonical key for colored graphs."""
    if colors is None:
        return ((0, n),)
    counts = {}
    for c in colors:
        counts[c] = counts.get(c, 0) + 1
    return tuple(sorted(counts.items()))
