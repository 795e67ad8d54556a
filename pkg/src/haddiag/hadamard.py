"""Hadamard matrices with exact, bit-packed arithmetic.

A Hadamard matrix of order n is an n x n matrix with entries +-1 whose columns
are pairwise orthogonal (H^T H = n I).  Orders other than 1 and 2 must be
multiples of 4.  Entries are stored one bit per entry (+1 -> 0, -1 -> 1) in a
tuple of per-row ints, so dot products reduce to popcounts:

    dot(u, v) = n - 2 * popcount(bits(u) ^ bits(v))

Everything here is exact integer work; numpy conversion is offered for the
modules that do matrix algebra.  Orders are capped at MAX_ORDER because the
downstream search is exponential in n and bitmask code elsewhere assumes
machine-word-sized rows.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import BadIndex, BadOrder, NonPmOne, NotOrthogonal, OrderOne, TooLarge

MAX_ORDER = 64


def _check_order(n):
    if n > MAX_ORDER:
        raise TooLarge(f"order {n} exceeds cap {MAX_ORDER}")
    if n < 1 or (n not in (1, 2) and n % 4 != 0):
        raise BadOrder(f"order {n} is not 1, 2, or a multiple of 4")


@dataclass(frozen=True)
class HadamardMatrix:
    """Validated Hadamard matrix; neg_bits[i] has bit j set iff entry (i,j) is -1."""

    n: int
    neg_bits: tuple

    def __post_init__(self):
        _check_order(self.n)
        n, mask = self.n, (1 << self.n) - 1
        if len(self.neg_bits) != n or any(r & ~mask for r in self.neg_bits):
            raise BadOrder(f"need {n} rows of {n} sign bits")
        cols = self.column_bits()
        for j in range(n):
            for k in range(j + 1, n):
                if n != 2 * (cols[j] ^ cols[k]).bit_count():
                    raise NotOrthogonal(f"columns {j} and {k} are not orthogonal")

    def entry(self, i, j):
        return -1 if (self.neg_bits[i] >> j) & 1 else 1

    def column_bits(self):
        """Column-major repack: bit i of result[j] set iff entry (i,j) is -1."""
        cols = [0] * self.n
        for i, r in enumerate(self.neg_bits):
            while r:
                low = r & -r
                cols[low.bit_length() - 1] |= 1 << i
                r ^= low
        return tuple(cols)

    def to_array(self):
        a = np.ones((self.n, self.n), dtype=np.int64)
        for i, r in enumerate(self.neg_bits):
            for j in range(self.n):
                if (r >> j) & 1:
                    a[i, j] = -1
        return a

    def transpose(self):
        return HadamardMatrix(self.n, self.column_bits())


def validate(raw):
    """Build a HadamardMatrix from a +-1 array-like, or raise the specific failure."""
    rows = [list(r) for r in raw]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise BadOrder("matrix is empty or not square")
    _check_order(n)
    bits = []
    for r in rows:
        b = 0
        for j, v in enumerate(r):
            v = int(v)
            if v == -1:
                b |= 1 << j
            elif v != 1:
                raise NonPmOne(f"entry {v!r} is not +1 or -1")
        bits.append(b)
    return HadamardMatrix(n, tuple(bits))


def sylvester(k):
    """Order 2^k Sylvester matrix: H_{m+1} = [[H_m, H_m], [H_m, -H_m]]."""
    if k < 0:
        raise BadOrder("sylvester exponent must be >= 0")
    if 1 << k > MAX_ORDER:
        raise TooLarge(f"order {1 << k} exceeds cap {MAX_ORDER}")
    rows = [0]
    m = 1
    for _ in range(k):
        mask = (1 << m) - 1
        rows = [r | (r << m) for r in rows] + [r | ((r ^ mask) << m) for r in rows]
        m *= 2
    return HadamardMatrix(m, tuple(rows))


def kronecker(a, b):
    """Kronecker product; entry ((i1,i2),(j1,j2)) = a(i1,j1) * b(i2,j2)."""
    n = a.n * b.n
    if n > MAX_ORDER:
        raise TooLarge(f"product order {n} exceeds cap {MAX_ORDER}")
    bmask = (1 << b.n) - 1
    rows = []
    for ra in a.neg_bits:
        for rb in b.neg_bits:
            r = 0
            for j1 in range(a.n):
                block = rb ^ bmask if (ra >> j1) & 1 else rb
                r |= block << (j1 * b.n)
            rows.append(r)
    return HadamardMatrix(n, tuple(rows))


def negate_rows(h, indices):
    idx = _index_set(h.n, indices)
    mask = (1 << h.n) - 1
    rows = [r ^ mask if i in idx else r for i, r in enumerate(h.neg_bits)]
    return HadamardMatrix(h.n, tuple(rows))


def negate_columns(h, indices):
    idx = _index_set(h.n, indices)
    flip = 0
    for j in idx:
        flip |= 1 << j
    return HadamardMatrix(h.n, tuple(r ^ flip for r in h.neg_bits))


def permute_rows(h, perm):
    p = _check_perm(h.n, perm)
    return HadamardMatrix(h.n, tuple(h.neg_bits[p[i]] for i in range(h.n)))


def permute_columns(h, perm):
    p = _check_perm(h.n, perm)
    rows = []
    for r in h.neg_bits:
        rows.append(sum(((r >> p[j]) & 1) << j for j in range(h.n)))
    return HadamardMatrix(h.n, tuple(rows))


def _index_set(n, indices):
    idx = set()
    for i in indices:
        i = int(i)
        if not 0 <= i < n:
            raise BadIndex(f"index {i} out of range for order {n}")
        idx.add(i)
    return idx


def _check_perm(n, perm):
    p = [int(i) for i in perm]
    if sorted(p) != list(range(n)):
        raise BadIndex(f"not a permutation of 0..{n - 1}: {perm!r}")
    return p


@dataclass(frozen=True)
class NormalizedHadamard:
    """Hadamard matrix whose first row and first column are all +1.

    negated_columns/negated_rows record which indices normalize() flipped, so
    the original matrix can be recovered exactly.
    """

    matrix: HadamardMatrix
    negated_columns: tuple = ()
    negated_rows: tuple = ()

    def __post_init__(self):
        m = self.matrix
        if m.neg_bits[0] != 0:
            raise NonPmOne("first row is not all +1")
        if any(r & 1 for r in m.neg_bits):
            raise NonPmOne("first column is not all +1")

    @property
    def n(self):
        return self.matrix.n

    def to_array(self):
        return self.matrix.to_array()


def normalize(h):
    """Negate columns with a -1 in row 0, then rows with a -1 in column 0."""
    neg_cols = tuple(j for j in range(h.n) if (h.neg_bits[0] >> j) & 1)
    m = negate_columns(h, neg_cols)
    neg_rows = tuple(i for i in range(h.n) if m.neg_bits[i] & 1)
    m = negate_rows(m, neg_rows)
    return NormalizedHadamard(m, neg_cols, neg_rows)


@dataclass(frozen=True)
class CoreMatrix:
    """Lower-right (n-1) x (n-1) block of a normalized Hadamard matrix."""

    m: int
    neg_bits: tuple

    def to_array(self):
        a = np.ones((self.m, self.m), dtype=np.int64)
        for i, r in enumerate(self.neg_bits):
            for j in range(self.m):
                if (r >> j) & 1:
                    a[i, j] = -1
        return a


def core_matrix(nh):
    """Drop the all-ones first row and column."""
    if nh.n == 1:
        raise OrderOne("order-1 matrix has no core")
    rows = tuple(r >> 1 for r in nh.matrix.neg_bits[1:])
    return CoreMatrix(nh.n - 1, rows)
