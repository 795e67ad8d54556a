"""Exact spectrum recovery and diagonalization checks."""

import numpy as np
import pytest

from haddiag.data import load
from haddiag.errors import BadOrder, NotDiagonal
from haddiag.graphs import complete, empty_graph, from_edges, laplacian
from haddiag.hadamard import core_matrix, negate_rows, normalize, sylvester
from haddiag.spectra import (
    SpectrumVector,
    algebraic_connectivity,
    full_spectrum,
    inverse_core,
    recover_eigenvalues,
    spectrum_multiset,
    verify_diagonalization,
)


def normalized(name_or_k):
    if isinstance(name_or_k, str):
        return normalize(load(name_or_k))
    return normalize(sylvester(name_or_k))


def column_split(nh):
    """The bipartition of rows given by the signs in column 1."""
    neg = nh.matrix.column_bits()[1]
    plus = [i for i in range(nh.n) if not (neg >> i) & 1]
    minus = [i for i in range(nh.n) if (neg >> i) & 1]
    return plus, minus


def across_graph(nh):
    plus, minus = column_split(nh)
    return from_edges(nh.n, [(u, v) for u in plus for v in minus])


def within_graph(nh):
    plus, minus = column_split(nh)
    edges = [(u, v) for part in (plus, minus) for i, u in enumerate(part) for v in part[i + 1:]]
    return from_edges(nh.n, edges)


def first_row(g):
    return [-1 if g.has_edge(0, j) else 0 for j in range(1, g.n)]


def test_inverse_core_is_exact_integer_inverse():
    for nh in [normalized(1), normalized(2), normalized(3), normalized("had.12")]:
        n = nh.n
        c = core_matrix(nh).to_array()
        ic = inverse_core(nh)
        assert np.array_equal(ic @ c, n * np.eye(n - 1, dtype=np.int64))
        assert set(np.unique(ic)) <= {0, -2}


def test_recover_eigenvalues_complete_graph():
    assert recover_eigenvalues(normalized(2), [-1, -1, -1]) == (4, 4, 4)
    assert recover_eigenvalues(normalized(3), [-1] * 7) == (8,) * 7
    assert full_spectrum(normalized(2), [-1, -1, -1]) == SpectrumVector((0, 4, 4, 4))
    assert full_spectrum(normalized(2), [0, 0, 0]) == SpectrumVector((0, 0, 0, 0))
    with pytest.raises(BadOrder):
        recover_eigenvalues(normalized(2), [-1, -1])


def test_first_row_recovery_matches_direct_verification():
    for nh in [normalized(2), normalized(3), normalized("had.12")]:
        n = nh.n
        for g in [complete(n), empty_graph(n), across_graph(nh), within_graph(nh)]:
            spec = verify_diagonalization(nh, g)
            assert full_spectrum(nh, first_row(g)) == spec
            floats = np.linalg.eigvalsh(laplacian(g).astype(float))
            assert np.allclose(sorted(spec.values), floats, atol=1e-8)


def test_verify_diagonalization_exact_values():
    nh = normalized(2)
    assert verify_diagonalization(nh, complete(4)).values == (0, 4, 4, 4)
    assert verify_diagonalization(nh, empty_graph(4)).values == (0, 0, 0, 0)
    # parts {0,1} vs {2,3} sit on sylvester column 2, so the big eigenvalue
    # lands there and the other nontrivial columns carry n/2
    both = from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    assert verify_diagonalization(nh, both).values == (0, 2, 4, 2)


def test_split_graph_spectra():
    for nh in [normalized(2), normalized(3), normalized("had.12"), normalized("had.20.1")]:
        n = nh.n
        across = verify_diagonalization(nh, across_graph(nh))
        assert across.values[0] == 0
        assert sorted(across.values) == [0] + [n // 2] * (n - 2) + [n]
        assert algebraic_connectivity(across) == n // 2
        within = verify_diagonalization(nh, within_graph(nh))
        assert sorted(within.values) == [0, 0] + [n // 2] * (n - 2)
        assert algebraic_connectivity(within) == 0


def test_not_diagonal():
    nh = normalized(2)
    p4 = from_edges(4, [(0, 1), (1, 2), (2, 3)])
    with pytest.raises(NotDiagonal):
        verify_diagonalization(nh, p4)
    # negating one row breaks every nonempty graph in the standard family
    broken = negate_rows(sylvester(2), [1])
    for g in [complete(4), across_graph(nh), within_graph(nh)]:
        with pytest.raises(NotDiagonal):
            verify_diagonalization(broken, g)
    assert verify_diagonalization(broken, empty_graph(4)).values == (0, 0, 0, 0)


def test_order_mismatch():
    with pytest.raises(BadOrder):
        verify_diagonalization(sylvester(2), complete(8))


def test_spectrum_multiset():
    assert spectrum_multiset(SpectrumVector((0, 4, 4, 4))) == "{0^(1),4^(3)}"
    assert spectrum_multiset((4, 0, 4, 4)) == "{0^(1),4^(3)}"
    assert spectrum_multiset((0, 0, 2, 2)) == "{0^(2),2^(2)}"


def test_algebraic_connectivity():
    assert algebraic_connectivity(SpectrumVector((0, 4, 4, 4))) == 4
    assert algebraic_connectivity((0, 0, 2, 2)) == 0
    assert algebraic_connectivity((0, 2, 4, 2)) == 2
