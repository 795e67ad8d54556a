"""Exact Laplacian spectra for Hadamard-diagonalized graphs.

For a normalized Hadamard matrix H with core matrix C (H with its all-ones
first row and column dropped), (1/n C)^{-1} = C^T - J exactly, with entries in
{0,-2}.  That identity recovers the full eigenvalue list of a diagonalized
Laplacian from its first row alone, and also proves every eigenvalue is an
even integer.  Everything here is integer arithmetic; no floating point.
"""

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .errors import BadOrder, NotDiagonal, NotDivisible
from .graphs import laplacian
from .hadamard import NormalizedHadamard, core_matrix


@dataclass(frozen=True)
class SpectrumVector:
    """Eigenvalues aligned with Hadamard columns; values[0] sits on the all-ones column."""

    values: tuple

    @property
    def n(self):
        return len(self.values)


def inverse_core(nh):
    """C^T - J as an integer array: the exact inverse of (1/n) * core."""
    c = core_matrix(nh).to_array()
    return c.T - 1


def recover_eigenvalues(nh, first_row):
    """lambda_2..lambda_n from the off-diagonal first Laplacian row (entries in {0,-1})."""
    fr = np.asarray(list(first_row), dtype=np.int64)
    if fr.shape != (nh.n - 1,):
        raise BadOrder(f"first row needs {nh.n - 1} entries")
    lam = inverse_core(nh) @ fr
    return tuple(int(v) for v in lam)


def full_spectrum(nh, first_row):
    """SpectrumVector with the all-ones column's 0 prepended."""
    return SpectrumVector((0,) + recover_eigenvalues(nh, first_row))


def verify_diagonalization(h, g):
    """H^T L(G) H must be diagonal with entries divisible by n; returns the spectrum.

    Works for arbitrary Hadamard matrices, not just normalized ones, so
    counterexamples that diagonalize nothing connected can be probed.
    """
    if isinstance(h, NormalizedHadamard):
        h = h.matrix
    if h.n != g.n:
        raise BadOrder(f"order mismatch: matrix {h.n}, graph {g.n}")
    ha = h.to_array()
    m = ha.T @ laplacian(g) @ ha
    off = m - np.diag(np.diag(m))
    if np.any(off):
        i, j = np.argwhere(off)[0]
        raise NotDiagonal(f"off-diagonal entry at ({i},{j}) is {int(m[i, j])}")
    diag = np.diag(m)
    if np.any(diag % h.n):
        k = int(np.argwhere(diag % h.n)[0][0])
        raise NotDivisible(f"diagonal entry {int(diag[k])} at {k} not divisible by {h.n}")
    return SpectrumVector(tuple(int(v) // h.n for v in diag))


def spectrum_multiset(spectrum):
    """Grouping key like "{0^(1),4^(3)}": ascending values with multiplicities."""
    values = spectrum.values if isinstance(spectrum, SpectrumVector) else tuple(spectrum)
    counts = Counter(values)
    inner = ",".join(f"{v}^({counts[v]})" for v in sorted(counts))
    return "{" + inner + "}"


def algebraic_connectivity(spectrum):
    """Second-smallest eigenvalue counting multiplicity; 0 iff disconnected."""
    values = spectrum.values if isinstance(spectrum, SpectrumVector) else tuple(spectrum)
    return sorted(values)[1]
