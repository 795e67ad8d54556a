"""The four graphs that show up at every order.

K_n, K_{n/2,n/2}, the empty graph and two disjoint half-cliques are
diagonalized by every normalized Hadamard matrix of their order.  This
walks the verification by hand at order 8, then enumerates order 12 to
show that there the four are the whole story: orders congruent to
4 mod 8 admit nothing else.
"""

from haddiag.auxsearch import enumerate_graphs
from haddiag.catalog import standard_four
from haddiag.data import load
from haddiag.graphs import canonical_form
from haddiag.hadamard import normalize, sylvester
from haddiag.spectra import spectrum_multiset, verify_diagonalization

LABELS = ("complete", "balanced bipartite", "empty", "two half-cliques")


def main():
    h = sylvester(3)
    print("order 8, Sylvester matrix: the four ever-present graphs")
    for label, (g, expected) in zip(LABELS, standard_four(8)):
        spectrum = verify_diagonalization(h, g)
        assert sorted(spectrum.values) == sorted(expected.values)
        print(f"  {label:20} spectrum {spectrum_multiset(spectrum)}")

    print()
    print("order 12: exhaustive search over all 2^11 candidate first rows")
    outcome = enumerate_graphs(normalize(load("had.12")), matrix_id="had.12")
    print(
        f"  {len(outcome.graphs)} graphs survive "
        f"({outcome.counters.leaves} accepted leaves, {outcome.counters.pruned} subtrees cut)"
    )
    want = {canonical_form(g) for g, _ in standard_four(12)}
    assert outcome.forms() == want
    print("  ... and they are exactly the standard four.")


if __name__ == "__main__":
    main()
