"""Building big diagonalizable graphs from small ones.

If H1 diagonalizes G1 and H2 diagonalizes G2, their Kronecker product
H1 (x) H2 diagonalizes both the Cartesian and the lexicographic product
of the graphs.  Starting from order-4 pieces this manufactures verified
examples up to order 64 without any searching.
"""

from haddiag.graphs import (
    cartesian_product,
    complete,
    complete_bipartite,
    cube,
    disjoint_copies,
    is_isomorphic,
    lexicographic_product,
)
from haddiag.hadamard import kronecker, sylvester
from haddiag.spectra import spectrum_multiset, verify_diagonalization

PIECES = (
    ("K2", complete(2), sylvester(1)),
    ("K4", complete(4), sylvester(2)),
    ("K22", complete_bipartite(2, 2), sylvester(2)),
)


def main():
    # the 3-cube is K2 x K2 x K2; check the factor-by-factor build
    q3 = cartesian_product(complete(2), cartesian_product(complete(2), complete(2)))
    assert is_isomorphic(q3, cube())
    spectrum = verify_diagonalization(sylvester(3), q3)
    print(f"Q3 = K2 x K2 x K2: spectrum {spectrum_multiset(spectrum)}")
    print()

    for name1, g1, h1 in PIECES:
        for name2, g2, h2 in PIECES:
            hk = kronecker(h1, h2)
            cart = verify_diagonalization(hk, cartesian_product(g1, g2))
            lex = verify_diagonalization(hk, lexicographic_product(g1, g2))
            print(
                f"{name1} * {name2} (order {hk.n:2}):"
                f"  cartesian {spectrum_multiset(cart):22}"
                f"  lexicographic {spectrum_multiset(lex)}"
            )

    # towers stay verifiable as long as the order stays within bounds;
    # a disconnected base keeps the result from collapsing to a clique
    g, h, name = disjoint_copies(2, complete(2)), sylvester(2), "2K2"
    while h.n < 64:
        g = lexicographic_product(complete(2), g)
        h = kronecker(sylvester(1), h)
        name = f"K2 lex ({name})"
    spectrum = verify_diagonalization(h, g)
    print(f"\n{name}: order {h.n}, spectrum {spectrum_multiset(spectrum)}")


if __name__ == "__main__":
    main()
