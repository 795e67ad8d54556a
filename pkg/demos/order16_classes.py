"""Order 16: the first order where matrices disagree.

Up to order 12 every Hadamard matrix diagonalizes the same graphs.  The
five inequivalent order-16 matrices split: their graph sets have sizes
46, 50, 48, 24 and 10, all five sets are distinct, and together they
cover 50 graphs.  This enumerates all five and prints the partition.
"""

from haddiag.auxsearch import enumerate_graphs
from haddiag.catalog import build_catalog, class_size_scatter
from haddiag.data import load_order
from haddiag.hadamard import normalize


def main():
    outcomes = []
    for name, mat in load_order(16).items():
        out = enumerate_graphs(normalize(mat), matrix_id=name)
        outcomes.append(out)
        c = out.counters
        print(
            f"{name}: {len(out.graphs):3} graphs"
            f"  (leaves {c.leaves}, pruned subtrees {c.pruned})"
        )

    cat = build_catalog(outcomes)
    print(f"\nunion over all five matrices: {len(cat.union)} graphs")
    print(f"equivalence classes (same graph set): {len(cat.classes)}")
    for entry in cat.classes:
        ids = ", ".join(entry.matrix_ids)
        print(f"  {entry.graphs:3} graphs <- {ids}")
    print(f"scatter (graphs per class, matrices per class): {class_size_scatter(cat)}")


if __name__ == "__main__":
    main()
