"""Command-line driver.

Subcommands: validate sign-text matrix files, enumerate diagonalized graphs
per matrix (in parallel across matrices), build catalog/stats/scatter files
from enumeration results, verify bundled data against the published counts,
and probe the equivalence conjecture on given matrices.

Exit codes: 0 success, 2 verification mismatch, 3 input error, 4 budget
abort.
"""

import argparse
import multiprocessing
import sys
from pathlib import Path

from . import data
from .auxsearch import (
    DEFAULT_NODE_BUDGET,
    SearchCounters,
    SearchOutcome,
    GraphRecord,
    brute_force_enumerate,
    enumerate_graphs,
    merge_outcomes,
)
from .catalog import (
    build_catalog,
    catalog_document,
    class_size_scatter,
    match_zoo,
    probe_equivalence_conjecture,
    stats_report,
    stats_rows,
)
from .errors import Aborted, HaddiagError
from .graphs import (
    canonical_form,
    cartesian_product,
    complete,
    complete_bipartite,
    cube,
    disjoint_copies,
    empty_graph,
    lexicographic_product,
)
from .hadamard import normalize
from .io_formats import (
    SCATTER_HEADER,
    STATS_HEADER,
    decode_graph6,
    matrix_digest,
    parse_sloane,
    read_results,
    results_document,
    write_csv,
    write_json,
    write_results,
)
from .spectra import SpectrumVector

OK, MISMATCH, INPUT_ERROR, BUDGET = 0, 2, 3, 4

# published counts: order -> (matrices, union graphs)
TABLE1 = {4: (1, 4), 8: (1, 10), 12: (1, 4), 16: (5, 50), 20: (3, 4), 24: (60, 26)}

# per-matrix graph counts for the two orders with several classes
PER_MATRIX = {"had.16.0": 46, "had.16.1": 50, "had.16.2": 48, "had.16.3": 24, "had.16.4": 10}
for _j in range(1, 61):
    PER_MATRIX[f"had.24.{_j}"] = 26 if _j <= 7 else (4 if _j == 60 else 10)

# order-24 class partition as (graphs-per-class, matrices-per-class) points
SCATTER24 = {(26, 7), (10, 1), (10, 51), (4, 1)}


def zoo8():
    """The ten order-8 graphs, independently constructed."""
    return (
        complete(8),
        disjoint_copies(2, empty_graph(4)),
        lexicographic_product(complete(2), complete_bipartite(2, 2)),
        disjoint_copies(2, disjoint_copies(2, complete(2))),
        lexicographic_product(complete(2), disjoint_copies(2, complete(2))),
        disjoint_copies(2, complete_bipartite(2, 2)),
        complete_bipartite(4, 4),
        disjoint_copies(2, complete(4)),
        cartesian_product(complete(2), complete(4)),
        cube(),
    )


def _collect(paths):
    """(matrix_id, HadamardMatrix) pairs from files or directories."""
    files = []
    for p in paths:
        path = Path(p)
        if path.is_dir():
            found = [q for q in path.iterdir() if q.is_file()]
            files.extend(sorted(found, key=lambda q: data.name_key(q.name)))
        elif path.is_file():
            files.append(path)
        else:
            raise HaddiagError(f"no such input: {p}")
    mats = []
    for f in files:
        parsed = parse_sloane(f.read_text(encoding="utf-8"))
        if len(parsed) == 1:
            mats.append((f.name, parsed[0]))
        else:
            mats.extend((f"{f.name}#{k}", m) for k, m in enumerate(parsed))
    return mats


def _enumerate_task(args):
    matrix_id, mat, node_budget, brute, prefix = args
    nh = normalize(mat)
    if brute:
        out = brute_force_enumerate(nh, matrix_id=matrix_id)
    else:
        out = enumerate_graphs(nh, matrix_id=matrix_id, node_budget=node_budget, prefix=prefix)
    return out


def _run_batch(mats, jobs, node_budget, brute):
    """One SearchOutcome per matrix; deterministic regardless of jobs."""
    if len(mats) == 1 and mats[0][1].n >= 24 and jobs > 1 and not brute:
        # split the lone large matrix by fixing the first branch decisions
        matrix_id, mat = mats[0]
        bits = max(1, (jobs - 1).bit_length())
        tasks = [
            (matrix_id, mat, node_budget, False, tuple((p >> b) & 1 for b in range(bits)))
            for p in range(1 << bits)
        ]
        with multiprocessing.Pool(jobs) as pool:
            parts = pool.map(_enumerate_task, tasks)
        return [merge_outcomes(parts)]
    tasks = [(mid, mat, node_budget, brute, None) for mid, mat in mats]
    if jobs <= 1:
        return [_enumerate_task(t) for t in tasks]
    with multiprocessing.Pool(jobs) as pool:
        return pool.map(_enumerate_task, tasks)


def cmd_validate(args):
    bad = 0
    for p in args.paths:
        path = Path(p)
        try:
            mats = parse_sloane(path.read_text(encoding="utf-8"))
            for k, m in enumerate(mats):
                tag = f"{path.name}#{k}" if len(mats) > 1 else path.name
                print(f"{tag}: ok order {m.n} digest {matrix_digest(m)}")
        except OSError as exc:
            print(f"{p}: unreadable ({exc})")
            bad += 1
        except HaddiagError as exc:
            print(f"{p}: invalid ({exc})")
            bad += 1
    return INPUT_ERROR if bad else OK


def cmd_enumerate(args):
    mats = _collect(args.paths)
    if not mats:
        print("no matrices found", file=sys.stderr)
        return INPUT_ERROR
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    outcomes = _run_batch(mats, args.jobs, args.node_budget, args.brute_force)
    for (matrix_id, mat), outcome in zip(mats, outcomes):
        doc = results_document(outcome, matrix_digest(mat))
        path = out_dir / f"{matrix_id}.json"
        write_results(path, doc)
        print(f"{matrix_id}: {len(outcome.graphs)} graphs -> {path}")
    return OK


def _outcome_from_doc(doc):
    graphs = []
    for g in doc["graphs"]:
        graph = decode_graph6(g["graph6"])
        graphs.append(GraphRecord(canonical_form(graph), graph, SpectrumVector(tuple(g["spectrum"]))))
    c = doc["counters"]
    counters = SearchCounters(c["leaves"], c["pruned"], c["accepted"])
    return SearchOutcome(doc["matrix_id"], doc["order"], tuple(graphs), counters)


def cmd_catalog(args):
    result_dir = Path(args.result_dir)
    # skip this command's own output so a rerun over the default --out works
    files = sorted(
        (f for f in result_dir.glob("*.json") if f.name != "catalog.json"),
        key=lambda q: data.name_key(q.name),
    )
    if not files:
        print(f"no result files in {result_dir}", file=sys.stderr)
        return INPUT_ERROR
    outcomes = [_outcome_from_doc(read_results(f)) for f in files]
    cat = build_catalog(outcomes)
    out_dir = Path(args.out) if args.out else result_dir
    out_dir.mkdir(parents=True, exist_ok=True)
    write_json(out_dir / "catalog.json", catalog_document(cat))
    write_csv(out_dir / "stats.csv", STATS_HEADER, stats_rows(stats_report(cat)))
    write_csv(out_dir / "scatter.csv", SCATTER_HEADER, class_size_scatter(cat))
    print(f"order {cat.n}: {len(cat.union)} graphs, {len(cat.classes)} classes -> {out_dir}")
    return OK


def cmd_verify_tables(args):
    root = Path(args.data_root) if args.data_root else data.data_root()
    failures = 0

    def check(label, got, want):
        nonlocal failures
        good = got == want
        failures += not good
        print(f"{'PASS' if good else 'FAIL'} {label}: got {got}, want {want}")

    orders = args.orders or sorted(
        {int(name.split(".")[1]) for name in data.available(root)} & set(TABLE1)
    )
    for n in orders:
        if n not in TABLE1:
            print(f"FAIL order {n}: no published expectations")
            failures += 1
            continue
        mats = [(name, m) for name, m in data.load_order(n, root).items()]
        want_mats, want_union = TABLE1[n]
        check(f"order {n} matrix count", len(mats), want_mats)
        outcomes = _run_batch(mats, args.jobs, args.node_budget, False)
        cat = build_catalog(outcomes)
        check(f"order {n} union graphs", len(cat.union), want_union)
        for name, _ in mats:
            if name in PER_MATRIX:
                check(
                    f"{name} graphs",
                    len(cat.per_matrix[name]),
                    PER_MATRIX[name],
                )
        if n == 8:
            zoo = match_zoo(cat, zoo8())
            check("order 8 zoo match", (len(zoo.matched), len(zoo.missing), len(zoo.extra)), (10, 0, 0))
        if n == 24:
            check("order 24 class scatter", set(class_size_scatter(cat)), SCATTER24)
    return MISMATCH if failures else OK


def cmd_probe(args):
    mats = _collect(args.paths)
    if not mats:
        print("no matrices found", file=sys.stderr)
        return INPUT_ERROR
    refuted = 0
    for matrix_id, mat in mats:
        report = probe_equivalence_conjecture(
            normalize(mat), args.trials, args.seed, node_budget=args.node_budget
        )
        print(
            f"{matrix_id}: {report.agreements}/{report.trials} equivalent forms "
            f"gave the same graph set"
        )
        if report.disagreements:
            refuted += 1
            print(f"{matrix_id}: DISAGREEMENT at trials {list(report.disagreements)}")
    return MISMATCH if refuted else OK


def main(argv=None):
    parser = argparse.ArgumentParser(prog="haddiag", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check sign-text matrix files")
    p.add_argument("paths", nargs="+")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("enumerate", help="enumerate diagonalized graphs per matrix")
    p.add_argument("paths", nargs="+", help="matrix files or directories")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.add_argument("--brute-force", action="store_true", help="unpruned oracle (order <= 16)")
    p.add_argument("--out", default="results")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("catalog", help="aggregate result files into catalog/stats/scatter")
    p.add_argument("result_dir")
    p.add_argument("--out", default=None, help="output directory (default: result dir)")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("verify-tables", help="check bundled data against published counts")
    p.add_argument("--data-root", default=None, help=f"matrix directory (or ${data.ENV_VAR})")
    p.add_argument("--orders", type=int, nargs="*", default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.set_defaults(func=cmd_verify_tables)

    p = sub.add_parser("probe", help="equivalence-conjecture probe on given matrices")
    p.add_argument("paths", nargs="+")
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.set_defaults(func=cmd_probe)

    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1 or getattr(args, "node_budget", 1) < 1:
        parser.error("--jobs and --node-budget must be >= 1")
    try:
        return args.func(args)
    except Aborted as exc:
        print(f"aborted: {exc}", file=sys.stderr)
        return BUDGET
    except (OSError, HaddiagError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
