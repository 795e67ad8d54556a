"""Text and file formats: sign-matrix text, graph6, and result documents.

Every emitter writes UTF-8 with LF newlines and produces byte-identical
output for identical inputs, so files can be compared across runs and
worker counts.
"""

import csv
import hashlib
import json

from .errors import (
    BadChar,
    HaddiagError,
    NotHadamard,
    RaggedRows,
    SchemaViolation,
    TooLarge,
)
from .graphs import Graph, canonical_graph
from .hadamard import HadamardMatrix, NormalizedHadamard, normalize, validate

SIGN_CHARS = frozenset("+-")

RESULT_KEYS = ("order", "matrix_id", "matrix_digest", "graphs", "counters")
GRAPH_KEYS = ("graph6", "spectrum", "degree")
COUNTER_KEYS = ("leaves", "pruned", "accepted")

STATS_HEADER = ("statistic", "value", "count")
SCATTER_HEADER = ("graphs_per_class", "matrices_per_class")


# ---------------------------------------------------------------- sign text

def parse_sloane(text):
    """Parse '+'/'-' sign rows into a list of Hadamard matrices.

    A maximal run of sign rows forms one matrix; a block also closes as soon
    as it is square, so same-order matrices may follow with no separator.
    Lines without any sign character are comments and close the current
    block.  Lines mixing signs with other characters raise BadChar; unequal
    row widths raise RaggedRows; blocks failing the Hadamard checks raise
    NotHadamard.
    """
    matrices = []
    block = []

    def flush():
        if not block:
            return
        raw = [[1 if c == "+" else -1 for c in row] for row in block]
        del block[:]
        try:
            matrices.append(validate(raw))
        except HaddiagError as exc:
            raise NotHadamard(str(exc)) from exc

    for lineno, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        chars = set(s)
        if not chars & SIGN_CHARS:
            flush()
            continue
        stray = chars - SIGN_CHARS
        if stray:
            raise BadChar(f"line {lineno}: sign row contains {sorted(stray)}")
        if block and len(s) != len(block[0]):
            raise RaggedRows(
                f"line {lineno}: row width {len(s)} != {len(block[0])}"
            )
        block.append(s)
        if len(block) == len(s):
            flush()
    flush()
    return matrices


def emit_sloane(mats):
    """Sign text for one matrix or a sequence, blank-line separated."""
    if isinstance(mats, HadamardMatrix):
        mats = [mats]
    blocks = []
    for h in mats:
        rows = [
            "".join("-" if (bits >> j) & 1 else "+" for j in range(h.n))
            for bits in h.neg_bits
        ]
        blocks.append("\n".join(rows) + "\n")
    return "\n".join(blocks)


def matrix_digest(h):
    """Stable id for a matrix: SHA-256 prefix of its normalized sign text."""
    if isinstance(h, NormalizedHadamard):
        h = h.matrix
    signs = emit_sloane(normalize(h).matrix)
    return hashlib.sha256(signs.encode("ascii")).hexdigest()[:16]


# ------------------------------------------------------------------- graph6

def encode_graph6(g):
    """Standard graph6 string for a graph on at most 62 vertices."""
    if g.n > 62:
        raise TooLarge(f"graph6 single-byte size field caps at 62, got {g.n}")
    bits = []
    for j in range(1, g.n):
        bits.extend((g.rows[i] >> j) & 1 for i in range(j))
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        group = bits[k : k + 6]
        group += [0] * (6 - len(group))
        val = 0
        for b in group:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def decode_graph6(text):
    """Decode a standard graph6 string (single-byte size form)."""
    if not text:
        raise BadChar("empty graph6 string")
    size = ord(text[0]) - 63
    if size == 63:
        raise TooLarge("multi-byte graph6 size field (order > 62) unsupported")
    if not 1 <= size <= 62:
        raise BadChar(f"size byte {text[0]!r} outside orders 1..62")
    need = (size * (size - 1) // 2 + 5) // 6
    body = text[1:]
    if len(body) != need:
        raise BadChar(f"order {size} needs {need} data bytes, got {len(body)}")
    bits = []
    for c in body:
        v = ord(c) - 63
        if not 0 <= v < 64:
            raise BadChar(f"data byte {c!r} out of range")
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    m = size * (size - 1) // 2
    if any(bits[m:]):
        raise BadChar("nonzero padding bits")
    rows = [0] * size
    k = 0
    for j in range(1, size):
        for i in range(j):
            if bits[k]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(size, tuple(rows))


# ------------------------------------------------------------- result files

def results_document(outcome, digest):
    """JSON-ready dict for one enumeration outcome."""
    graphs = []
    for rec in sorted(outcome.graphs, key=lambda r: r.form):
        g = rec.graph
        degrees = {g.degree(v) for v in range(g.n)}
        if len(degrees) != 1:
            raise SchemaViolation("result graphs must be regular")
        graphs.append(
            {
                # canonical relabeling: the document must not depend on which
                # representative the search happened to reach first
                "graph6": encode_graph6(canonical_graph(g)),
                "spectrum": sorted(int(v) for v in rec.spectrum.values),
                "degree": degrees.pop(),
            }
        )
    c = outcome.counters
    return {
        "order": outcome.n,
        "matrix_id": outcome.matrix_id,
        "matrix_digest": digest,
        "graphs": graphs,
        "counters": {"leaves": c.leaves, "pruned": c.pruned, "accepted": c.accepted},
    }


def check_results(doc):
    """Raise SchemaViolation unless doc matches the result-file schema."""
    if not isinstance(doc, dict) or tuple(doc) != RESULT_KEYS:
        raise SchemaViolation(f"top-level keys must be {RESULT_KEYS} in order")
    n = doc["order"]
    if not isinstance(n, int) or n < 1:
        raise SchemaViolation("order must be a positive integer")
    for key in ("matrix_id", "matrix_digest"):
        if not isinstance(doc[key], str):
            raise SchemaViolation(f"{key} must be a string")
    if not isinstance(doc["graphs"], list):
        raise SchemaViolation("graphs must be a list")
    for rec in doc["graphs"]:
        if not isinstance(rec, dict) or tuple(rec) != GRAPH_KEYS:
            raise SchemaViolation(f"graph record keys must be {GRAPH_KEYS}")
        g = decode_graph6(rec["graph6"])
        if g.n != n:
            raise SchemaViolation(f"graph6 order {g.n} != {n}")
        spec = rec["spectrum"]
        if (
            not isinstance(spec, list)
            or len(spec) != n
            or any(not isinstance(v, int) for v in spec)
            or spec != sorted(spec)
        ):
            raise SchemaViolation("spectrum must be n integers sorted ascending")
        if not isinstance(rec["degree"], int) or not 0 <= rec["degree"] < n:
            raise SchemaViolation("degree must be an integer in [0, n)")
    counters = doc["counters"]
    if not isinstance(counters, dict) or tuple(counters) != COUNTER_KEYS:
        raise SchemaViolation(f"counter keys must be {COUNTER_KEYS}")
    for v in counters.values():
        if not isinstance(v, int) or v < 0:
            raise SchemaViolation("counters must be non-negative integers")


def write_json(path, doc):
    """Deterministic JSON emission shared by result and catalog files."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


def write_results(path, doc):
    check_results(doc)
    write_json(path, doc)


def read_results(path):
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except ValueError as exc:
            raise SchemaViolation(f"{path}: {exc}") from exc
    check_results(doc)
    return doc


# -------------------------------------------------------------------- CSV

def write_csv(path, header, rows):
    """Write tuples under a fixed header; every row must match its width."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        out = csv.writer(fh, lineterminator="\n")
        out.writerow(header)
        for row in rows:
            if len(row) != len(header):
                raise SchemaViolation(f"row {row!r} does not fit header {header}")
            out.writerow(row)
