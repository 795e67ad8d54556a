"""Access to the bundled Hadamard matrix files.

Matrices ship as sign-text files named had.<order> or had.<order>.<index>
in the package's data directory.  Set the HADDIAG_DATA environment variable
to read a different directory in the same layout.
"""

import os
from pathlib import Path

from .errors import MissingData
from .io_formats import parse_sloane

ENV_VAR = "HADDIAG_DATA"


def data_root():
    """Directory holding the had.* files, honoring the override variable."""
    override = os.environ.get(ENV_VAR)
    if override:
        return Path(override)
    return Path(__file__).resolve().parent / "data"


def name_key(name):
    """Numeric-aware sort key: had.16.2 before had.16.10, text after numbers."""
    parts = [(1, 0, name.split(".")[0])]
    for p in name.split(".")[1:]:
        parts.append((0, int(p), "") if p.isdigit() else (1, 0, p))
    return parts


def available(root=None):
    """Sorted names of all bundled matrices."""
    root = Path(root) if root is not None else data_root()
    if not root.is_dir():
        raise MissingData(f"no data directory at {root}")
    return sorted((p.name for p in root.glob("had.*")), key=name_key)


def load(name, root=None):
    """One bundled matrix by name, e.g. load('had.16.1')."""
    root = Path(root) if root is not None else data_root()
    path = root / name
    if not path.is_file():
        raise MissingData(f"no matrix file {name} under {root}")
    mats = parse_sloane(path.read_text(encoding="utf-8"))
    if len(mats) != 1:
        raise MissingData(f"{name} holds {len(mats)} matrices, expected one")
    return mats[0]


def load_order(n, root=None):
    """All bundled matrices of order n as an ordered name -> matrix dict."""
    found = {}
    for name in available(root):
        if name.split(".")[1] == str(n):
            found[name] = load(name, root)
    if not found:
        raise MissingData(f"no bundled matrices of order {n}")
    return found
