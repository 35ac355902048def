"""Named binary matroids and family generators.

E4, E5, H, M12 and R17 ship as transcribed ``.bm`` files.  A, B and C are
E5 plus one column, using the least column of the corresponding extension
class.  D, E, F, G are derived by enumeration and named in canonical-form
order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .core import BinaryMatroid, BitMatrix, dual, extend, parse_matroid, string_to_bits

PRINTED = "printed-matrix"
RECONSTRUCTED = "reconstructed"
GENERATED = "generated"
DERIVED = "derived"

PRINTED_NAMES = ("E4", "E5", "H", "M12", "R17")
EXTENSION_COLUMNS = {"A": "00101", "B": "10011", "C": "11001"}
# columns of E5 whose extension has no E4-minor
ALLOWED_COLUMNS = ("00101", "00110", "01011", "01100", "10011", "11001", "11101")


class UnknownMatroidError(KeyError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    matroid: BinaryMatroid
    provenance: str


def data_text(name: str) -> str:
    return resources.files(__package__).joinpath("data", "matroids", f"{name}.bm").read_text()


def wheel(k: int) -> BinaryMatroid:
    """M(W_k): spokes 1..k form the basis, rim edge j joins spokes j and j+1."""
    if k < 3:
        raise ValueError("wheels need at least three spokes")
    cols = [(1 << j) | (1 << ((j + 1) % k)) for j in range(k)]
    return BinaryMatroid(k, tuple(range(1, 2 * k + 1)), BitMatrix.from_columns(k, cols))


def fano() -> BinaryMatroid:
    # D holds the columns 110, 101, 011, 111
    return BinaryMatroid.from_rows(["1101", "1011", "0111"])


def r10() -> BinaryMatroid:
    first = "11001"
    rows = [first[-i:] + first[:-i] if i else first for i in range(5)]
    return BinaryMatroid.from_rows(rows)


def graphic(num_vertices: int, edges: list[tuple[int, int]]) -> BinaryMatroid:
    """Cycle matroid from a vertex-edge incidence matrix."""
    cols = [(1 << u) | (1 << v) for u, v in edges]
    return BinaryMatroid.from_columns(num_vertices, list(range(1, len(edges) + 1)), cols)


def k5_minus_edge() -> BinaryMatroid:
    edges = [(u, v) for u in range(5) for v in range(u + 1, 5) if (u, v) != (3, 4)]
    return graphic(5, edges)


@lru_cache(maxsize=None)
def _build(name: str) -> CatalogEntry:
    if name in PRINTED_NAMES:
        return CatalogEntry(name, parse_matroid(data_text(name)), PRINTED)
    if name in EXTENSION_COLUMNS:
        E5 = _build("E5").matroid
        return CatalogEntry(name, extend(E5, string_to_bits(EXTENSION_COLUMNS[name])), RECONSTRUCTED)
    if name == "F7":
        return CatalogEntry(name, fano(), GENERATED)
    if name == "R10":
        return CatalogEntry(name, r10(), GENERATED)
    if name == "K5\\e*":
        return CatalogEntry(name, dual(k5_minus_edge()), GENERATED)
    if name.startswith("W") and name[1:].isdigit() and int(name[1:]) >= 3:
        return CatalogEntry(name, wheel(int(name[1:])), GENERATED)
    if name in ("D", "E", "F", "G"):
        for entry in derive_defg():
            if entry.name == name:
                return entry
    if name.endswith("*") and len(name) > 1:
        base = _build(name[:-1])
        return CatalogEntry(name, dual(base.matroid), DERIVED)
    raise UnknownMatroidError(name)


def get(name: str) -> CatalogEntry:
    return _build(name)


def names() -> list[str]:
    return [
        "E4", "E5", "H", "M12", "R17", "A", "B", "C", "D", "E", "F", "G",
        "F7", "F7*", "R10", "W3", "W4", "K5\\e*",
    ]


@lru_cache(maxsize=None)
def derive_defg() -> tuple[CatalogEntry, ...]:
    """Extensions of A, B, C by the allowed columns with no E4-minor, up to isomorphism."""
    from .connectivity import is_3connected
    from .iso import canonical_form
    from .minors import has_minor

    E4 = _build("E4").matroid
    classes: dict[bytes, BinaryMatroid] = {}
    for parent_name in ("A", "B", "C"):
        parent = _build(parent_name).matroid
        present = set(parent.columns)
        for col in ALLOWED_COLUMNS:
            v = string_to_bits(col)
            if v in present:
                continue
            M = extend(parent, v)
            if not is_3connected(M) or has_minor(M, E4) is not None:
                continue
            classes.setdefault(canonical_form(M), M)
    if len(classes) != 4:
        raise RuntimeError(f"expected 4 classes of extensions, found {len(classes)}")
    ordered = [classes[key] for key in sorted(classes)]
    return tuple(
        CatalogEntry(name, M, DERIVED) for name, M in zip(("D", "E", "F", "G"), ordered)
    )
