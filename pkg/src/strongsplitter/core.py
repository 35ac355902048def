"""Binary matroids in standard form [I_r | D] over GF(2).

Vectors and matrix rows are stored as Python ints used as bitsets.  A column
vector of an ``r``-row matrix has bit ``i`` set when row ``i`` (row 0 on top)
holds a 1.  A row of an ``r x c`` matrix has bit ``j`` set for column ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence


class MatroidFormatError(ValueError):
    """Raised when a matroid file cannot be parsed."""


class UnknownLabelError(KeyError):
    """Raised when an operation names an element the matroid does not have."""


# --- GF(2) helpers ---------------------------------------------------------


def gf2_rank(vectors: Iterable[int]) -> int:
    basis: dict[int, int] = {}
    for v in vectors:
        while v:
            p = v.bit_length() - 1
            b = basis.get(p)
            if b is None:
                basis[p] = v
                break
            v ^= b
    return len(basis)


class XorBasis:
    """Incremental echelon basis that also tracks coordinates.

    ``insert`` returns the coordinate mask of ``v`` w.r.t. the inserted basis
    vectors when ``v`` is dependent, or None after adding ``v`` as a new basis
    vector.
    """

    __slots__ = ("_rows", "size")

    def __init__(self) -> None:
        self._rows: dict[int, tuple[int, int]] = {}
        self.size = 0

    def reduce(self, v: int) -> tuple[int, int]:
        mask = 0
        while v:
            p = v.bit_length() - 1
            row = self._rows.get(p)
            if row is None:
                break
            v ^= row[0]
            mask ^= row[1]
        return v, mask

    def coordinates(self, v: int) -> int | None:
        rest, mask = self.reduce(v)
        return None if rest else mask

    def insert(self, v: int) -> int | None:
        rest, mask = self.reduce(v)
        if rest == 0:
            return mask
        self._rows[rest.bit_length() - 1] = (rest, mask ^ (1 << self.size))
        self.size += 1
        return None


def bits_to_string(v: int, length: int) -> str:
    """Render a column vector top row first, e.g. ``0b10100`` -> ``"00101"``."""
    return "".join("1" if (v >> i) & 1 else "0" for i in range(length))


def string_to_bits(s: str) -> int:
    v = 0
    for i, ch in enumerate(s):
        if ch == "1":
            v |= 1 << i
        elif ch != "0":
            raise ValueError(f"not a 0/1 string: {s!r}")
    return v


# --- BitMatrix ---------------------------------------------------------------


@dataclass(frozen=True)
class BitMatrix:
    """Dense 0/1 matrix; ``rows[i]`` has bit ``j`` set when entry (i, j) is 1."""

    nrows: int
    ncols: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.nrows < 0 or self.ncols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.rows) != self.nrows:
            raise ValueError("row count does not match nrows")
        limit = 1 << self.ncols
        for row in self.rows:
            if row < 0 or row >= limit:
                raise ValueError("row has bits outside the column range")

    @classmethod
    def from_strings(cls, lines: Sequence[str], ncols: int | None = None) -> BitMatrix:
        if ncols is None:
            ncols = len(lines[0]) if lines else 0
        rows = []
        for line in lines:
            if len(line) != ncols:
                raise ValueError(f"row {line!r} does not have {ncols} entries")
            rows.append(string_to_bits(line))
        return cls(len(lines), ncols, tuple(rows))

    @classmethod
    def from_columns(cls, nrows: int, columns: Sequence[int]) -> BitMatrix:
        rows = [0] * nrows
        for j, col in enumerate(columns):
            for i in range(nrows):
                if (col >> i) & 1:
                    rows[i] |= 1 << j
        return cls(nrows, len(columns), tuple(rows))

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def column(self, j: int) -> int:
        v = 0
        for i, row in enumerate(self.rows):
            if (row >> j) & 1:
                v |= 1 << i
        return v

    def columns(self) -> tuple[int, ...]:
        return tuple(self.column(j) for j in range(self.ncols))

    def transpose(self) -> BitMatrix:
        return BitMatrix.from_columns(self.ncols, self.rows)

    def to_strings(self) -> list[str]:
        return [bits_to_string(row, self.ncols) for row in self.rows]


# --- BinaryMatroid -----------------------------------------------------------


@dataclass(frozen=True)
class BinaryMatroid:
    """The binary matroid represented by [I_r | D].

    ``labels[:rank]`` name the identity columns, ``labels[rank:]`` name the
    columns of ``D`` in order.
    """

    rank: int
    labels: tuple[int, ...]
    D: BitMatrix

    def __post_init__(self) -> None:
        n = len(self.labels)
        if not 0 <= self.rank <= n:
            raise ValueError("need 0 <= rank <= number of elements")
        if len(set(self.labels)) != n:
            raise ValueError("labels must be pairwise distinct")
        if self.D.nrows != self.rank or self.D.ncols != n - self.rank:
            raise ValueError("D must be rank x (n - rank)")

    @classmethod
    def from_rows(
        cls, rows: Sequence[str], labels: Sequence[int] | None = None, rank: int | None = None
    ) -> BinaryMatroid:
        """Build from the printed rows of D (each a 0/1 string)."""
        if rank is None:
            rank = len(rows)
        ncols = len(rows[0]) if rows else 0
        D = BitMatrix.from_strings(rows, ncols)
        if labels is None:
            labels = range(1, rank + ncols + 1)
        return cls(rank, tuple(labels), D)

    @classmethod
    def from_columns(
        cls, nrows: int, labels: Sequence[int], columns: Sequence[int]
    ) -> BinaryMatroid:
        """Standardize an arbitrary representation given column by column.

        Pivot columns are chosen greedily in the given order; they become the
        identity part, keeping their relative order, and the remaining columns
        follow in their original order.
        """
        if len(labels) != len(columns):
            raise ValueError("labels and columns differ in length")
        basis = XorBasis()
        pivots: list[int] = []
        coords: list[int | None] = []
        for idx, col in enumerate(columns):
            c = basis.insert(col)
            coords.append(c)
            if c is None:
                pivots.append(idx)
        others = [i for i in range(len(columns)) if coords[i] is not None]
        new_labels = [labels[i] for i in pivots] + [labels[i] for i in others]
        D = BitMatrix.from_columns(len(pivots), [coords[i] for i in others])
        return cls(len(pivots), tuple(new_labels), D)

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def corank(self) -> int:
        return self.size - self.rank

    @cached_property
    def columns(self) -> tuple[int, ...]:
        """Column vectors of [I_r | D], one per element in label position order."""
        return tuple(1 << i for i in range(self.rank)) + self.D.columns()

    @cached_property
    def position(self) -> dict[int, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    @cached_property
    def vector(self) -> dict[int, int]:
        return dict(zip(self.labels, self.columns))

    @property
    def ground_set(self) -> frozenset[int]:
        return frozenset(self.labels)

    def check_labels(self, X: Iterable[int]) -> frozenset[int]:
        X = frozenset(X)
        unknown = X - self.ground_set
        if unknown:
            raise UnknownLabelError(f"unknown labels: {sorted(unknown)}")
        return X

    def column_string(self, label: int) -> str:
        return bits_to_string(self.vector[label], self.rank)

    def key(self) -> tuple:
        return (self.rank, self.labels, self.D.rows)

    def __repr__(self) -> str:
        return f"BinaryMatroid(rank={self.rank}, n={self.size}, D={self.D.to_strings()})"


def parse_matroid(text: str) -> BinaryMatroid:
    lines = [ln.strip() for ln in text.splitlines()]
    if not lines or not lines[0]:
        raise MatroidFormatError("empty file or missing header")
    header = lines[0].split()
    if len(header) != 2 or not all(tok.isdigit() for tok in header):
        raise MatroidFormatError(f"malformed header: {lines[0]!r}")
    r, n = int(header[0]), int(header[1])
    if r > n:
        raise MatroidFormatError("rank exceeds element count")
    body = lines[1:]
    if len(body) < r:
        raise MatroidFormatError(f"expected {r} matrix rows, found {len(body)}")
    rows = body[:r]
    for row in rows:
        if len(row) != n - r:
            raise MatroidFormatError(f"row {row!r} should have {n - r} entries")
        if set(row) - {"0", "1"}:
            raise MatroidFormatError(f"row {row!r} has non-0/1 characters")
    # rows are empty strings when n == r, so only trailing blanks after them are dropped
    rest = [ln for ln in body[r:] if ln]
    labels: Sequence[int] = range(1, n + 1)
    if rest:
        if len(rest) > 1 or not rest[0].startswith("labels:"):
            raise MatroidFormatError(f"unexpected trailing content: {rest[0]!r}")
        try:
            labels = [int(tok) for tok in rest[0][len("labels:"):].split()]
        except ValueError as exc:
            raise MatroidFormatError("labels must be integers") from exc
        if len(labels) != n:
            raise MatroidFormatError(f"expected {n} labels, found {len(labels)}")
        if len(set(labels)) != n:
            raise MatroidFormatError("duplicate labels")
        if any(lab <= 0 for lab in labels):
            raise MatroidFormatError("labels must be positive")
    D = BitMatrix(r, n - r, tuple(string_to_bits(row) for row in rows))
    return BinaryMatroid(r, tuple(labels), D)


def serialize_matroid(M: BinaryMatroid, with_labels: bool | None = None) -> str:
    """Inverse of :func:`parse_matroid`.

    The labels line is written only when labels differ from 1..n, unless
    ``with_labels`` forces it on or off.
    """
    out = [f"{M.rank} {M.size}"]
    out.extend(M.D.to_strings())
    if with_labels is None:
        with_labels = M.labels != tuple(range(1, M.size + 1))
    if with_labels:
        out.append("labels: " + " ".join(str(lab) for lab in M.labels))
    return "\n".join(out) + "\n"


# --- rank and minors ---------------------------------------------------------


def rank(M: BinaryMatroid, X: Iterable[int]) -> int:
    X = M.check_labels(X)
    vec = M.vector
    return gf2_rank(vec[x] for x in X)


def corank_function(M: BinaryMatroid, X: Iterable[int]) -> int:
    """Rank of X in the dual matroid."""
    X = M.check_labels(X)
    return len(X) - M.rank + rank(M, M.ground_set - X)


def closure(M: BinaryMatroid, X: Iterable[int]) -> frozenset[int]:
    X = M.check_labels(X)
    basis = XorBasis()
    for x in X:
        basis.insert(M.vector[x])
    return frozenset(e for e in M.labels if basis.coordinates(M.vector[e]) is not None)


def dual(M: BinaryMatroid) -> BinaryMatroid:
    labels = M.labels[M.rank:] + M.labels[: M.rank]
    return BinaryMatroid(M.corank, labels, M.D.transpose())


def delete(M: BinaryMatroid, X: Iterable[int]) -> BinaryMatroid:
    X = M.check_labels(X)
    if not X:
        return M
    keep = [i for i, lab in enumerate(M.labels) if lab not in X]
    cols = M.columns
    return BinaryMatroid.from_columns(
        M.rank, [M.labels[i] for i in keep], [cols[i] for i in keep]
    )


def contract(M: BinaryMatroid, X: Iterable[int]) -> BinaryMatroid:
    X = M.check_labels(X)
    if not X:
        return M
    return dual(delete(dual(M), X))


def minor(M: BinaryMatroid, contracted: Iterable[int], deleted: Iterable[int]) -> BinaryMatroid:
    return delete(contract(M, contracted), deleted)


def relabel(M: BinaryMatroid, mapping: dict[int, int]) -> BinaryMatroid:
    return BinaryMatroid(M.rank, tuple(mapping.get(lab, lab) for lab in M.labels), M.D)


def loops(M: BinaryMatroid) -> list[int]:
    return [lab for lab, v in zip(M.labels, M.columns) if v == 0]


def coloops(M: BinaryMatroid) -> list[int]:
    return loops(dual(M))


def parallel_classes(M: BinaryMatroid) -> list[list[int]]:
    """Parallel classes of non-loop elements, in order of first appearance."""
    classes: dict[int, list[int]] = {}
    for lab, v in zip(M.labels, M.columns):
        if v:
            classes.setdefault(v, []).append(lab)
    return list(classes.values())


def is_simple(M: BinaryMatroid) -> bool:
    cols = M.columns
    return 0 not in cols and len(set(cols)) == len(cols)


def is_cosimple(M: BinaryMatroid) -> bool:
    return is_simple(dual(M))


def simplify(M: BinaryMatroid) -> BinaryMatroid:
    drop = set(loops(M))
    for cls in parallel_classes(M):
        drop.update(cls[1:])
    return delete(M, drop)


def cosimplify(M: BinaryMatroid) -> BinaryMatroid:
    return dual(simplify(dual(M)))


def circuits_of_size(M: BinaryMatroid, k: int) -> list[frozenset[int]]:
    """All k-element circuits, in lexicographic order of sorted labels."""
    if k < 1:
        raise ValueError("k must be positive")
    vec = M.vector
    found = []
    for combo in combinations(sorted(M.labels), k):
        total = 0
        for x in combo:
            total ^= vec[x]
        # a zero-sum set of rank k-1 has the whole set as its only dependency
        if total == 0 and gf2_rank(vec[x] for x in combo) == k - 1:
            found.append(frozenset(combo))
    return found


def cocircuits_of_size(M: BinaryMatroid, k: int) -> list[frozenset[int]]:
    return circuits_of_size(dual(M), k)


def is_circuit(M: BinaryMatroid, X: Iterable[int]) -> bool:
    X = M.check_labels(X)
    if not X:
        return False
    total = 0
    for x in X:
        total ^= M.vector[x]
    return total == 0 and gf2_rank(M.vector[x] for x in X) == len(X) - 1


def is_cocircuit(M: BinaryMatroid, X: Iterable[int]) -> bool:
    return is_circuit(dual(M), X)


def same_matroid(M: BinaryMatroid, N: BinaryMatroid) -> bool:
    """True when M and N are the same matroid on the same labels."""
    if M.ground_set != N.ground_set or M.rank != N.rank:
        return False
    basis_labels = M.labels[: M.rank]
    if rank(N, basis_labels) != N.rank:
        return False
    # express N in the basis M uses and compare column by column
    xb = XorBasis()
    for lab in basis_labels:
        xb.insert(N.vector[lab])
    return all(xb.coordinates(N.vector[lab]) == M.vector[lab] for lab in M.labels)


def extend(M: BinaryMatroid, column: int, label: int | None = None) -> BinaryMatroid:
    """Append a column (length rank, bit i = row i) as a new element."""
    if label is None:
        label = max(M.labels, default=0) + 1
    rows = tuple(row | (((column >> i) & 1) << M.corank) for i, row in enumerate(M.D.rows))
    D = BitMatrix(M.rank, M.corank + 1, rows)
    return BinaryMatroid(M.rank, M.labels + (label,), D)


def coextend(M: BinaryMatroid, row: int, label: int | None = None) -> BinaryMatroid:
    """Append a row under D (bit j = D column j) and a new identity element."""
    if label is None:
        label = max(M.labels, default=0) + 1
    D = BitMatrix(M.rank + 1, M.corank, M.D.rows + (row,))
    labels = M.labels[: M.rank] + (label,) + M.labels[M.rank:]
    return BinaryMatroid(M.rank + 1, labels, D)
