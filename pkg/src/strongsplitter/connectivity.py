"""Connectivity function and exhaustive k-separation search."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import BinaryMatroid, is_cosimple, is_simple, rank


@dataclass(frozen=True)
class SeparationReport:
    sideA: frozenset[int]
    sideB: frozenset[int]
    lambdaValue: int
    k: int

    @property
    def exact(self) -> bool:
        return self.lambdaValue == self.k - 1

    @property
    def minimal(self) -> bool:
        return self.exact and self.k in (len(self.sideA), len(self.sideB))


def connectivity(M: BinaryMatroid, X: Iterable[int]) -> int:
    """lambda(X) = r(X) + r(E - X) - r(M)."""
    X = M.check_labels(X)
    return rank(M, X) + rank(M, M.ground_set - X) - M.rank


def _insert(basis: dict[int, int], v: int) -> int:
    """Add v to an echelon basis keyed by leading bit; return the key or -1."""
    while v:
        p = v.bit_length() - 1
        b = basis.get(p)
        if b is None:
            basis[p] = v
            return p
        v ^= b
    return -1


def _search(M: BinaryMatroid, k: int, min_side: int) -> SeparationReport | None:
    """First partition (A, B), |A|, |B| >= min_side, lambda(A) <= k - 1.

    Enumeration order: elements sorted by label, the first one fixed in A,
    each later element tried in A before B.  Branches are cut when the ranks
    of the partial sides already force lambda above k - 1, which never removes
    a solution, so the answer is the first one of the unpruned enumeration.
    """
    order = sorted(M.labels)
    n = len(order)
    if n < 2 * min_side or n == 0:
        return None
    vec = M.vector
    vecs = [vec[e] for e in order]
    limit = M.rank + k - 1
    basis_a: dict[int, int] = {}
    basis_b: dict[int, int] = {}
    in_a = [False] * n

    def dfs(i: int, size_a: int) -> bool:
        size_b = i - size_a
        if len(basis_a) + len(basis_b) > limit:
            return False
        remaining = n - i
        if size_a + remaining < min_side or size_b + remaining < min_side:
            return False
        if i == n:
            return True
        for to_a in (True, False):
            basis = basis_a if to_a else basis_b
            key = _insert(basis, vecs[i])
            in_a[i] = to_a
            if dfs(i + 1, size_a + to_a):
                return True
            if key >= 0:
                del basis[key]
        return False

    _insert(basis_a, vecs[0])
    in_a[0] = True
    if not dfs(1, 1):
        return None
    A = frozenset(e for e, flag in zip(order, in_a) if flag)
    B = M.ground_set - A
    return SeparationReport(A, B, connectivity(M, A), k)


def find_k_separation(M: BinaryMatroid, k: int) -> SeparationReport | None:
    if k < 1:
        raise ValueError("k must be at least 1")
    return _search(M, k, k)


def is_connected(M: BinaryMatroid) -> bool:
    return find_k_separation(M, 1) is None


def is_3connected(M: BinaryMatroid) -> bool:
    if M.size < 4 or not is_simple(M) or not is_cosimple(M):
        return False
    return find_k_separation(M, 1) is None and find_k_separation(M, 2) is None


def find_nonminimal_3separation(M: BinaryMatroid) -> SeparationReport | None:
    """An exact 3-separation with both sides of size at least 4."""
    return _search(M, 3, 4)


def is_internally_4connected(M: BinaryMatroid) -> bool:
    return is_3connected(M) and find_nonminimal_3separation(M) is None
