"""Minor testing with witnesses."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterator

from .connectivity import is_3connected, is_internally_4connected
from .core import BinaryMatroid, BitMatrix, XorBasis, contract, delete, dual
from .iso import IsoCertificate, canonical_form, find_embedding, verify_certificate

THREE_CONNECTED = "3-connected"
INTERNALLY_4_CONNECTED = "internally-4-connected"


@dataclass(frozen=True)
class ClassSpec:
    """A minor-closed class filter: required minors, excluded minors, connectivity."""

    requiredMinors: tuple[BinaryMatroid, ...] = ()
    excludedMinors: tuple[BinaryMatroid, ...] = ()
    connectivity: str = THREE_CONNECTED

    def __post_init__(self) -> None:
        if self.connectivity not in (THREE_CONNECTED, INTERNALLY_4_CONNECTED):
            raise ValueError(f"unknown connectivity level {self.connectivity!r}")

    def dualized(self) -> ClassSpec:
        return ClassSpec(
            tuple(dual(N) for N in self.requiredMinors),
            tuple(dual(N) for N in self.excludedMinors),
            self.connectivity,
        )

    def connectivity_ok(self, M: BinaryMatroid) -> bool:
        if self.connectivity == THREE_CONNECTED:
            return is_3connected(M)
        return is_internally_4connected(M)

    def minors_ok(self, M: BinaryMatroid) -> bool:
        if any(has_minor(M, N) is None for N in self.requiredMinors):
            return False
        return all(has_minor(M, N) is None for N in self.excludedMinors)

    def admits(self, M: BinaryMatroid) -> bool:
        return self.connectivity_ok(M) and self.minors_ok(M)


@dataclass(frozen=True)
class MinorWitness:
    contracted: frozenset[int]
    deleted: frozenset[int]
    iso: IsoCertificate

    def apply(self, M: BinaryMatroid) -> BinaryMatroid:
        return delete(contract(M, self.contracted), self.deleted)


def _independent_flats(M: BinaryMatroid, k: int) -> Iterator[tuple[int, ...]]:
    """Lexicographically first independent k-set spanning each rank-k flat."""
    order = sorted(M.labels)
    vec = M.vector
    seen: set[frozenset[int]] = set()
    for combo in combinations(order, k):
        xb = XorBasis()
        if any(xb.insert(vec[x]) is not None for x in combo):
            continue
        flat = frozenset(e for e in order if xb.coordinates(vec[e]) is not None)
        if flat in seen:
            continue
        seen.add(flat)
        yield combo


def _search(M: BinaryMatroid, N: BinaryMatroid) -> MinorWitness | None:
    k = M.rank - N.rank
    for C in _independent_flats(M, k):
        MC = contract(M, C)
        mapping = find_embedding(N, MC)
        if mapping is None:
            continue
        image = set(mapping.values())
        deleted = frozenset(e for e in MC.labels if e not in image)
        inverse = {v: u for u, v in mapping.items()}
        return MinorWitness(frozenset(C), deleted, IsoCertificate(tuple(sorted(inverse.items()))))
    return None


@lru_cache(maxsize=100_000)
def _has_minor_cached(m_key: tuple, n_key: tuple) -> MinorWitness | None:
    M = _from_key(m_key)
    N = _from_key(n_key)
    contractions = M.rank - N.rank
    deletions = M.corank - N.corank
    # contract on whichever side needs fewer contractions
    if comb(M.size, deletions) < comb(M.size, contractions):
        w = _search(dual(M), dual(N))
        if w is None:
            return None
        return MinorWitness(w.deleted, w.contracted, w.iso)
    return _search(M, N)


def _from_key(key: tuple) -> BinaryMatroid:
    rank, labels, rows = key
    return BinaryMatroid(rank, labels, BitMatrix(rank, len(labels) - rank, rows))


def has_minor(M: BinaryMatroid, N: BinaryMatroid) -> MinorWitness | None:
    """A witness (C, D, iso) with M / C \\ D isomorphic to N, or None.

    The certificate maps the labels of M / C \\ D onto the labels of N.
    """
    if N.rank > M.rank or N.corank > M.corank:
        return None
    return _has_minor_cached(M.key(), N.key())


def check_witness(M: BinaryMatroid, N: BinaryMatroid, w: MinorWitness) -> bool:
    if w.contracted & w.deleted:
        return False
    return verify_certificate(w.apply(M), N, w.iso.as_dict())


def brute_force_has_minor(M: BinaryMatroid, N: BinaryMatroid) -> bool:
    """Oracle: every disjoint (C, D) of the right total size, no normalisation."""
    target = canonical_form(N)
    labels = sorted(M.labels)
    drop = M.size - N.size
    if drop < 0:
        return False
    for removed in combinations(labels, drop):
        for c_size in range(drop + 1):
            for C in combinations(removed, c_size):
                D = set(removed) - set(C)
                P = delete(contract(M, C), D)
                if P.rank == N.rank and canonical_form(P) == target:
                    return True
    return False


def _deletion_children(M: BinaryMatroid) -> Iterator[BinaryMatroid]:
    for e in sorted(M.labels):
        yield delete(M, [e])


def restrictions_with(
    M: BinaryMatroid, spec: ClassSpec, *, prune_disconnected: bool | None = None
) -> list[BinaryMatroid]:
    """One representative per isomorphism class of deletion-minors passing spec.

    Walks down from M one deletion at a time, deduplicating by canonical form.
    Branches that lose a required minor are cut (deletion cannot bring it back).
    When a required minor is 3-connected and not a wheel, the walk also stays
    inside 3-connected restrictions: by the splitter theorem every 3-connected
    restriction with that minor is reached through 3-connected ones.
    """
    from .chains import is_wheel

    if prune_disconnected is None:
        prune_disconnected = spec.connectivity in (THREE_CONNECTED, INTERNALLY_4_CONNECTED) and any(
            is_3connected(N) and is_wheel(N) is None for N in spec.requiredMinors
        )
    if prune_disconnected and not is_3connected(M):
        return []
    seen = {canonical_form(M)}
    layer = [M]
    found: list[BinaryMatroid] = []
    while layer:
        next_layer = []
        for P in layer:
            if spec.admits(P):
                found.append(P)
            for Q in _deletion_children(P):
                cf = canonical_form(Q)
                if cf in seen:
                    continue
                seen.add(cf)
                if prune_disconnected and not is_3connected(Q):
                    continue
                if any(has_minor(Q, N) is None for N in spec.requiredMinors):
                    continue
                next_layer.append(Q)
        layer = next_layer
    found.sort(key=lambda P: (-P.size, -P.rank, canonical_form(P)))
    return found
