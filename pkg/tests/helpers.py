from __future__ import annotations

import random
from itertools import combinations

from hypothesis import strategies as st

from strongsplitter.connectivity import is_3connected
from strongsplitter.core import BinaryMatroid, BitMatrix, contract, delete


@st.composite
def matroids(draw, max_rank: int = 4, max_corank: int = 4, min_size: int = 0) -> BinaryMatroid:
    r = draw(st.integers(0, max_rank))
    c = draw(st.integers(max(0, min_size - r), max_corank))
    rows = tuple(draw(st.integers(0, (1 << c) - 1)) for _ in range(r))
    return BinaryMatroid(r, tuple(range(1, r + c + 1)), BitMatrix(r, c, rows))


@st.composite
def matroid_and_subset(draw, **kw):
    M = draw(matroids(**kw))
    X = draw(st.sets(st.sampled_from(M.labels))) if M.size else set()
    return M, frozenset(X)


def span_rank(M: BinaryMatroid, X) -> int:
    """Rank by listing every vector in the span of X."""
    span = {0}
    for x in X:
        v = M.vector[x]
        span |= {s ^ v for s in span}
    return len(span).bit_length() - 1


def subsets(items):
    items = list(items)
    for k in range(len(items) + 1):
        yield from combinations(items, k)


def random_matroid(rng: random.Random, rank: int, corank: int) -> BinaryMatroid:
    rows = tuple(rng.getrandbits(corank) for _ in range(rank))
    return BinaryMatroid(rank, tuple(range(1, rank + corank + 1)), BitMatrix(rank, corank, rows))


def random_3connected(rng: random.Random, max_size: int, min_rank: int = 3) -> BinaryMatroid:
    while True:
        r = rng.randint(min_rank, max_size - min_rank)
        M = random_matroid(rng, r, rng.randint(min_rank, max_size - r))
        if is_3connected(M):
            return M


def random_rank_gap_pair(rng: random.Random, max_size: int = 12) -> tuple[BinaryMatroid, BinaryMatroid]:
    """A 3-connected M and a 3-connected minor N with r(M) = r(N) + 1."""
    while True:
        M = random_3connected(rng, max_size, min_rank=3)
        e = rng.choice(M.labels)
        P = contract(M, [e])
        removable = [x for x in P.labels]
        rng.shuffle(removable)
        D = removable[: rng.randint(0, max(0, P.corank - 3))]
        N = delete(P, D)
        if N.rank == M.rank - 1 and is_3connected(N):
            return M, N
