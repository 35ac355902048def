"""Isomorphism of binary matroids.

Two binary matroids are isomorphic exactly when their GF(2) representations
are equivalent under column permutation and row operations, so everything here
works on column vectors.  The canonical form is the lexicographically least
"ordered-basis description" of the matroid: pick an ordered basis b_1..b_r,
and for each k list the elements that first enter the span at b_k together
with their coordinates and an invariant colour.  Only prefixes achieving the
least description so far are extended, which keeps the search small.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .core import BinaryMatroid, XorBasis, dual, gf2_rank


@dataclass(frozen=True)
class IsoCertificate:
    """A bijection from the ground set of one matroid onto another's."""

    mapping: tuple[tuple[int, int], ...]

    def as_dict(self) -> dict[int, int]:
        return dict(self.mapping)


# --- invariant colours -------------------------------------------------------


def _triangles(vecs: tuple[int, ...]) -> list[tuple[int, int, int]]:
    by_vec: dict[int, list[int]] = {}
    for i, v in enumerate(vecs):
        if v:
            by_vec.setdefault(v, []).append(i)
    found = []
    n = len(vecs)
    for i in range(n):
        vi = vecs[i]
        if not vi:
            continue
        for j in range(i + 1, n):
            vj = vecs[j]
            if not vj or vj == vi:
                continue
            for k in by_vec.get(vi ^ vj, ()):
                if k > j:
                    found.append((i, j, k))
    return found


def _compress(values: list) -> list[int]:
    order = {v: idx for idx, v in enumerate(sorted(set(values)))}
    return [order[v] for v in values]


def element_colors(M: BinaryMatroid) -> tuple[int, ...]:
    """Isomorphism-invariant colour per element position.

    Starts from loop/parallel/triangle data of M and M*, then refines by the
    colours of triangle and triad partners until the partition is stable.
    """
    vecs = M.columns
    dvec_by_label = dual(M).vector
    dvecs = tuple(dvec_by_label[lab] for lab in M.labels)
    n = len(vecs)
    tris = _triangles(vecs)
    triads = _triangles(dvecs)
    par = {}
    for v in vecs:
        par[v] = par.get(v, 0) + 1
    ser = {}
    for v in dvecs:
        ser[v] = ser.get(v, 0) + 1
    base = [
        (vecs[i] == 0, dvecs[i] == 0, par[vecs[i]], ser[dvecs[i]])
        for i in range(n)
    ]
    colors = _compress(base)
    classes = len(set(colors))
    while True:
        tri_sig: list[list] = [[] for _ in range(n)]
        for group, sig in ((tris, 0), (triads, 1)):
            for a, b, c in group:
                for x, y, z in ((a, b, c), (b, a, c), (c, a, b)):
                    pair = tuple(sorted((colors[y], colors[z])))
                    tri_sig[x].append((sig,) + pair)
        refined = _compress(
            [(colors[i], tuple(sorted(tri_sig[i]))) for i in range(n)]
        )
        new_classes = len(set(refined))
        colors = refined
        if new_classes == classes:
            break
        classes = new_classes
    return tuple(colors)


# --- canonical form ------------------------------------------------------------


def _describe(M: BinaryMatroid) -> tuple[tuple, tuple[int, ...]]:
    """Least ordered-basis description of M and one basis (as vectors) attaining it."""
    vecs = M.columns
    colors = element_colors(M)
    n = len(vecs)
    loops_block = tuple(sorted(colors[i] for i in range(n) if vecs[i] == 0))
    # a state: (basis vectors, span map vector -> coordinate mask, unspanned positions)
    states = [((), {0: 0}, tuple(i for i in range(n) if vecs[i]))]
    blocks: list[tuple] = [loops_block]
    for k in range(M.rank):
        bit = 1 << k
        best = None
        survivors: list[tuple[tuple[int, ...], dict[int, int], tuple[int, ...]]] = []
        seen: set[tuple[int, ...]] = set()
        for basis, span, unspanned in states:
            tried: set[int] = set()
            for i in unspanned:
                v = vecs[i]
                if v in tried:
                    continue
                tried.add(v)
                entries = []
                for j in unspanned:
                    c = span.get(vecs[j] ^ v)
                    if c is not None:
                        entries.append((colors[j], c | bit))
                block = tuple(sorted(entries))
                if best is None or block < best:
                    best = block
                    survivors = []
                    seen = set()
                if block == best:
                    new_basis = basis + (v,)
                    if new_basis in seen:
                        continue
                    seen.add(new_basis)
                    survivors.append((new_basis, span, unspanned))
        next_states = []
        for new_basis, span, unspanned in survivors:
            v = new_basis[-1]
            new_span = dict(span)
            for u, c in span.items():
                new_span[u ^ v] = c | bit
            rest = tuple(j for j in unspanned if vecs[j] not in new_span)
            next_states.append((new_basis, new_span, rest))
        states = next_states
        blocks.append(best)
    return (M.rank, M.size, tuple(blocks)), states[0][0]


@lru_cache(maxsize=200_000)
def _canonical_bytes(rank: int, ncols: int, rows: tuple[int, ...]) -> bytes:
    from .core import BitMatrix

    M = BinaryMatroid(rank, tuple(range(1, rank + ncols + 1)), BitMatrix(rank, ncols, rows))
    tag = "P"
    if M.rank > M.corank:
        M, tag = dual(M), "D"
    desc, _ = _describe(M)
    return json.dumps([tag, desc], separators=(",", ":")).encode()


def canonical_form(M: BinaryMatroid) -> bytes:
    return _canonical_bytes(M.rank, M.corank, M.D.rows)


def _coordinates_in(M: BinaryMatroid, basis_vecs: tuple[int, ...]) -> dict[int, int]:
    xb = XorBasis()
    for v in basis_vecs:
        xb.insert(v)
    out = {}
    for lab, v in zip(M.labels, M.columns):
        c = xb.coordinates(v)
        assert c is not None
        out[lab] = c
    return out


def _grouped(M: BinaryMatroid) -> dict[tuple[int, int], list[int]]:
    # same side choice as canonical_form; duality keeps the labels
    work = dual(M) if M.rank > M.corank else M
    _, basis = _describe(work)
    coords = _coordinates_in(work, basis)
    colors = dict(zip(work.labels, element_colors(work)))
    groups: dict[tuple[int, int], list[int]] = {}
    for lab in sorted(work.labels):
        groups.setdefault((colors[lab], coords[lab]), []).append(lab)
    return groups


def verify_certificate(M: BinaryMatroid, N: BinaryMatroid, mapping: dict[int, int]) -> bool:
    """Check that the bijection carries M's representation onto N's."""
    if M.rank != N.rank or M.size != N.size:
        return False
    if sorted(mapping) != sorted(M.labels) or sorted(mapping.values()) != sorted(N.labels):
        return False
    # pick a basis of M, check its image is a basis of N, compare coordinates
    xb_m = XorBasis()
    basis = []
    for lab in M.labels:
        if xb_m.insert(M.vector[lab]) is None:
            basis.append(lab)
    xb_n = XorBasis()
    for lab in basis:
        if xb_n.insert(N.vector[mapping[lab]]) is not None:
            return False
    for lab in M.labels:
        if xb_m.coordinates(M.vector[lab]) != xb_n.coordinates(N.vector[mapping[lab]]):
            return False
    return True


def is_isomorphic(M: BinaryMatroid, N: BinaryMatroid) -> IsoCertificate | None:
    if M.rank != N.rank or M.size != N.size:
        return None
    if canonical_form(M) != canonical_form(N):
        return None
    gm, gn = _grouped(M), _grouped(N)
    mapping: dict[int, int] = {}
    for key, labs in gm.items():
        for a, b in zip(labs, gn[key]):
            mapping[a] = b
    if not verify_certificate(M, N, mapping):
        raise AssertionError("canonical forms agree but the induced bijection fails")
    return IsoCertificate(tuple(sorted(mapping.items())))


# --- restriction embeddings ------------------------------------------------------


def _triangle_degree(vec_counts: dict[int, int]) -> dict[int, int]:
    """Number of lines through each distinct non-zero vector."""
    distinct = [v for v in vec_counts if v]
    present = set(distinct)
    deg = {}
    for v in distinct:
        cnt = 0
        for u in distinct:
            if u != v and (u ^ v) in present:
                cnt += 1
        deg[v] = cnt // 2
    return deg


def embeddings(small: BinaryMatroid, big: BinaryMatroid) -> Iterator[dict[int, int]]:
    """Injections E(small) -> E(big) realising small as a restriction of big.

    Both matroids must have the same rank.  The search fixes images for an
    ordered basis of ``small``; the images determine a linear map, and every
    element of ``small`` spanned so far must land on an element of ``big``.
    """
    if small.rank != big.rank:
        raise ValueError("embedding requires equal ranks")
    r = small.rank
    big_by_vec: dict[int, list[int]] = {}
    for lab, v in zip(big.labels, big.columns):
        big_by_vec.setdefault(v, []).append(lab)
    small_by_vec: dict[int, list[int]] = {}
    for lab, v in zip(small.labels, small.columns):
        small_by_vec.setdefault(v, []).append(lab)
    if len(small_by_vec.get(0, ())) > len(big_by_vec.get(0, ())):
        return
    if small.size > big.size:
        return
    big_counts = {v: len(labs) for v, labs in big_by_vec.items()}
    small_counts = {v: len(labs) for v, labs in small_by_vec.items()}

    # order small's basis so each new vector closes as many elements as possible
    distinct = [v for v in small_by_vec if v]
    basis_vecs: list[int] = []
    xb = XorBasis()
    spanned: set[int] = {0}
    for _ in range(r):
        best_v, best_gain = None, -1
        for v in distinct:
            if v in spanned:
                continue
            trial = set(spanned) | {u ^ v for u in spanned}
            gain = sum(1 for u in distinct if u in trial and u not in spanned)
            if gain > best_gain:
                best_v, best_gain = v, gain
        assert best_v is not None
        basis_vecs.append(best_v)
        xb.insert(best_v)
        spanned |= {u ^ best_v for u in spanned}
    coord = {v: xb.coordinates(v) for v in distinct}
    levels: list[list[tuple[int, int]]] = [[] for _ in range(r)]
    for v in distinct:
        c = coord[v]
        levels[c.bit_length() - 1].append((c, small_counts[v]))
    basis_need = [small_counts[v] for v in basis_vecs]

    small_deg = _triangle_degree(small_counts)
    big_deg = _triangle_degree(big_counts)
    basis_deg = [small_deg[v] for v in basis_vecs]
    candidates = [v for v in big_by_vec if v]

    images: list[int] = [0] * (1 << r)  # coordinate mask -> image vector

    def search(k: int) -> Iterator[None]:
        if k == r:
            yield None
            return
        bit = 1 << k
        lower = bit  # masks below bit are already imaged
        used = set(images[:lower])
        for v in candidates:
            if v in used:
                continue
            if big_counts[v] < basis_need[k] or big_deg[v] < basis_deg[k]:
                continue
            ok = True
            for c, need in levels[k]:
                w = images[c ^ bit] ^ v
                if big_counts.get(w, 0) < need:
                    ok = False
                    break
            if not ok:
                continue
            for c in range(lower):
                images[c | bit] = images[c] ^ v
            yield from search(k + 1)

    for _ in search(0):
        mapping: dict[int, int] = {}
        for v, labs in small_by_vec.items():
            c = coord[v] if v else 0
            targets = big_by_vec[images[c]]
            for lab, tgt in zip(labs, targets):
                mapping[lab] = tgt
        yield mapping


def find_embedding(small: BinaryMatroid, big: BinaryMatroid) -> dict[int, int] | None:
    return next(embeddings(small, big), None)


def _circuit_masks(M: BinaryMatroid) -> set[int]:
    n = M.size
    vecs = M.columns
    rank_of = [0] * (1 << n)
    for mask in range(1, 1 << n):
        rank_of[mask] = gf2_rank(vecs[i] for i in range(n) if (mask >> i) & 1)
    circuits = set()
    for mask in range(1, 1 << n):
        size = bin(mask).count("1")
        if rank_of[mask] == size - 1 and all(
            rank_of[mask & ~(1 << i)] == size - 1 for i in range(n) if (mask >> i) & 1
        ):
            circuits.add(mask)
    return circuits


def brute_force_isomorphic(M: BinaryMatroid, N: BinaryMatroid) -> bool:
    """Oracle: try every bijection of positions and compare circuit sets."""
    from itertools import permutations

    if M.rank != N.rank or M.size != N.size:
        return False
    n = M.size
    cm = _circuit_masks(M)
    cn = _circuit_masks(N)
    if len(cm) != len(cn):
        return False
    cm_list = sorted(cm)
    for perm in permutations(range(n)):
        for mask in cm_list:
            image = 0
            for i in range(n):
                if (mask >> i) & 1:
                    image |= 1 << perm[i]
            if image not in cn:
                break
        else:
            return True
    return False
