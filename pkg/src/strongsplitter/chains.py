"""Strong splitter chains: build and check chains of 3-connected minors.

A chain runs from a copy of N up to M.  While the rank is below r(M) every
step raises the rank by one and adds at most three elements (three only when
the new elements form a triad); once the rank of M is reached, every step
adds one element.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .connectivity import is_3connected
from .core import BinaryMatroid, contract, delete, is_cocircuit, same_matroid
from .iso import canonical_form, is_isomorphic
from .minors import has_minor

EXTENSION = "extension"
COEXTENSION = "coextension"
JUMP = "jump"
TRIAD_BATCH = "triadBatch"


class ChainError(ValueError):
    pass


class NotAMinorError(ChainError):
    pass


class RankGapError(ChainError):
    pass


class WheelPreconditionError(ChainError):
    """N is a wheel and a larger wheel minor cannot be ruled out."""


@dataclass(frozen=True)
class ChainStep:
    result: BinaryMatroid
    kind: str
    new_elements: tuple[int, ...]
    certificate: frozenset[int] | None = None


@dataclass(frozen=True)
class ChainReport:
    start: BinaryMatroid
    steps: tuple[ChainStep, ...]
    m: int
    valid: bool = True

    def matroids(self) -> list[BinaryMatroid]:
        return [self.start] + [s.result for s in self.steps]


@dataclass(frozen=True)
class DeletionElement:
    element: int


@dataclass(frozen=True)
class SmallGap:
    gap: int
    triad: frozenset[int] | None = None


@dataclass
class Validation:
    ok: bool
    problems: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def is_wheel(M: BinaryMatroid) -> int | None:
    from .catalog import wheel

    k = M.rank
    if k < 3 or M.size != 2 * k:
        return None
    return k if canonical_form(M) == canonical_form(wheel(k)) else None


def check_wheel_precondition(M: BinaryMatroid, N: BinaryMatroid) -> None:
    from .catalog import wheel

    k = is_wheel(N)
    if k is not None and has_minor(M, wheel(k + 1)) is not None:
        raise WheelPreconditionError(f"N is the wheel of rank {k} and M has a larger wheel minor")


# --- the one-step dichotomy ----------------------------------------------------


def lemma_step(M: BinaryMatroid, N: BinaryMatroid) -> DeletionElement | SmallGap:
    """Either an element whose deletion keeps M 3-connected with an N-minor,
    or the element gap is at most 3; a gap of exactly 3 comes with a triad T
    such that M \\ T is isomorphic to N."""
    if M.rank != N.rank + 1:
        raise RankGapError(f"rank gap is {M.rank - N.rank}, expected 1")
    if has_minor(M, N) is None:
        raise NotAMinorError("N is not a minor of M")
    for e in sorted(M.labels):
        P = delete(M, [e])
        if is_3connected(P) and has_minor(P, N) is not None:
            return DeletionElement(e)
    gap = M.size - N.size
    if gap > 3:
        raise RuntimeError(f"no 3-connected deletion and gap {gap} > 3")
    if gap < 3:
        return SmallGap(gap)
    from .core import cocircuits_of_size

    for T in cocircuits_of_size(M, 3):
        if is_isomorphic(delete(M, T), N) is not None:
            return SmallGap(gap, T)
    raise RuntimeError("gap 3 without a triad whose deletion gives N")


# --- the minor poset ---------------------------------------------------------------


@dataclass
class _Poset:
    reps: dict[bytes, BinaryMatroid]
    # child -> list of (parent, kind)
    up: dict[bytes, list[tuple[bytes, str]]]


@lru_cache(maxsize=256)
def _poset(m_key: tuple, min_rank: int, min_corank: int) -> _Poset:
    """3-connected minors of M down to the given rank and corank, with
    single-element extension/coextension edges, keyed by canonical form."""
    from .minors import _from_key

    M = _from_key(m_key)
    top = canonical_form(M)
    reps = {top: M}
    up: dict[bytes, list[tuple[bytes, str]]] = {top: []}
    rejected: set[bytes] = set()
    layer = [M]
    while layer:
        next_layer = []
        for P in layer:
            pkey = canonical_form(P)
            for e in sorted(P.labels):
                for kind, Q in ((EXTENSION, delete(P, [e])), (COEXTENSION, contract(P, [e]))):
                    if Q.rank < min_rank or Q.corank < min_corank:
                        continue
                    qkey = canonical_form(Q)
                    if qkey in rejected:
                        continue
                    if qkey not in reps:
                        if not is_3connected(Q):
                            rejected.add(qkey)
                            continue
                        reps[qkey] = Q
                        up[qkey] = []
                        next_layer.append(Q)
                    if (pkey, kind) not in up[qkey]:
                        up[qkey].append((pkey, kind))
        layer = next_layer
    return _Poset(reps, up)


def strong_chain(M: BinaryMatroid, N: BinaryMatroid) -> ChainReport:
    """A chain from a copy of N to M in which rank jumps happen as early as possible.

    Among all chains of 3-connected single-element extensions and
    coextensions, the positions of the coextensions are minimised
    lexicographically; the rank jumps are then merged into single steps.
    """
    if N.size >= M.size:
        raise NotAMinorError("N is not a proper minor of M")
    if not is_3connected(M) or not is_3connected(N):
        raise ChainError("both matroids must be 3-connected")
    if has_minor(M, N) is None:
        raise NotAMinorError("N is not a minor of M")
    check_wheel_precondition(M, N)

    poset = _poset(M.key(), N.rank, N.corank)
    start = canonical_form(N)
    top = canonical_form(M)
    if start not in poset.reps:
        raise RuntimeError("no chain of 3-connected minors reaches N")
    steps = M.size - N.size
    frontiers = [{start}]
    kinds: list[str] = []
    for _ in range(steps):
        by_kind: dict[str, set[bytes]] = {EXTENSION: set(), COEXTENSION: set()}
        for node in frontiers[-1]:
            for parent, kind in poset.up[node]:
                by_kind[kind].add(parent)
        kind = COEXTENSION if by_kind[COEXTENSION] else EXTENSION
        kinds.append(kind)
        frontiers.append(by_kind[kind])
    if top not in frontiers[-1]:
        raise RuntimeError("chain search did not reach M")

    # walk back choosing the least canonical form at each level
    path = [top]
    for level in range(steps, 0, -1):
        node, kind = path[-1], kinds[level - 1]
        preds = sorted(
            p for p in frontiers[level - 1] if (node, kind) in poset.up[p]
        )
        path.append(preds[0])
    path.reverse()

    # realise the path on the labels of M, top down
    labeled = [M]
    for level in range(steps, 0, -1):
        current = labeled[-1]
        want = path[level - 1]
        kind = kinds[level - 1]
        for e in sorted(current.labels):
            Q = delete(current, [e]) if kind == EXTENSION else contract(current, [e])
            if canonical_form(Q) == want and is_3connected(Q):
                labeled.append(Q)
                break
        else:
            raise RuntimeError("could not realise the chain on M's labels")
    labeled.reverse()
    return _compress(labeled, M.rank - N.rank)


def _compress(seq: list[BinaryMatroid], m: int) -> ChainReport:
    """Merge each run of extensions ending in a coextension into one rank step."""
    steps: list[ChainStep] = []
    pending: list[int] = []
    base_rank = seq[0].rank
    prev = seq[0]
    for cur in seq[1:]:
        pending.extend(sorted(cur.ground_set - prev.ground_set))
        if cur.rank > prev.rank:
            steps.append(_rank_step(cur, tuple(pending)))
            pending = []
        elif cur.rank - base_rank == m:
            steps.append(ChainStep(cur, EXTENSION, tuple(pending)))
            pending = []
        prev = cur
    return ChainReport(seq[0], tuple(steps), m)


def _rank_step(result: BinaryMatroid, new: tuple[int, ...]) -> ChainStep:
    if len(new) == 1:
        return ChainStep(result, COEXTENSION, new)
    if len(new) == 3:
        return ChainStep(result, TRIAD_BATCH, new, frozenset(new))
    return ChainStep(result, JUMP, new)


# --- validation ------------------------------------------------------------------


def _is_minor_step(big: BinaryMatroid, small: BinaryMatroid, contracted: int) -> bool:
    """small equals big / {one element} \\ (the rest), or big \\ new when contracted == 0."""
    new = big.ground_set - small.ground_set
    if not small.ground_set <= big.ground_set:
        return False
    if contracted == 0:
        return same_matroid(delete(big, new), small)
    for y in sorted(new):
        if same_matroid(delete(contract(big, [y]), new - {y}), small):
            return True
    return False


def validate_chain(report: ChainReport, M: BinaryMatroid, N: BinaryMatroid) -> Validation:
    """Recheck every chain condition independently of how the chain was built."""
    problems: list[str] = []
    seq = report.matroids()
    m = M.rank - N.rank
    if report.m != m:
        problems.append(f"m is {report.m}, expected {m}")
    if is_isomorphic(seq[0], N) is None:
        problems.append("first matroid is not isomorphic to N")
    if not same_matroid(seq[-1], M):
        problems.append("last matroid is not M")
    for idx, P in enumerate(seq):
        if not is_3connected(P):
            problems.append(f"matroid {idx} is not 3-connected")
    for k, step in enumerate(report.steps, start=1):
        prev = seq[k - 1]
        cur = step.result
        new = cur.ground_set - prev.ground_set
        if set(step.new_elements) != new:
            problems.append(f"step {k}: listed new elements differ from the actual ones")
        expected_kind = _rank_step(cur, tuple(new)).kind if k <= m else EXTENSION
        if step.kind != expected_kind:
            problems.append(f"step {k}: kind {step.kind} does not fit {len(new)} new elements")
        if k <= m:
            if cur.rank - prev.rank != 1:
                problems.append(f"step {k}: rank must grow by one")
            if not 1 <= len(new) <= 3:
                problems.append(f"step {k}: {len(new)} new elements")
            if not _is_minor_step(cur, prev, 1):
                problems.append(f"step {k}: predecessor is not a minor of this step")
            if len(new) == 3:
                if step.certificate is None or set(step.certificate) != new:
                    problems.append(f"step {k}: size-3 step lacks its triad certificate")
                if not is_cocircuit(cur, new):
                    problems.append(f"step {k}: new elements are not a triad")
        else:
            if cur.rank != M.rank:
                problems.append(f"step {k}: rank {cur.rank} below r(M) = {M.rank}")
            if len(new) != 1:
                problems.append(f"step {k}: rank-preserving step adds {len(new)} elements")
            if not _is_minor_step(cur, prev, 0):
                problems.append(f"step {k}: predecessor is not a deletion of this step")
    if len(report.steps) < m:
        problems.append("fewer steps than rank jumps")
    return Validation(not problems, problems)


def max_consecutive_extensions_below_top(report: ChainReport) -> int:
    """Longest run of single-element extensions taken before the top rank is reached.

    A merged rank step with s new elements stands for s - 1 extensions followed
    by one coextension; steps at the top rank are not counted.
    """
    return max(
        (len(s.new_elements) - 1 for s in report.steps[: report.m]),
        default=0,
    )


def format_chain(report: ChainReport) -> str:
    lines = ["k | kind | new-elements | rank | n | triad?"]
    for k, step in enumerate(report.steps, start=1):
        new = ",".join(str(e) for e in step.new_elements)
        triad = "yes" if step.certificate is not None else "-"
        lines.append(
            f"{k} | {step.kind} | {new} | {step.result.rank} | {step.result.size} | {triad}"
        )
    return "\n".join(lines) + "\n"
