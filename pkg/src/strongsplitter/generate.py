"""Isomorph-free single-element extensions/coextensions and class generation."""

from __future__ import annotations

import fcntl
import json
import logging
import os
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .connectivity import is_3connected
from .core import (
    BinaryMatroid,
    bits_to_string,
    coextend,
    dual,
    extend,
    is_simple,
    parse_matroid,
    serialize_matroid,
)
from .iso import canonical_form
from .minors import THREE_CONNECTED, ClassSpec, has_minor

log = logging.getLogger(__name__)

ROW_CONVENTION = (
    "rows give the new row under D, one bit per D column from left to right; "
    "the new element is the added identity column"
)
COLUMN_CONVENTION = "columns give the new column of [I | D], top row first"


@dataclass(frozen=True)
class ExtensionClass:
    representative: BinaryMatroid
    columns: tuple[str, ...]

    @property
    def least(self) -> str:
        return self.columns[0]


def candidate_columns(M: BinaryMatroid) -> list[int]:
    """Non-zero columns of length r(M) not already present, in string order."""
    present = set(M.columns)
    cands = [v for v in range(1, 1 << M.rank) if v not in present]
    cands.sort(key=lambda v: bits_to_string(v, M.rank))
    return cands


def _passes(M: BinaryMatroid, parent_ok: bool, spec: ClassSpec) -> bool:
    # a new non-loop column parallel to nothing keeps a 3-connected matroid 3-connected
    if spec.connectivity != THREE_CONNECTED or not parent_ok:
        if not spec.connectivity_ok(M):
            return False
    return spec.minors_ok(M)


def _evaluate(args: tuple[BinaryMatroid, bool, ClassSpec, Sequence[int]]) -> list[tuple[int, bytes]]:
    M, parent_ok, spec, cands = args
    out = []
    for v in cands:
        N = extend(M, v)
        if _passes(N, parent_ok, spec):
            out.append((v, canonical_form(N)))
    return out


def _map_candidates(
    M: BinaryMatroid, parent_ok: bool, spec: ClassSpec, cands: list[int], jobs: int
) -> list[tuple[int, bytes]]:
    if jobs <= 1 or len(cands) < 64:
        return _evaluate((M, parent_ok, spec, cands))
    chunks = [cands[i::jobs] for i in range(jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_evaluate, [(M, parent_ok, spec, c) for c in chunks]))
    merged = [item for part in parts for item in part]
    order = {v: i for i, v in enumerate(cands)}
    merged.sort(key=lambda item: order[item[0]])
    return merged


def extensions(M: BinaryMatroid, spec: ClassSpec = ClassSpec(), jobs: int = 1) -> list[ExtensionClass]:
    """Isomorphism classes of single-element extensions of M passing spec.

    Classes come in order of their least column; each class lists its columns
    in string order and is represented by the extension by its least column.
    """
    parent_ok = is_simple(M) and is_3connected(M)
    cands = candidate_columns(M)
    groups: dict[bytes, list[int]] = {}
    for v, cf in _map_candidates(M, parent_ok, spec, cands, jobs):
        groups.setdefault(cf, []).append(v)
    classes = []
    for vs in groups.values():
        cols = tuple(sorted(bits_to_string(v, M.rank) for v in vs))
        least = min(vs, key=lambda v: bits_to_string(v, M.rank))
        classes.append(ExtensionClass(extend(M, least), cols))
    classes.sort(key=lambda c: c.least)
    return classes


def coextensions(M: BinaryMatroid, spec: ClassSpec = ClassSpec(), jobs: int = 1) -> list[ExtensionClass]:
    """Classes of single-element coextensions, computed as duals of extensions of M*.

    A row string has one bit per column of D (length n - r of M); the new
    element becomes identity column r + 1.
    """
    classes = []
    for cls in extensions(dual(M), spec.dualized(), jobs):
        row = cls.least
        v = sum(1 << j for j, ch in enumerate(row) if ch == "1")
        classes.append(ExtensionClass(coextend(M, v), cls.columns))
    return classes


# --- class generation -------------------------------------------------------------


class DedupCache:
    """Append-only JSON-lines table of canonical forms seen across runs."""

    def __init__(self, path: str | os.PathLike) -> None:
        self.path = Path(path)
        self.entries: dict[bytes, BinaryMatroid] = {}
        if self.path.exists():
            with open(self.path, encoding="utf-8") as fh:
                for line in fh:
                    if not line.strip():
                        continue
                    rec = json.loads(line)
                    self.entries[bytes.fromhex(rec["key"])] = parse_matroid(rec["bm"])

    def __contains__(self, key: bytes) -> bool:
        return key in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def add(self, key: bytes, M: BinaryMatroid) -> None:
        if key in self.entries:
            return
        self.entries[key] = M
        rec = {"key": key.hex(), "rank": M.rank, "n": M.size, "bm": serialize_matroid(M, True)}
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.path, "a", encoding="utf-8") as fh:
            fcntl.flock(fh, fcntl.LOCK_EX)
            try:
                fh.write(json.dumps(rec, sort_keys=True) + "\n")
            finally:
                fcntl.flock(fh, fcntl.LOCK_UN)


def _spec_is_self_dual(spec: ClassSpec) -> bool:
    def forms(ms: Iterable[BinaryMatroid]) -> list[bytes]:
        return sorted(canonical_form(m) for m in ms)

    d = spec.dualized()
    return forms(spec.requiredMinors) == forms(d.requiredMinors) and forms(
        spec.excludedMinors
    ) == forms(d.excludedMinors)


def generate_class(
    seed: BinaryMatroid,
    spec: ClassSpec,
    max_elements: int,
    *,
    jobs: int = 1,
    cache: DedupCache | None = None,
) -> list[BinaryMatroid]:
    """Closure of seed under spec-passing extensions and coextensions, up to isomorphism.

    Children inherit the required minors of their parent, so only the
    connectivity and excluded-minor filters are applied to them.  When the spec
    is closed under duality, a member with rank above its corank is expanded
    through its dual (extensions of M* are the duals of coextensions of M).
    """
    if not spec.admits(seed):
        raise ValueError("seed does not satisfy the class spec")
    child_spec = ClassSpec((), spec.excludedMinors, spec.connectivity)
    self_dual = _spec_is_self_dual(spec)
    members: dict[bytes, BinaryMatroid] = {canonical_form(seed): seed}
    queue = deque([seed])
    expanded: set[bytes] = set()
    while queue:
        M = queue.popleft()
        if M.size >= max_elements:
            continue
        work = M
        if self_dual:
            work = dual(M) if M.rank > M.corank else M
            key = canonical_form(work)
            if key in expanded:
                continue
            expanded.update((key, canonical_form(dual(work))))
        found = extensions(work, child_spec, jobs) + coextensions(work, child_spec, jobs)
        log.info("expanded rank %d, %d elements: %d classes", work.rank, work.size, len(found))
        children = [c.representative for c in found]
        if self_dual:
            children += [dual(c) for c in children]
        for child in children:
            cf = canonical_form(child)
            if cf in members:
                continue
            members[cf] = child
            if cache is not None:
                cache.add(cf, child)
            queue.append(child)
    result = list(members.values())
    result.sort(key=lambda m: (m.rank, m.size, canonical_form(m)))
    return result


# --- table reports -------------------------------------------------------------


def format_classes(
    rows: Sequence[tuple[str, Sequence[str], str]], header: Sequence[str] = ()
) -> str:
    lines = [f"# {h}" for h in header]
    for name, cols, flags in rows:
        lines.append(f"{name}\t{' '.join(cols)}\t{flags}")
    return "\n".join(lines) + "\n"


def e4_flag(M: BinaryMatroid, E4: BinaryMatroid) -> str:
    return "E4-minor=" + ("Yes" if has_minor(M, E4) is not None else "No")
