"""Extension and coextension class reports for E5 and for A, B, C, with golden files."""

from __future__ import annotations

import difflib
from importlib import resources

from .catalog import get
from .core import BinaryMatroid, dual
from .generate import COLUMN_CONVENTION, ROW_CONVENTION, coextensions, e4_flag, extensions, format_classes
from .iso import is_isomorphic

TABLES = ("a1", "a2", "a3")


def golden(name: str) -> str:
    return resources.files(__package__).joinpath("data", "tables", f"{name}.txt").read_text()


def _ordered(classes, E4: BinaryMatroid):
    flagged = [(c, e4_flag(c.representative, E4)) for c in classes]
    # classes without an E4-minor first, then by least column or row
    flagged.sort(key=lambda cf: (cf[1].endswith("Yes"), cf[0].least))
    return flagged


def _a1_rows(jobs: int):
    E4, E5 = get("E4").matroid, get("E5").matroid
    named = {k: get(k).matroid for k in ("A", "B", "C", "H")}
    rows = []
    for cls, flag in _ordered(extensions(E5, jobs=jobs), E4):
        name = next(
            (k for k, N in named.items() if is_isomorphic(cls.representative, N) is not None), "-"
        )
        rows.append((name, cls.columns, flag))
    return rows


def render_a1(jobs: int = 1) -> str:
    return format_classes(_a1_rows(jobs), ["single-element extensions of E5", COLUMN_CONVENTION])


def render_a2(jobs: int = 1) -> str:
    E4, E5 = get("E4").matroid, get("E5").matroid
    starred = {k + "*": dual(get(k).matroid) for k in ("A", "B", "C", "H")}
    rows = []
    for cls, flag in _ordered(coextensions(E5, jobs=jobs), E4):
        name = next(
            (k for k, N in starred.items() if is_isomorphic(cls.representative, N) is not None), "-"
        )
        rows.append((name, cls.columns, flag))
    return format_classes(rows, ["single-element coextensions of E5", ROW_CONVENTION])


def render_a3(jobs: int = 1) -> str:
    E4 = get("E4").matroid
    rows = []
    for parent in ("A", "B", "C"):
        for k, cls in enumerate(coextensions(get(parent).matroid, jobs=jobs), start=1):
            rows.append((f"{parent} coext {k}", cls.columns, e4_flag(cls.representative, E4)))
    return format_classes(rows, ["single-element coextensions of A, B and C", ROW_CONVENTION])


RENDERERS = {"a1": render_a1, "a2": render_a2, "a3": render_a3}


def render(name: str, jobs: int = 1) -> str:
    return RENDERERS[name](jobs)


def diff_against_golden(name: str, text: str) -> str:
    """Unified diff from the golden file to text; empty when they agree."""
    return "".join(
        difflib.unified_diff(
            golden(name).splitlines(keepends=True),
            text.splitlines(keepends=True),
            fromfile=f"golden/{name}.txt",
            tofile=f"generated/{name}.txt",
        )
    )
