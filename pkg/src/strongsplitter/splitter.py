"""Splitter verdicts, regularity and almost-regularity."""

from __future__ import annotations

from dataclasses import dataclass

from .chains import WheelPreconditionError, is_wheel
from .core import BinaryMatroid, contract, delete, dual
from .generate import _spec_is_self_dual, coextensions, extensions
from .iso import canonical_form
from .minors import ClassSpec, has_minor


@dataclass(frozen=True)
class SplitterVerdict:
    isSplitter: bool
    failingExtension: BinaryMatroid | None = None

    def __post_init__(self) -> None:
        if self.isSplitter != (self.failingExtension is None):
            raise ValueError("a failing extension is given exactly when the verdict is negative")


def _check_wheel(N: BinaryMatroid, spec: ClassSpec) -> None:
    from .catalog import wheel

    k = is_wheel(N)
    if k is None:
        return
    bigger = wheel(k + 1)
    # the class has no larger wheel if it excludes some minor of that wheel
    if any(has_minor(bigger, X) is not None for X in spec.excludedMinors):
        return
    raise WheelPreconditionError(
        f"N is the wheel of rank {k}; the class spec does not rule out the wheel of rank {k + 1}"
    )


def is_splitter(
    N: BinaryMatroid, spec: ClassSpec, *, use_self_duality: bool = True, jobs: int = 1
) -> SplitterVerdict:
    """True when no 3-connected single-element extension or coextension of N lies in the class.

    With use_self_duality, a self-dual N in a duality-closed class only needs
    its coextensions checked: each extension is the dual of a coextension.
    """
    if not spec.admits(N):
        raise ValueError("N must be 3-connected and belong to the class")
    _check_wheel(N, spec)
    shortcut = (
        use_self_duality
        and canonical_form(N) == canonical_form(dual(N))
        and _spec_is_self_dual(spec)
    )
    if not shortcut:
        found = extensions(N, spec, jobs)
        if found:
            return SplitterVerdict(False, found[0].representative)
    found = coextensions(N, spec, jobs)
    if found:
        witness = found[0].representative
        # under the shortcut report the matching extension (of N* = N) instead
        return SplitterVerdict(False, dual(witness) if shortcut else witness)
    return SplitterVerdict(True)


def is_regular(M: BinaryMatroid) -> bool:
    from .catalog import fano

    F7 = fano()
    return has_minor(M, F7) is None and has_minor(M, dual(F7)) is None


def _element_status(M: BinaryMatroid, e: int) -> tuple[bool, bool]:
    return is_regular(delete(M, [e])), is_regular(contract(M, [e]))


def is_almost_regular(M: BinaryMatroid) -> bool:
    """Non-regular, and every element has a regular deletion or a regular contraction."""
    if is_regular(M):
        return False
    return all(any(_element_status(M, e)) for e in sorted(M.labels))


def regular_elements(M: BinaryMatroid) -> list[int]:
    """Elements whose deletion and contraction are both regular."""
    return [e for e in sorted(M.labels) if all(_element_status(M, e))]
