from __future__ import annotations

import pytest

from strongsplitter.catalog import fano, get, wheel
from strongsplitter.chains import WheelPreconditionError
from strongsplitter.core import contract, delete, dual
from strongsplitter.iso import is_isomorphic
from strongsplitter.minors import ClassSpec
from strongsplitter.splitter import (
    SplitterVerdict,
    is_almost_regular,
    is_regular,
    is_splitter,
    regular_elements,
)


def g(name):
    return get(name).matroid


@pytest.fixture(scope="module")
def e5_spec():
    return ClassSpec((g("E5"),), (g("E4"),))


@pytest.mark.parametrize("shortcut", [True, False])
def test_m12_is_a_splitter(e5_spec, shortcut):
    assert is_splitter(g("M12"), e5_spec, use_self_duality=shortcut).isSplitter


@pytest.mark.parametrize("shortcut", [True, False])
def test_e5_is_not_a_splitter(e5_spec, shortcut):
    v = is_splitter(g("E5"), e5_spec, use_self_duality=shortcut)
    assert not v.isSplitter
    assert is_isomorphic(v.failingExtension, g("A")) is not None
    assert e5_spec.admits(v.failingExtension)


def test_r10_is_a_splitter_for_regular():
    F = fano()
    assert is_splitter(g("R10"), ClassSpec((), (F, dual(F)))).isSplitter


def test_verdict_invariant():
    with pytest.raises(ValueError):
        SplitterVerdict(True, g("E5"))
    with pytest.raises(ValueError):
        SplitterVerdict(False)


def test_splitter_rejects_non_member(e5_spec):
    with pytest.raises(ValueError):
        is_splitter(g("E4"), e5_spec)


def test_wheel_precondition():
    with pytest.raises(WheelPreconditionError):
        is_splitter(wheel(3), ClassSpec())
    # excluding W4 itself certifies the class has no larger wheel
    v = is_splitter(wheel(3), ClassSpec((), (wheel(4),)))
    assert isinstance(v, SplitterVerdict)


def test_regularity():
    assert is_regular(g("R10"))
    assert not is_regular(fano())
    assert not is_regular(g("E5"))
    for name in ("R10", "E5", "M12", "W4"):
        M = g(name)
        assert is_regular(M) == is_regular(dual(M))


@pytest.mark.parametrize("name", ["E5", "B", "B*"])
def test_almost_regular_positives(name):
    M = g(name)
    assert is_almost_regular(M)
    for e in M.labels:
        assert is_regular(delete(M, [e])) or is_regular(contract(M, [e]))


def test_regular_matroid_is_not_almost_regular():
    assert not is_almost_regular(g("R10"))
    assert regular_elements(g("R10")) == sorted(g("R10").labels)


def test_regular_elements_definition():
    M = g("E5")
    expected = [e for e in sorted(M.labels) if is_regular(delete(M, [e])) and is_regular(contract(M, [e]))]
    assert regular_elements(M) == expected
