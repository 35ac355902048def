from __future__ import annotations

import pytest

from strongsplitter import catalog
from strongsplitter.connectivity import is_3connected
from strongsplitter.core import circuits_of_size, dual, rank
from strongsplitter.iso import canonical_form, is_isomorphic
from strongsplitter.minors import has_minor


def test_every_name_builds():
    for name in catalog.names():
        entry = catalog.get(name)
        assert entry.name == name
        assert entry.provenance in (catalog.PRINTED, catalog.RECONSTRUCTED, catalog.GENERATED, catalog.DERIVED)


def test_unknown_name():
    with pytest.raises(catalog.UnknownMatroidError):
        catalog.get("nope")


@pytest.mark.parametrize(
    "name,r,n", [("E4", 5, 10), ("E5", 5, 10), ("H", 5, 11), ("M12", 6, 12), ("R17", 5, 17), ("R10", 5, 10)]
)
def test_sizes(name, r, n):
    M = catalog.get(name).matroid
    assert (M.rank, M.size) == (r, n)
    assert is_3connected(M)


def test_fano_has_seven_lines():
    F = catalog.fano()
    assert len(circuits_of_size(F, 3)) == 7


def test_wheels():
    W3 = catalog.wheel(3)
    K4 = catalog.graphic(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    assert is_isomorphic(W3, K4) is not None
    W5 = catalog.wheel(5)
    # rim is a circuit, each spoke pair with its rim edge is a triangle
    rim = W5.labels[5:]
    assert rank(W5, rim) == 4
    assert len(circuits_of_size(W5, 3)) == 5
    with pytest.raises(ValueError):
        catalog.wheel(2)


def test_r10_is_regular_self_dual_and_triangle_free():
    R = catalog.r10()
    assert canonical_form(R) == canonical_form(dual(R))
    assert circuits_of_size(R, 3) == []
    F = catalog.fano()
    assert has_minor(R, F) is None and has_minor(R, dual(F)) is None


def test_abc_are_single_element_extensions_of_e5():
    E5 = catalog.get("E5").matroid
    for name in ("A", "B", "C"):
        M = catalog.get(name).matroid
        assert M.labels[:10] == E5.labels and M.size == 11


def test_defg_are_four_classes():
    entries = catalog.derive_defg()
    assert [e.name for e in entries] == ["D", "E", "F", "G"]
    assert len({canonical_form(e.matroid) for e in entries}) == 4
    E4 = catalog.get("E4").matroid
    for e in entries:
        M = e.matroid
        assert (M.rank, M.size) == (5, 12)
        assert is_3connected(M) and has_minor(M, E4) is None


def test_dual_names():
    A = catalog.get("A").matroid
    assert canonical_form(catalog.get("A*").matroid) == canonical_form(dual(A))


def test_k5_minus_edge_dual():
    M = catalog.get("K5\\e*").matroid
    assert (M.rank, M.size) == (5, 9)
