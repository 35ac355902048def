from __future__ import annotations

import pytest
from hypothesis import given, settings
from helpers import matroids

from strongsplitter.catalog import fano, get, wheel
from strongsplitter.core import dual
from strongsplitter.iso import canonical_form
from strongsplitter.minors import (
    INTERNALLY_4_CONNECTED,
    ClassSpec,
    brute_force_has_minor,
    check_witness,
    has_minor,
    restrictions_with,
)


@settings(max_examples=120, deadline=None)
@given(matroids(max_rank=5, max_corank=5), matroids(max_rank=3, max_corank=3))
def test_has_minor_matches_brute_force(M, N):
    if M.size > 10:
        return
    w = has_minor(M, N)
    assert (w is not None) == brute_force_has_minor(M, N)
    if w is not None:
        assert check_witness(M, N, w)


@settings(max_examples=60, deadline=None)
@given(matroids(max_rank=5, max_corank=5), matroids(max_rank=3, max_corank=3))
def test_has_minor_is_duality_stable(M, N):
    assert (has_minor(M, N) is None) == (has_minor(dual(M), dual(N)) is None)


@settings(max_examples=40, deadline=None)
@given(matroids(max_rank=4, max_corank=4), matroids(max_rank=3, max_corank=3), matroids(max_rank=2, max_corank=2))
def test_has_minor_is_transitive(M, N, P):
    if has_minor(M, N) is not None and has_minor(N, P) is not None:
        assert has_minor(M, P) is not None


def test_named_minor_relations():
    E4, E5 = get("E4").matroid, get("E5").matroid
    assert has_minor(get("M12").matroid, E5) is not None
    assert has_minor(get("M12").matroid, E4) is None
    assert has_minor(get("A").matroid, E4) is None
    assert has_minor(get("H").matroid, E4) is not None
    assert has_minor(get("R10").matroid, fano()) is None
    assert has_minor(E5, fano()) is not None or has_minor(E5, dual(fano())) is not None
    assert has_minor(wheel(4), wheel(3)) is not None
    assert has_minor(wheel(3), wheel(4)) is None


def test_witness_maps_onto_small_labels():
    M, N = get("M12").matroid, get("E5").matroid
    w = has_minor(M, N)
    assert check_witness(M, N, w)
    assert sorted(w.iso.as_dict().values()) == sorted(N.labels)
    assert w.apply(M).size == N.size


def test_restrictions_with_requires_minor():
    E5 = get("E5").matroid
    spec = ClassSpec((E5,), (get("E4").matroid,))
    M12 = get("M12").matroid
    found = restrictions_with(M12, spec)
    assert canonical_form(found[0]) == canonical_form(M12)
    assert all(P.rank == 6 and has_minor(P, E5) is not None for P in found)
    found = restrictions_with(get("C").matroid, spec)
    forms = [canonical_form(P) for P in found]
    assert forms == sorted(set(forms), key=forms.index)
    assert canonical_form(E5) in forms and canonical_form(get("C").matroid) in forms


def test_class_spec_validation():
    with pytest.raises(ValueError):
        ClassSpec(connectivity="5-connected")
    spec = ClassSpec((), (), INTERNALLY_4_CONNECTED)
    assert spec.admits(fano())
    assert not spec.admits(wheel(4))
