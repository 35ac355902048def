from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from helpers import matroid_and_subset, matroids, span_rank, subsets

from strongsplitter.core import (
    BinaryMatroid,
    BitMatrix,
    MatroidFormatError,
    UnknownLabelError,
    bits_to_string,
    circuits_of_size,
    closure,
    coextend,
    cocircuits_of_size,
    coloops,
    contract,
    corank_function,
    delete,
    dual,
    extend,
    gf2_rank,
    is_circuit,
    is_cosimple,
    is_simple,
    loops,
    minor,
    parallel_classes,
    parse_matroid,
    rank,
    relabel,
    same_matroid,
    serialize_matroid,
    string_to_bits,
)


def test_bit_strings_read_top_row_first():
    assert string_to_bits("00101") == 0b10100
    assert bits_to_string(0b10100, 5) == "00101"


def test_bitmatrix_transpose_and_columns():
    B = BitMatrix.from_strings(["110", "011"])
    assert B.column(0) == 0b01
    assert B.column(1) == 0b11
    assert B.transpose().to_strings() == ["10", "11", "01"]
    assert B.transpose().transpose() == B


def test_gf2_rank_small():
    assert gf2_rank([]) == 0
    assert gf2_rank([0b11, 0b01, 0b10]) == 2
    assert gf2_rank([0, 0]) == 0


@given(matroids())
def test_serialize_round_trip(M):
    assert parse_matroid(serialize_matroid(M)) == M
    assert parse_matroid(serialize_matroid(M, True)) == M


def test_labels_line_round_trip():
    M = relabel(BinaryMatroid.from_rows(["11", "01"]), {1: 7, 2: 3, 3: 9, 4: 4})
    text = serialize_matroid(M)
    assert text.endswith("labels: 7 3 9 4\n")
    assert parse_matroid(text) == M


@pytest.mark.parametrize(
    "text",
    [
        "",
        "3\n",
        "2 x\n10\n01\n",
        "3 2\n",
        "2 4\n10\n",
        "2 4\n101\n01\n",
        "2 4\n12\n01\n",
        "2 4\n10\n01\nlabels: 1 2 3\n",
        "2 4\n10\n01\nlabels: 1 1 2 3\n",
        "2 4\n10\n01\nlabels: 0 1 2 3\n",
        "2 4\n10\n01\nextra\n",
    ],
)
def test_parse_errors(text):
    with pytest.raises(MatroidFormatError):
        parse_matroid(text)


def test_unknown_label():
    M = BinaryMatroid.from_rows(["11"])
    with pytest.raises(UnknownLabelError):
        rank(M, [4])
    with pytest.raises(UnknownLabelError):
        delete(M, [9])


@settings(max_examples=150)
@given(matroid_and_subset())
def test_rank_matches_span_oracle(case):
    M, X = case
    assert rank(M, X) == span_rank(M, X)


@settings(max_examples=30)
@given(matroids(max_rank=3, max_corank=3))
def test_rank_axioms_exhaustive(M):
    sets = [frozenset(s) for s in subsets(M.labels)]
    r = {X: rank(M, X) for X in sets}
    for X in sets:
        assert 0 <= r[X] <= len(X)
        for Y in sets:
            if X <= Y:
                assert r[X] <= r[Y]
            assert r[X | Y] + r[X & Y] <= r[X] + r[Y]


@given(matroid_and_subset())
def test_dual_rank_formula(case):
    M, X = case
    E = M.ground_set
    assert rank(dual(M), X) == len(X) - M.rank + rank(M, E - X)
    assert corank_function(M, X) == rank(dual(M), X)


@given(matroids())
def test_double_dual(M):
    assert same_matroid(dual(dual(M)), M)
    assert dual(M).rank == M.corank


@given(matroid_and_subset())
def test_delete_contract_duality(case):
    M, X = case
    assert same_matroid(dual(delete(M, X)), contract(dual(M), X))
    assert same_matroid(dual(contract(M, X)), delete(dual(M), X))


@given(matroid_and_subset(), st.data())
def test_contraction_rank(case, data):
    M, C = case
    MC = contract(M, C)
    rest = sorted(M.ground_set - C)
    Y = frozenset(data.draw(st.sets(st.sampled_from(rest)))) if rest else frozenset()
    assert rank(MC, Y) == rank(M, Y | C) - rank(M, C)


@given(matroid_and_subset())
def test_deletion_rank(case):
    M, X = case
    MX = delete(M, X)
    rest = M.ground_set - X
    assert MX.ground_set == rest
    assert MX.rank == rank(M, rest)
    assert all(rank(MX, [e]) == rank(M, [e]) for e in rest)


@given(matroids(min_size=2), st.data())
def test_minor_commutes(M, data):
    a, b = data.draw(st.lists(st.sampled_from(M.labels), min_size=2, max_size=2, unique=True))
    assert same_matroid(contract(delete(M, [b]), [a]), delete(contract(M, [a]), [b]))
    assert same_matroid(minor(M, [a], [b]), delete(contract(M, [a]), [b]))


@given(matroid_and_subset())
def test_closure(case):
    M, X = case
    cl = closure(M, X)
    assert X <= cl
    assert rank(M, cl) == rank(M, X)
    assert all(rank(M, X | {e}) > rank(M, X) for e in M.ground_set - cl)


@given(matroids())
def test_loops_coloops_and_parallel(M):
    assert loops(M) == [e for e in M.labels if rank(M, [e]) == 0]
    assert coloops(M) == loops(dual(M))
    for cls in parallel_classes(M):
        assert rank(M, cls) == 1
    simple = not loops(M) and all(len(c) == 1 for c in parallel_classes(M))
    assert is_simple(M) == simple
    assert is_cosimple(M) == is_simple(dual(M))


@settings(max_examples=40)
@given(matroids(max_rank=3, max_corank=3))
def test_small_circuits_match_definition(M):
    for k in (1, 2, 3, 4):
        expected = {
            frozenset(S)
            for S in subsets(M.labels)
            if len(S) == k
            and rank(M, S) == k - 1
            and all(rank(M, set(S) - {x}) == k - 1 for x in S)
        }
        assert set(circuits_of_size(M, k)) == expected
        assert all(is_circuit(M, C) for C in expected)
        assert set(cocircuits_of_size(M, k)) == set(circuits_of_size(dual(M), k))


@given(matroids(max_rank=4, max_corank=3), st.integers(0, 15))
def test_extend_and_coextend(M, v):
    col = v & ((1 << M.rank) - 1)
    N = extend(M, col)
    assert N.size == M.size + 1 and N.rank == M.rank
    assert same_matroid(delete(N, [N.labels[-1]]), M)
    row = v & ((1 << M.corank) - 1)
    P = coextend(M, row)
    new = max(P.labels)
    assert P.rank == M.rank + 1
    assert same_matroid(contract(P, [new]), M)


def test_same_matroid_detects_differences():
    M = BinaryMatroid.from_rows(["11", "01"])
    assert same_matroid(M, relabel(M, {1: 1, 2: 2, 3: 3, 4: 4}))
    assert not same_matroid(M, BinaryMatroid.from_rows(["11", "10"]))
