import math

import pytest

from cyclohecke.scalars import Field
from cyclohecke.tableaux import (
    InvalidContentStringError,
    StandardMTableau,
    all_content_pair_strings,
    apply_transposition,
    as_mpartition,
    content_string,
    count_standard_tableaux,
    enumerate_mpartitions,
    enumerate_standard_tableaux,
    is_content_pairs,
    is_content_string,
    tableau_from_content_pairs,
    tableau_from_content_string,
)

F2 = Field(2)


def test_mpartition_enumeration_order():
    got = enumerate_mpartitions(2, 2)
    assert got == [((2,), ()), ((1, 1), ()), ((1,), (1,)), ((), (2,)), ((), (1, 1))]


def test_mpartition_counts():
    assert len(enumerate_mpartitions(1, 3)) == 3
    assert enumerate_mpartitions(3, 0) == [((), (), ())]


def test_as_mpartition_validates():
    with pytest.raises(ValueError):
        as_mpartition([[1, 2]])
    with pytest.raises(ValueError):
        as_mpartition([[2, 0]])


def test_standard_tableaux_counts():
    assert count_standard_tableaux(((1,), (1,))) == 2
    assert count_standard_tableaux(((2,),)) == 1
    assert count_standard_tableaux(((2, 1),)) == 2


def test_enumeration_order_matches_worked_examples():
    # ((1),(1)): content strings come out as (v1, v2) then (v2, v1)
    ts = enumerate_standard_tableaux(((1,), (1,)))
    assert [t.content_pairs() for t in ts] == [((1, 0), (2, 0)), ((2, 0), (1, 0))]
    # ((2,1)): the row-filled tableau comes first
    ts = enumerate_standard_tableaux(((2, 1),))
    assert ts[0].to_rows() == [[[1, 2], [3]]]
    assert ts[1].to_rows() == [[[1, 3], [2]]]


def test_content_examples():
    t = StandardMTableau.from_rows([[[1, 2]], []])
    assert t.content(1, F2) == F2.v(1)
    assert t.content(2, F2) == F2.monomial(1, q=2, v1=1)
    t = StandardMTableau.from_rows([[[1], [2]], []])
    assert t.content(2, F2) == F2.monomial(1, q=-2, v1=1)
    t = StandardMTableau.from_rows([[[1]], [[2]]])
    assert t.content_pairs() == ((1, 0), (2, 0))


def test_is_content_string_examples():
    v1 = F2.v(1)
    v1q2 = F2.monomial(1, q=2, v1=1)
    assert is_content_string([v1, v1q2], 2) is True
    assert is_content_string([v1, v1], 2) is False
    assert is_content_string([v1q2], 2) is False
    # non-monomial entries are rejected outright
    assert is_content_string([v1 + v1q2], 2) is False
    assert is_content_string([F2.from_fraction(2) * v1], 2) is False


def test_tableau_from_content_string_examples():
    t = tableau_from_content_pairs([(1, 0), (1, 1)], 1)
    assert t.to_rows() == [[[1, 2]]]
    t = tableau_from_content_pairs([(1, 0), (2, 0)], 2)
    assert t.to_rows() == [[[1]], [[2]]]
    with pytest.raises(InvalidContentStringError):
        tableau_from_content_pairs([(1, 1)], 2)


def test_bijection_round_trip():
    for m, n in [(1, 3), (2, 3), (3, 2), (2, 4)]:
        seen = set()
        for shape in enumerate_mpartitions(m, n):
            for t in enumerate_standard_tableaux(shape):
                cs = content_string(t)
                assert tableau_from_content_string(cs) == t
                assert tableau_from_content_string(cs.scalars(Field(m))) == t
                assert cs.pairs not in seen
                seen.add(cs.pairs)
        brute = {p for p in all_content_pair_strings(m, n) if is_content_pairs(p, m)}
        assert brute == seen


def test_adjacent_contents_differ():
    for m, n in [(2, 3), (1, 4)]:
        for shape in enumerate_mpartitions(m, n):
            for t in enumerate_standard_tableaux(shape):
                pairs = t.content_pairs()
                assert all(pairs[i] != pairs[i + 1] for i in range(n - 1))


def test_apply_transposition_examples():
    t = StandardMTableau.from_rows([[[1, 2]]])
    assert apply_transposition(t, 1) is None
    t = StandardMTableau.from_rows([[[1]], [[2]]])
    assert apply_transposition(t, 1).to_rows() == [[[2]], [[1]]]
    t = StandardMTableau.from_rows([[[1, 2], [3]]])
    assert apply_transposition(t, 2).to_rows() == [[[1, 3], [2]]]
    with pytest.raises(IndexError):
        apply_transposition(t, 5)


def test_transposition_involution():
    for shape in enumerate_mpartitions(2, 3):
        for t in enumerate_standard_tableaux(shape):
            for i in range(1, 3):
                s = apply_transposition(t, i)
                if s is not None:
                    assert apply_transposition(s, i) == t


def test_sum_of_squares_counts():
    for m in (1, 2, 3):
        for n in range(0, 5):
            total = sum(
                count_standard_tableaux(s) ** 2
                for s in enumerate_mpartitions(m, n)
            )
            assert total == math.factorial(n) * m ** n


def test_from_rows_validation():
    with pytest.raises(ValueError):
        StandardMTableau.from_rows([[[2, 1]]])
    with pytest.raises(ValueError):
        StandardMTableau.from_rows([[[1, 1]]])


def test_remove_top():
    t = StandardMTableau.from_rows([[[1, 2], [3]]])
    assert t.remove_top().shape == ((2,),)
    t = StandardMTableau.from_rows([[[1, 3], [2]]])
    assert t.remove_top().shape == ((1, 1),)
