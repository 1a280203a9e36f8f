import itertools
import random

import pytest

from cyclohecke.algebra import (
    Algebra,
    ExponentOverflowError,
    MemoCapExceeded,
    NormalWord,
    TAU,
    sigma,
    sigma_inv,
)
from cyclohecke.scalars import Field

from conftest import algebra, field


def defining_relations(n):
    rels = []
    for i in range(1, n - 1):
        rels.append(([sigma(i), sigma(i + 1), sigma(i)],
                     [sigma(i + 1), sigma(i), sigma(i + 1)]))
    for i in range(1, n):
        for j in range(i + 2, n):
            rels.append(([sigma(i), sigma(j)], [sigma(j), sigma(i)]))
    if n >= 2:
        rels.append(([TAU, sigma(1), TAU, sigma(1)],
                     [sigma(1), TAU, sigma(1), TAU]))
    for i in range(2, n):
        rels.append(([TAU, sigma(i)], [sigma(i), TAU]))
    return rels


def test_reduce_quadratic_example():
    A = algebra(1, 2)
    got = A.reduce([sigma(1), sigma(1)])
    assert got == A.sigma_element(1).scale(A.c) + A.one()
    assert str(got) == "(q - q^-1)*[s1] + 1*[]"


def test_reduce_cyclotomic_example():
    A = algebra(2, 1)
    f = A.field
    got = A.reduce([TAU, TAU])
    assert got == A.tau_element().scale(f.v(1) + f.v(2)) \
        - A.one().scale(f.v(1) * f.v(2))


def test_reduce_jm2_example():
    A = algebra(2, 2)
    got = A.reduce([sigma(1), TAU, sigma(1)])
    expect = A.element({
        NormalWord(((0, 0), (1, 1))): A.field.one,
        NormalWord(((0, 0), (0, 1))): A.c,
    })
    assert got == expect
    assert got == A.jm_element(2)


def test_reduce_rejects_bad_letters():
    A = algebra(2, 2)
    with pytest.raises(IndexError):
        A.reduce([sigma(9)])
    with pytest.raises(IndexError):
        Algebra(2, 0).reduce([TAU])


def test_basis_counts():
    assert len(algebra(2, 2).enumerate_basis()) == 8
    assert len(algebra(1, 3).enumerate_basis()) == 6
    assert len(Algebra(3, 0).enumerate_basis()) == 1


def test_basis_order_is_lex_on_labels():
    words = algebra(2, 2).enumerate_basis()
    keys = [w.sort_key() for w in words]
    assert keys == sorted(keys)


def test_jm_element_examples():
    A = algebra(2, 2)
    j1 = A.jm_element(1)
    assert j1 == A.tau_element()
    with pytest.raises(IndexError):
        A.jm_element(3)


def test_sigma_inverse_examples():
    A = algebra(2, 2)
    assert A.sigma_inverse(1) == A.sigma_element(1) - A.one().scale(A.c)
    assert A.reduce([sigma_inv(1), sigma(1)]) == A.one()
    assert A.reduce([sigma(1), sigma_inv(1)]) == A.one()


@pytest.mark.parametrize("m,n", [(1, 2), (2, 2), (1, 3), (2, 3), (3, 2), (3, 3)])
def test_reduce_idempotent_on_basis(m, n):
    A = algebra(m, n)
    for w in A.enumerate_basis():
        r = A.reduce(w.letters())
        assert list(r.terms) == [w]
        assert r.terms[w].is_one()


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_relation_kernel(m, n):
    A = algebra(m, n)
    for lhs, rhs in defining_relations(n):
        assert A.reduce(lhs) == A.reduce(rhs)
    for i in range(1, n):
        assert A.reduce([sigma(i), sigma(i)]) == \
            A.sigma_element(i).scale(A.c) + A.one()
    prod = A.one()
    for j in range(1, m + 1):
        prod = A.multiply(prod, A.tau_element() - A.one().scale(A.field.v(j)))
    assert prod.is_zero()


def _random_element(A, rng, terms=2):
    basis = A.enumerate_basis()
    out = {}
    for _ in range(terms):
        out[rng.choice(basis)] = A.field.monomial(
            rng.randint(-2, 2), q=rng.randint(-1, 1))
    return A.element(out)


@pytest.mark.parametrize("m,n", [(1, 3), (2, 2), (2, 3)])
def test_multiply_associative(m, n):
    A = algebra(m, n)
    rng = random.Random(42)
    for _ in range(8):
        x, y, z = (_random_element(A, rng) for _ in range(3))
        assert A.multiply(x, A.multiply(y, z)) == A.multiply(A.multiply(x, y), z)


def test_multiply_identity_and_consistency():
    A = algebra(2, 3)
    rng = random.Random(5)
    for _ in range(10):
        x = _random_element(A, rng)
        assert A.multiply(A.one(), x) == x
        assert A.multiply(x, A.one()) == x
    assert A.multiply(A.sigma_element(1), A.sigma_element(1)) == \
        A.reduce([sigma(1), sigma(1)])


@pytest.mark.parametrize("m,n", [(2, 3), (1, 4), (3, 3)])
def test_jm_commutativity_and_locality(m, n):
    A = algebra(m, n)
    jms = [A.jm_element(i) for i in range(1, n + 1)]
    for a, b in itertools.combinations(jms, 2):
        assert A.multiply(a, b) == A.multiply(b, a)
    for i in range(1, n + 1):
        for k in range(1, n):
            if k > i or k < i - 1:
                s = A.sigma_element(k)
                assert A.multiply(jms[i - 1], s) == A.multiply(s, jms[i - 1])


@pytest.mark.parametrize("m,n", [(2, 3), (1, 4), (3, 3)])
def test_tower_embedding(m, n):
    f = field(m)
    A_small, A_big = algebra(m, n - 1), algebra(m, n)

    def lift(w):
        return NormalWord(tuple(w) + ((n - 1, 0),))

    small_basis = A_small.enumerate_basis()
    rng = random.Random(7)
    for _ in range(20):
        w1, w2 = rng.choice(small_basis), rng.choice(small_basis)
        p_small = A_small.multiply(A_small.element({w1: 1}),
                                   A_small.element({w2: 1}))
        p_big = A_big.multiply(A_big.element({lift(w1): 1}),
                               A_big.element({lift(w2): 1}))
        assert p_big == A_big.element({lift(w): c for w, c in p_small.items()})


@pytest.mark.parametrize("m,n", [(2, 2), (2, 3)])
def test_flatness_of_structure_constants(m, n):
    A = algebra(m, n)
    basis = A.enumerate_basis()
    for w1 in basis:
        e1 = A.element({w1: 1})
        for w2 in basis:
            p = A.multiply(e1, A.element({w2: 1}))
            assert all(c.is_laurent_unit_denominator() for c in p.terms.values())


def test_element_checks_algebra_compatibility():
    A, B = algebra(2, 2), algebra(2, 3)
    with pytest.raises(ValueError):
        A.one() + B.one()
    with pytest.raises(TypeError):
        A.one() + 1


def test_element_validation():
    A = algebra(2, 2)
    with pytest.raises(ValueError):
        A.element({NormalWord(((0, 0),)): 1})  # wrong number of factors
    with pytest.raises(ValueError):
        A.element({NormalWord(((0, 0), (2, 0))): 1})  # j out of range


def test_memo_cap_guard():
    big = Algebra(3, 6)  # 6! * 3^6 * 7 far beyond the cap
    with pytest.raises(MemoCapExceeded):
        big.reduce([TAU])


def test_exponent_overflow_is_hard_error():
    A = Algebra(1, 2)
    huge = A.field.monomial(1, q=1 << 18)
    with pytest.raises(ExponentOverflowError):
        A.multiply(A.one().scale(huge), A.one())


def test_letters_round_trip_rendering():
    A = algebra(2, 3)
    for w in A.enumerate_basis():
        s = str(w)
        assert "t^" not in s  # powers are spelled out letter by letter
    assert str(NormalWord.identity(3)) == ""
