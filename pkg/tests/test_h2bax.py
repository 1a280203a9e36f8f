import pytest

from cyclohecke.algebra import Algebra
from cyclohecke.h2bax import (
    H2ParameterError,
    NotDiagonalizableError,
    ReducibleError,
    baxter_field,
    baxter_report,
    baxterize,
    h2_one_dim,
    h2_two_dim,
    verify_baxter_relations,
    verify_h2_relations,
)
from cyclohecke.scalars import Field
from cyclohecke.seminormal import build_representation, jm_matrix
from cyclohecke.tableaux import enumerate_mpartitions

from conftest import field


def test_one_dim_plus_branch():
    f = field(2)
    rep = h2_one_dim(f.v(1), 1)
    assert rep.y_matrix[0][0] == f.monomial(1, q=2, v1=1)
    assert rep.sigma_matrix[0][0] == f.q
    assert verify_h2_relations(rep)


def test_one_dim_minus_branch():
    f = field(2)
    rep = h2_one_dim(f.one, -1)
    assert rep.sigma_matrix[0][0] == -f.q_inv
    assert rep.y_matrix[0][0] == f.q_inv * f.q_inv
    assert verify_h2_relations(rep)


def test_one_dim_rejects_zero():
    with pytest.raises(H2ParameterError):
        h2_one_dim(field(2).zero, 1)


def test_two_dim_generic_relations():
    f = field(2)
    rep = h2_two_dim(f.v(1), f.v(2))
    assert verify_h2_relations(rep)
    assert rep.x_matrix[0][0] == f.v(1) and rep.x_matrix[1][1] == f.v(2)
    assert rep.y_matrix[0][0] == f.v(2) and rep.y_matrix[1][1] == f.v(1)


def test_two_dim_error_paths():
    f = field(2)
    with pytest.raises(NotDiagonalizableError):
        h2_two_dim(f.v(1), f.v(1))
    with pytest.raises(ReducibleError):
        h2_two_dim(f.v(1), f.q * f.q * f.v(1))
    with pytest.raises(ReducibleError):
        h2_two_dim(f.v(1), f.q_inv * f.q_inv * f.v(1))


def test_two_dim_matches_seminormal_spans():
    # (J_i, J_{i+1}, sigma_i) on span{t, t s_i} equals the rank-two
    # representation with a = content(t, i), b = content(t, i+1), up to the
    # diagonal change of basis fixed by the off-diagonal coefficient
    for m, n in [(2, 2), (1, 3), (2, 3)]:
        f = field(m)
        for shape in enumerate_mpartitions(m, n):
            rep = build_representation(shape, f)
            jms = {i: jm_matrix(rep, i) for i in range(1, n + 1)}
            for col, t in enumerate(rep.basis):
                for i in range(1, n):
                    s = t.swap_adjacent(i)
                    if s is None:
                        continue
                    row = rep.index[s]
                    if row < col:
                        continue  # handle each unordered pair once
                    a = t.content(i, f)
                    b = t.content(i + 1, f)
                    h2 = h2_two_dim(a, b, f)
                    # X, Y diagonal parts
                    assert jms[i][col][col] == a and jms[i][row][row] == b
                    assert jms[i + 1][col][col] == b and jms[i + 1][row][row] == a
                    sig = rep.sigma_matrices[i - 1]
                    assert sig[col][col] == h2.sigma_matrix[0][0]
                    assert sig[row][row] == h2.sigma_matrix[1][1]
                    assert sig[col][row] * sig[row][col] == \
                        h2.sigma_matrix[0][1] * h2.sigma_matrix[1][0]


def test_baxterize_examples():
    bf = baxter_field(1)
    A = Algebra(1, 3, bf)
    al, be = bf.var("alpha"), bf.var("beta")
    assert baxterize(1, al, bf.zero, A) == A.sigma_element(1)
    got = baxterize(1, bf.q ** 2 * be, be, A)
    assert got == A.sigma_element(1) + A.one().scale(bf.q_inv)
    coeff = (bf.q - bf.q_inv) * be / (al - be)
    assert baxterize(1, al, be, A) == A.sigma_element(1) + A.one().scale(coeff)
    with pytest.raises(ZeroDivisionError):
        baxterize(1, al, al, A)


@pytest.mark.parametrize("m", [1, 2])
def test_baxter_identities_n3(m):
    report = baxter_report(m, 3)
    assert report["checks"]["unitarity"]
    assert report["checks"]["yang_baxter"]
    assert report["ok"]


@pytest.mark.parametrize("m", [1, 2])
def test_baxter_locality_n4(m):
    report = baxter_report(m, 4)
    assert report["checks"]["locality"]
    assert report["ok"]
    assert verify_baxter_relations(m, 4)
