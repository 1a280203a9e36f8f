import pytest

from cyclohecke.scalars import Field
from cyclohecke.seminormal import (
    branching_is_consistent,
    build_representation,
    jm_matrix,
    representation_to_jsonable,
    restriction_blocks,
    verify_defining_relations,
)
from cyclohecke.tableaux import enumerate_mpartitions

from conftest import field


def test_single_row_sigma_is_q():
    rep = build_representation(((2,),), field(1))
    assert rep.sigma_matrices[0][0][0] == field(1).q


def test_single_column_sigma_is_minus_q_inverse():
    rep = build_representation(((1, 1),), field(1))
    assert rep.sigma_matrices[0][0][0] == -field(1).q_inv


def test_two_component_block_matches_rank_two_form():
    f = field(2)
    rep = build_representation(((1,), (1,)), f)
    a, b = f.v(1), f.v(2)
    c = f.q - f.q_inv
    sig = rep.sigma_matrices[0]
    # diagonal agrees with the diagonal-basis rank-two matrices
    assert sig[0][0] == c * b / (b - a)
    assert sig[1][1] == -c * a / (b - a)
    # off-diagonal product is basis-independent
    assert sig[0][1] * sig[1][0] == f.one - (c * c * a * b) / ((b - a) * (b - a))


def test_tau_matrix_is_diagonal_of_first_contents():
    f = field(2)
    for shape in enumerate_mpartitions(2, 3):
        rep = build_representation(shape, f)
        for i, t in enumerate(rep.basis):
            for j in range(rep.dimension):
                want = t.content(1, f) if i == j else f.zero
                assert rep.tau_matrix[i][j] == want


def test_jm_matrix_examples():
    f1 = field(1)
    rep = build_representation(((2,),), f1)
    assert jm_matrix(rep, 1) == rep.tau_matrix
    assert jm_matrix(rep, 2)[0][0] == f1.monomial(1, q=2, v1=1)
    f2 = field(2)
    rep = build_representation(((1,), (1,)), f2)
    j2 = jm_matrix(rep, 2)
    assert j2[0][0] == f2.v(2) and j2[1][1] == f2.v(1)
    assert j2[0][1].is_zero() and j2[1][0].is_zero()
    with pytest.raises(IndexError):
        jm_matrix(rep, 3)


@pytest.mark.parametrize("m,n", [(1, 2), (1, 3), (2, 2), (2, 3), (3, 2)])
def test_defining_relations_hold(m, n):
    f = field(m)
    for shape in enumerate_mpartitions(m, n):
        assert verify_defining_relations(build_representation(shape, f))


def test_defining_relations_n1_cyclotomic_only():
    assert verify_defining_relations(build_representation(((1,),), field(1)))


def test_corrupted_matrix_fails_relations():
    rep = build_representation(((2, 1),), field(1))
    rep.sigma_matrices[0][0][0] = rep.sigma_matrices[0][0][0] + field(1).one
    rep._sigma_cols[0][0] = tuple(
        (r, rep.sigma_matrices[0][r][0])
        for r in range(rep.dimension)
        if not rep.sigma_matrices[0][r][0].is_zero()
    )
    assert not verify_defining_relations(rep)


@pytest.mark.parametrize("m,n", [(2, 3), (1, 4), (3, 2)])
def test_jm_matrices_diagonal_with_contents(m, n):
    f = field(m)
    for shape in enumerate_mpartitions(m, n):
        rep = build_representation(shape, f)
        for i in range(1, n + 1):
            jm = jm_matrix(rep, i)
            for a, t in enumerate(rep.basis):
                for b in range(rep.dimension):
                    want = t.content(i, f) if a == b else f.zero
                    assert jm[a][b] == want


def test_jm_matrices_commute():
    f = field(2)
    for shape in enumerate_mpartitions(2, 3):
        rep = build_representation(shape, f)
        mats = [jm_matrix(rep, i) for i in range(1, 4)]
        d = rep.dimension
        for x in mats:
            for y in mats:
                for r in range(d):
                    for c in range(d):
                        lhs = sum((x[r][k] * y[k][c] for k in range(d)), f.zero)
                        rhs = sum((y[r][k] * x[k][c] for k in range(d)), f.zero)
                        assert lhs == rhs


def test_nonstandard_swap_acts_by_unit_scalar():
    # whenever content(t, i+1) = q^{+-2} content(t, i) and the swap is not
    # standard, the sigma_i column at t is +-q^{+-1} times t
    for m, n in [(1, 3), (2, 3)]:
        f = field(m)
        for shape in enumerate_mpartitions(m, n):
            rep = build_representation(shape, f)
            for col, t in enumerate(rep.basis):
                for i in range(1, n):
                    if t.swap_adjacent(i) is not None:
                        continue
                    k1, z1 = t.content_pair(i)
                    k2, z2 = t.content_pair(i + 1)
                    assert k1 == k2 and abs(z2 - z1) == 1
                    entry = rep.sigma_matrices[i - 1][col][col]
                    assert entry in (f.q, -f.q_inv)


def test_standard_swap_off_diagonal_coefficient():
    # the intertwiner scale is pinned by the explicit off-diagonal formula
    for m, n in [(2, 2), (1, 3)]:
        f = field(m)
        q, qi = f.q, f.q_inv
        for shape in enumerate_mpartitions(m, n):
            rep = build_representation(shape, f)
            for col, t in enumerate(rep.basis):
                for i in range(1, n):
                    s = t.swap_adjacent(i)
                    if s is None:
                        continue
                    ci, ci1 = t.content(i, f), t.content(i + 1, f)
                    row = rep.index[s]
                    assert rep.sigma_matrices[i - 1][row][col] == \
                        (q * ci1 - qi * ci) / (ci1 - ci)


def test_restriction_block_examples():
    f1, f2 = field(1), field(2)
    rep = build_representation(((2,),), f1)
    blocks = restriction_blocks(rep)
    assert len(blocks) == 1
    assert rep.basis[blocks[0][1][0]].remove_top().shape == ((1,),)

    rep = build_representation(((1,), (1,)), f2)
    blocks = restriction_blocks(rep)
    assert [len(ix) for _, ix in blocks] == [1, 1]
    assert [rep.basis[ix[0]].remove_top().shape for _, ix in blocks] == \
        [((1,), ()), ((), (1,))]

    rep = build_representation(((2, 1),), f1)
    blocks = restriction_blocks(rep)
    assert [rep.basis[ix[0]].remove_top().shape for _, ix in blocks] == \
        [((2,),), ((1, 1),)]


@pytest.mark.parametrize("m,n", [(1, 3), (1, 4), (2, 3), (3, 2)])
def test_branching_consistency(m, n):
    f = field(m)
    for shape in enumerate_mpartitions(m, n):
        assert branching_is_consistent(build_representation(shape, f))


def test_jsonable_representation():
    rep = build_representation(((1,), (1,)), field(2))
    payload = representation_to_jsonable(rep)
    assert payload["shape"] == [[1], [1]]
    assert payload["dimension"] == 2
    assert payload["tau"][0][0] == "v1"
    assert len(payload["sigma"]) == 1
