from fractions import Fraction

import pytest

from qexterior.algebra import DiagonalAutomorphism, nakayama
from qexterior.bar import (MAX_BAR_DEGREE, DegreeTooLargeError, bar_chain_matrix, bar_cochain_matrix,
                           bar_cohomology_dims, bar_homology_dims, word_index, words)
from qexterior.algebra import X, Y, YX
from qexterior.cochains import cohomology_dims, homology_transfer
from qexterior.fields import FieldDescriptor, make_field
from qexterior.linalg import kernel_dim, multiply_matrices, rank

K = make_field(0)
F2 = make_field(2)
Q2 = make_field(FieldDescriptor(0, Fraction(2)))
ID = DiagonalAutomorphism.identity()


def aut(a, b, field=K):
    return DiagonalAutomorphism.parse(a, b, field)


def test_words():
    assert len(words(3)) == 27
    assert words(1) == ((X,), (Y,), (YX,))
    assert word_index((Y, X)) == 3
    assert words(0) == ((),)


def test_shapes():
    m = bar_cochain_matrix(ID, 2, K)
    assert (m.rows, m.cols) == (108, 36)
    c = bar_chain_matrix(ID, 3, K)
    assert (c.rows, c.cols) == (36, 108)


def test_degree_zero_kernels():
    assert kernel_dim(bar_cochain_matrix(ID, 0, K)) == 2
    assert kernel_dim(bar_cochain_matrix(aut("-q^1", "-q^-1"), 0, K)) == 3


def test_cohomology_examples():
    assert bar_cohomology_dims(ID, 4, K).hh == [2, 2, 1, 0, 0]
    assert bar_cohomology_dims(aut("2", "3"), 4, K).hh[1:] == [0] * 4
    assert bar_cohomology_dims(aut("q^1", "q^-1"), 4, K).hh[1:] == [2] * 4


def test_homology_examples():
    assert bar_homology_dims(ID, 4, K).hh_homology[1:] == [2] * 4
    assert bar_homology_dims(ID, 4, F2).hh_homology[1:] == [4] * 4
    rep = bar_homology_dims(ID, 1, K)
    assert rep.automorphism == nakayama().inverse() and rep.homology_coefficient == ID


@pytest.mark.parametrize("field", [K, F2, Q2], ids=str)
@pytest.mark.parametrize("text", [("q^0", "q^0"), ("q^-1", "q^1"), ("generic", "-q^-1"), ("q^1", "generic")])
def test_complex_property(field, text):
    psi = aut(*text, field)
    theta = homology_transfer(psi)
    for n in range(4):
        assert multiply_matrices(bar_cochain_matrix(psi, n + 1, field), bar_cochain_matrix(psi, n, field)).is_zero()
    for n in range(1, 5):
        assert multiply_matrices(bar_chain_matrix(theta, n, field), bar_chain_matrix(theta, n + 1, field)).is_zero()


@pytest.mark.parametrize("field", [K, F2, Q2], ids=str)
def test_oracle_agrees_with_complex_and_duality(field):
    for text in [("q^0", "q^0"), ("-q^1", "-q^-1"), ("q^-2", "q^0"), ("generic", "q^2"), ("q^1", "q^1")]:
        psi = aut(*text, field)
        bar = bar_cohomology_dims(psi, 4, field, with_homology=True)
        cx = cohomology_dims(psi, 4, field).hh
        assert bar.hh == cx
        assert bar.hh_homology == cx


def test_rank_methods_agree_on_bar_matrices():
    for field in (K, Q2):
        psi = aut("q^-1", "q^1", field)
        for n in range(3):
            m = bar_cochain_matrix(psi, n, field)
            assert rank(m) == rank(m, method="fraction_free")


def test_degree_limits():
    assert MAX_BAR_DEGREE == 6
    with pytest.raises(DegreeTooLargeError):
        bar_cohomology_dims(ID, 7, Q2)
    with pytest.raises(ValueError):
        bar_chain_matrix(ID, 0, K)


@pytest.mark.slow
def test_top_degree_runs_at_numeric_q():
    rep = bar_cohomology_dims(aut("q^-3", "q^3", Q2), 6, Q2, with_homology=True)
    assert rep.hh == rep.hh_homology == [1, 0, 0, 0, 0, 0, 1]
