import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from ainf_elliptic import linalg
from ainf_elliptic.linalg import SparseMatrix


def dense_to_sparse(M):
    M = np.asarray(M)
    return SparseMatrix.from_dict(M.shape[0], M.shape[1],
                                  {(i, j): int(M[i, j]) for i in range(M.shape[0]) for j in range(M.shape[1])})


small_int_matrices = st.integers(1, 9).flatmap(
    lambda r: st.integers(1, 9).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)))


def test_trivial_ranks():
    assert linalg.rank(SparseMatrix(0, 0)) == 0
    assert linalg.rank(SparseMatrix(5, 3)) == 0
    assert linalg.rank(dense_to_sparse(np.eye(7, dtype=int))) == 7


def test_primes_in_range():
    ps = linalg.random_primes(4, seed=3)
    assert len(set(ps)) == 4
    for p in ps:
        assert 2**31 <= p < 2**32
        assert sympy.isprime(p)
    assert ps == linalg.random_primes(4, seed=3)


@settings(max_examples=60, deadline=None)
@given(small_int_matrices)
def test_rank_matches_sympy(rows):
    A = dense_to_sparse(rows)
    want = sympy.Matrix(rows).rank()
    assert linalg.rank_exact(A) == want
    assert linalg.rank(A, "modular", seed=1) == want
    assert linalg.rank_mod_p(A, linalg.random_primes(1, 0)[0], "python") == want


@pytest.mark.skipif(linalg._compiled is None, reason="compiled kernel not built")
@settings(max_examples=60, deadline=None)
@given(small_int_matrices)
def test_backends_agree(rows):
    A = dense_to_sparse(rows)
    p = linalg.random_primes(1, 7)[0]
    assert linalg.rank_mod_p(A, p, "python") == linalg.rank_mod_p(A, p, "compiled")


def test_rank_mod_small_prime_drops():
    # det = 6, so the rank falls modulo 2 and 3 but not over Q
    A = dense_to_sparse([[2, 0], [0, 3]])
    assert linalg.rank_mod_p(A, 2, "python") == 1
    assert linalg.rank_mod_p(A, 3, "python") == 1
    assert linalg.rank_exact(A) == 2


def test_disagreement_escalates_to_exact(monkeypatch):
    A = dense_to_sparse([[1, 1], [1, -1]])
    calls = iter([2, 1, 2, 2, 2])
    monkeypatch.setattr(linalg, "rank_mod_p", lambda *a, **k: next(calls))
    res = linalg.certified_rank(A)
    assert res.exact and res.rank == 2


def test_exact_below_modular_is_an_error(monkeypatch):
    A = dense_to_sparse([[1, 0], [0, 0]])
    calls = iter([2, 1, 2, 2, 2])
    monkeypatch.setattr(linalg, "rank_mod_p", lambda *a, **k: next(calls))
    with pytest.raises(linalg.RankDisagreementError):
        linalg.certified_rank(A)


def test_bad_mode():
    with pytest.raises(ValueError):
        linalg.certified_rank(SparseMatrix(1, 1, ((0, 0, 1),)), mode="float")


def test_matmul_and_transpose():
    A = dense_to_sparse([[1, 2], [0, 1], [3, 0]])
    B = dense_to_sparse([[1, 0, 1], [0, 1, 0]])
    assert np.array_equal(A.matmul(B).to_dense(), A.to_dense() @ B.to_dense())
    assert np.array_equal(A.transpose().to_dense(), A.to_dense().T)
    assert A.hstack({0: 5}).to_dense()[:, 2].tolist() == [5, 0, 0]
