import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import PolyField, rank_generic, rank_prime
from toricgraph.field import FieldSpec
from toricgraph.linalg import rank, row_reduce


def test_identity_and_zero():
    f = FieldSpec(3)
    assert rank(np.eye(4, dtype=np.int64), f) == 4
    assert rank(np.zeros((3, 5), dtype=np.int64), f) == 0


def test_rref_shape():
    f = FieldSpec(5)
    m = np.array([[1, 2, 3], [2, 4, 1], [3, 1, 4]])
    r, piv = row_reduce(m, f)
    assert r.shape[0] == len(piv) == rank(m, f)
    for i, c in enumerate(piv):
        assert r[i, c] == 1
        assert np.count_nonzero(r[:, c]) == 1


@settings(max_examples=50, deadline=None)
@given(st.sampled_from([3, 5, 7]), st.integers(1, 7), st.integers(1, 7), st.data())
def test_rank_matches_sympy_prime(p, nr, nc, data):
    rows = data.draw(st.lists(st.lists(st.integers(0, p - 1), min_size=nc, max_size=nc), min_size=nr, max_size=nr))
    assert rank(np.array(rows), FieldSpec(p)) == rank_prime(rows, p)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([(2, 2), (2, 3), (3, 2)]), st.integers(1, 6), st.integers(1, 6), st.data())
def test_rank_matches_elimination_extension(pm, nr, nc, data):
    f = FieldSpec(*pm)
    rows = data.draw(st.lists(st.lists(st.integers(0, f.q - 1), min_size=nc, max_size=nc), min_size=nr, max_size=nr))
    assert rank(np.array(rows), f) == rank_generic(rows, PolyField(f.p, f.m, f.modulus))


@pytest.mark.parametrize("p", [3, 5])
def test_rank_invariant_under_transpose(p):
    rng = np.random.default_rng(7)
    m = rng.integers(0, p, size=(6, 9))
    m[3] = (m[0] + m[1]) % p
    f = FieldSpec(p)
    assert rank(m, f) == rank(m.T, f) == rank_prime(m.tolist(), p)
