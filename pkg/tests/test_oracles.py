"""Sanity checks for the reference oracles themselves."""

import random
from fractions import Fraction

import pytest

from oracles import (
    make_equivalent_pair,
    mat_inv,
    mat_mul,
    naive_charpoly,
    naive_det,
    random_sl,
    word_sweep,
)


def test_naive_det_small_cases():
    assert naive_det([[1, 0], [0, 1]]) == 1
    assert naive_det([[1, 2], [3, 4]]) == -2
    assert naive_det([[2, 0, 0], [0, 3, 0], [0, 0, Fraction(1, 6)]]) == 1
    assert naive_det([[1, 2], [3, 4]], p=7) == 5


def test_naive_det_cap():
    with pytest.raises(AssertionError):
        naive_det([[0] * 7 for _ in range(7)])


def test_naive_charpoly_diagonal():
    # det(Id + t diag(2, 3)) = 1 + 5t + 6t^2
    assert naive_charpoly([[2, 0], [0, 3]]) == (1, 5, 6)
    assert naive_charpoly([[2, 0], [0, 3]], p=5) == (1, 0, 1)


def test_naive_charpoly_matches_trace_and_det():
    rng = random.Random(3)
    for _ in range(20):
        M = [[rng.randint(-4, 4) for _ in range(3)] for _ in range(3)]
        c = naive_charpoly(M)
        assert c[1] == sum(M[i][i] for i in range(3))
        assert c[3] == naive_det(M)


def test_word_sweep_trivial():
    E11 = [[1, 0], [0, 0]]
    Z = [[0, 0], [0, 0]]
    assert word_sweep([E11], [E11], 4) is None
    assert word_sweep([E11], [Z], 4) == (1, (1,))


def test_word_sweep_guard():
    with pytest.raises(AssertionError):
        word_sweep([[[1]]] * 10, [[[1]]] * 10, 8)


def test_random_sl_det_one_and_varied():
    assert random_sl(3, steps=0) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    seen = set()
    for s in range(30):
        g = random_sl(3, seed=s)
        assert naive_det(g) == 1
        assert naive_det(random_sl(3, seed=s, p=7), p=7) == 1
        seen.add(str(g))
    assert len(seen) >= 28


def test_mat_inv_roundtrip():
    g = [[2, 1], [1, 1]]
    assert mat_mul(g, mat_inv(g)) == [[1, 0], [0, 1]]
    assert mat_mul(g, mat_inv(g, 7), 7) == [[1, 0], [0, 1]]


@pytest.mark.parametrize("kind", ["conjugate", "semisimple", "left_right"])
def test_equivalent_pairs_share_invariants(kind):
    for seed in range(5):
        A, B = make_equivalent_pair(kind, 3, 2, seed=seed, p=101)
        if kind == "left_right":
            for Ai, Bi in zip(A, B):
                assert naive_det(Ai, 101) == naive_det(Bi, 101)
        else:
            assert word_sweep(A, B, 3, p=101) is None
