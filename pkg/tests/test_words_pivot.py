import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import GF101, tup
from oracles import naive_rank
from orbitsep import QQ, Field, MatTuple, pivot_basis
from orbitsep.bounds import pivot_length_bound
from orbitsep.errors import DimensionError
from orbitsep.pivot import PivotStats, iter_pivots
from orbitsep.sampling import random_tuple
from orbitsep.words import eval_word, format_word, word_cmp, word_key

E11 = [[1, 0], [0, 0]]
E12 = [[0, 1], [0, 0]]
E21 = [[0, 0], [1, 0]]


def test_word_order_examples():
    assert word_cmp((), (1,)) == -1
    assert word_cmp((2,), (1, 1)) == -1
    assert word_cmp((1, 2), (2, 1)) == -1
    assert word_cmp((2, 1), (2, 1)) == 0
    assert word_cmp((1, 1, 1), (2, 2)) == 1
    assert format_word(()) == "ε" and format_word((1, 2)) == "12" and format_word((1, 12)) == "1,12"


@given(st.lists(st.lists(st.integers(1, 3), max_size=4).map(tuple), min_size=1, max_size=12))
def test_word_order_is_total_and_consistent(words):
    ordered = sorted(words, key=word_key)
    for a, b in zip(ordered, ordered[1:]):
        assert word_cmp(a, b) <= 0
        assert word_cmp(b, a) >= 0


def test_eval_word():
    X = tup(QQ, E12, E21)
    assert (eval_word(X, ()) == QQ.eye(2)).all()
    assert (eval_word(X, (1, 2)) == QQ.array(E11)).all()
    with pytest.raises(DimensionError):
        eval_word(X, (3,))


def test_pivot_examples():
    assert pivot_basis(tup(QQ, E12, E21)).words == ((), (1,), (2,), (1, 2))
    assert pivot_basis(tup(QQ, E12)).words == ((), (1,))
    assert pivot_basis(tup(QQ, [[1]])).words == ((),)
    assert pivot_basis(MatTuple(QQ, 3, ())).words == ((),)


def test_pivot_full_algebra():
    # a cyclic shift and a diagonal generate all of Mat_3
    F = GF101
    pb = pivot_basis(tup(F, [[0, 1, 0], [0, 0, 1], [1, 0, 0]], [[1, 0, 0], [0, 2, 0], [0, 0, 3]]))
    assert pb.dim == 9
    assert pb.stats.complete


def _span_dim(F, X, maxlen):
    rows = []
    for t in range(maxlen + 1):
        for w in itertools.product(range(1, X.m + 1), repeat=t):
            rows.append([F.scalar(x) for x in eval_word(X, w).ravel()])
    return naive_rank(rows, F.p)


@pytest.mark.parametrize("F", [QQ, Field(2), GF101], ids=str)
def test_pivot_dim_matches_word_span(F):
    rng = random.Random(2)
    for _ in range(6):
        n, m = rng.choice([(2, 2), (3, 1), (3, 2)])
        X = random_tuple(F, n, m, rng, bound=1)
        pb = pivot_basis(X)
        assert pb.dim == _span_dim(F, X, 2 * n)
        assert pb.max_length <= pivot_length_bound(n)
        assert list(pb.words) == sorted(pb.words, key=word_key)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_pivots_prefix_closed(seed):
    # every prefix of a pivot word is a pivot
    X = random_tuple(Field(3), 3, 2, seed)
    words = set(pivot_basis(X).words)
    assert all(w[:k] in words for w in words for k in range(len(w)))


def test_lazy_iteration_matches_full():
    X = random_tuple(QQ, 3, 2, seed=9)
    full = pivot_basis(X).words
    stats = PivotStats()
    it = iter_pivots(X, stats)
    first = [next(it)[0] for _ in range(4)]
    assert tuple(first) == full[:4]
    assert not stats.complete
