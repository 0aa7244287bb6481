import random
from fractions import Fraction

import pytest

from conftest import GF101, from_lists, tup
from orbitsep import QQ, Field, MatTuple, NullConeVerdict, eval_fT, nullcone_test
from orbitsep.errors import FieldTooSmallError
from orbitsep.sampling import random_tuple
from test_invariants import SKEW


def test_zero_tuple_probably_inside():
    Z = MatTuple.of(QQ, [QQ.zeros((3, 3))] * 2)
    rep = nullcone_test(Z, trials=12)
    assert rep.verdict is NullConeVerdict.PROBABLY_INSIDE
    assert rep.certificate is None
    assert rep.failure_bound == Fraction(1, 2**12)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_identity_outside(n):
    rep = nullcone_test(MatTuple.of(QQ, [QQ.eye(n)]))
    assert rep.outside
    assert rep.value == eval_fT(rep.certificate.T, MatTuple.of(QQ, [QQ.eye(n)])) != 0


def test_skew_tuple_needs_d2():
    S = from_lists(QQ, SKEW)
    rep = nullcone_test(S, d=2, trials=40, seed=0)
    assert rep.outside and rep.d == 2
    assert rep.certificate(S) == rep.value != 0
    # no quick candidate works: every single span element is singular
    assert rep.source.startswith("random")
    assert nullcone_test(S, d=2, quick=False).outside


def test_nilpotent_pair_inside():
    # (E12, E12) is in the null cone: scale rows and columns apart
    N = tup(GF101, [[0, 1], [0, 0]], [[0, 2], [0, 0]])
    assert not nullcone_test(N, d=2, trials=20).outside


def test_determinism_and_tags():
    X = random_tuple(GF101, 3, 2, seed=4)
    a = nullcone_test(X, quick=False, seed=3)
    b = nullcone_test(X, quick=False, seed=3)
    assert a.to_json() == b.to_json()


def test_field_size_guard():
    X = MatTuple.of(Field(5), [Field(5).eye(3)])
    with pytest.raises(FieldTooSmallError):
        nullcone_test(X, d=2)
    assert nullcone_test(X, d=2, min_field_size=5).outside


def test_d_validation():
    X = MatTuple.of(QQ, [QQ.eye(3)])
    with pytest.raises(ValueError):
        nullcone_test(X, d=1)
    with pytest.raises(ValueError):
        nullcone_test(X, trials=-1)


def test_random_certificates_sound():
    rng = random.Random(0)
    for _ in range(20):
        X = random_tuple(GF101, 3, 2, rng)
        rep = nullcone_test(X, quick=False, seed=rng.randrange(100))
        if rep.outside:
            assert eval_fT(rep.certificate.T, X) == rep.value != 0
