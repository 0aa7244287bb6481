"""Null-cone membership for the left-right action, with certificates.

A tuple X lies outside the null cone iff f_T(X) != 0 for some T of any size
d >= n-1. Such a T is a certificate that anyone can check. We look for one
by random sampling: when X is outside, f_T(X) is a nonzero polynomial of
degree dn in the entries of T, so drawing those entries from a set of 2dn
values hits a nonzero value with probability at least 1/2 (Schwartz-Zippel).
An "inside" answer is therefore probabilistic, with error at most 2^-trials.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import FieldTooSmallError
from .field import Field
from .invariants import eval_fT
from .tuples import MatTuple
from .witness import LinDet

DEFAULT_TRIALS = 40


class NullConeVerdict(enum.Enum):
    OUTSIDE = "outside"
    PROBABLY_INSIDE = "probably-inside"


@dataclass
class NullConeReport:
    verdict: NullConeVerdict
    d: int
    seed: int
    trials: int
    trials_used: int
    certificate: LinDet | None = None
    value: object = None
    failure_bound: Fraction | None = None
    source: str = ""

    @property
    def outside(self) -> bool:
        return self.verdict is NullConeVerdict.OUTSIDE

    def to_json(self) -> dict:
        F = self.certificate.field if self.certificate else None
        return {
            "verdict": self.verdict.value,
            "d": self.d,
            "seed": self.seed,
            "trials": self.trials,
            "trials_used": self.trials_used,
            "certificate": self.certificate.to_json() if self.certificate else None,
            "value": F.format_scalar(self.value) if F is not None else None,
            "failure_bound": str(self.failure_bound) if self.failure_bound is not None else None,
            "source": self.source,
        }


def default_d(n: int) -> int:
    return max(n - 1, 1)


def sample_size(d: int, n: int) -> int:
    """Size of the sampling set that makes each trial succeed with probability >= 1/2."""
    return 2 * d * n


def check_field_size(F: Field, d: int, n: int, min_field_size: int | None = None):
    need = sample_size(d, n) if min_field_size is None else min_field_size
    if F.p is not None and F.p < need:
        raise FieldTooSmallError(
            f"field too small for randomized certification: {F} has fewer than {need} elements (d={d}, n={n})"
        )


def _rng(seed, tag: str) -> random.Random:
    return random.Random(f"{seed}:{tag}")


def _random_T(F: Field, d: int, m: int, n: int, rng: random.Random) -> MatTuple:
    if F.p is None:
        half = d * n
        draw = lambda: rng.randrange(-half, half)  # noqa: E731
    else:
        draw = lambda: rng.randrange(F.p)  # noqa: E731
    mats = [F.array([[draw() for _ in range(d)] for _ in range(d)]) for _ in range(m)]
    return MatTuple(F, d, tuple(mats))


def _quick_candidates(F: Field, d: int, m: int):
    """Cheap deterministic tries: each X_i alone, then X_1 + ... + X_m."""
    ident, zero = F.eye(d), F.zeros((d, d))
    for i in range(m):
        yield f"single:{i + 1}", MatTuple(F, d, tuple(ident if k == i else zero for k in range(m)))
    if m > 1:
        yield "sum", MatTuple(F, d, tuple(ident for _ in range(m)))


def nullcone_test(
    X: MatTuple,
    d: int | None = None,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    min_field_size: int | None = None,
    quick: bool = True,
    tag: str = "",
) -> NullConeReport:
    """Look for T in Mat_{d,d}^m with f_T(X) != 0.

    Returns OUTSIDE with a re-verified LinDet certificate, or PROBABLY_INSIDE
    after ``trials`` failed random draws. ``tag`` separates random streams
    that share a seed.
    """
    F, n, m = X.field, X.n, X.m
    if d is None:
        d = default_d(n)
    if d < 1 or d < n - 1:
        raise ValueError(f"need d >= max(1, n-1) = {default_d(n)}, got d={d}")
    if trials < 0:
        raise ValueError("trials must be non-negative")
    check_field_size(F, d, n, min_field_size)

    def outside(T, used, source):
        cert = LinDet(F, n, m, T=T)
        value = cert.evaluate(X)
        if value == 0:
            raise AssertionError("certificate failed re-verification")
        return NullConeReport(NullConeVerdict.OUTSIDE, d, seed, trials, used, cert, value, source=source)

    if quick and m:
        for source, T in _quick_candidates(F, d, m):
            if eval_fT(T, X) != 0:
                return outside(T, 0, source)

    rng = _rng(seed, f"nullcone:{tag}:{d}")
    for t in range(trials):
        T = _random_T(F, d, m, n, rng)
        if m and eval_fT(T, X) != 0:
            return outside(T, t + 1, f"random:{t}")
    return NullConeReport(
        NullConeVerdict.PROBABLY_INSIDE,
        d,
        seed,
        trials,
        trials,
        failure_bound=Fraction(1, 2**trials),
        source="exhausted",
    )
