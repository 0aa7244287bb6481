"""Orbit closure separation for simultaneous conjugation.

Put A and B side by side as C_i = diag(A_i, B_i) and walk the pivot basis
of the algebra generated by the C_i. Each pivot matrix is diag(A_w, B_w);
the closures meet exactly when every pivot has equal characteristic
polynomials in the two blocks. In characteristic 0 or p > n comparing traces
is already enough. The first pivot that fails, in graded-lex order, gives
the reported witness.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from . import linalg
from .errors import OrbitSepError
from .pivot import PivotStats, iter_pivots
from .tuples import MatTuple, check_compatible, direct_sum
from .witness import SigmaWord, TraceWord, Witness


class Verdict(enum.Enum):
    EQUIVALENT = "equivalent"
    SEPARATED = "separated"


@dataclass
class SeparationResult:
    verdict: Verdict
    witness: Witness | None = None
    values: tuple | None = None
    stats: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    @property
    def separated(self) -> bool:
        return self.verdict is Verdict.SEPARATED

    def __post_init__(self):
        if (self.verdict is Verdict.SEPARATED) != (self.witness is not None):
            raise ValueError("a witness must be present exactly when the verdict is SEPARATED")


class UnsoundWitnessError(OrbitSepError, AssertionError):
    """A produced witness failed to separate the pair it was produced for."""


def verified(W: Witness, A: MatTuple, B: MatTuple) -> tuple:
    """Evaluate ``W`` on both tuples and insist the values differ."""
    a, b = W.evaluate(A), W.evaluate(B)
    if a == b:
        raise UnsoundWitnessError(f"witness {W} takes the same value {a} on both inputs")
    return a, b


def trace_path_valid(A: MatTuple) -> bool:
    """Traces of pivot words suffice in characteristic 0 and in characteristic p > n."""
    ch = A.field.characteristic
    return ch == 0 or ch > A.n


def separate_conj(A: MatTuple, B: MatTuple, force_charpoly: bool = False) -> SeparationResult:
    """Decide whether the GL_n-orbit closures of A and B meet.

    Returns SEPARATED with a TraceWord or SigmaWord witness, or EQUIVALENT.
    With ``force_charpoly`` the characteristic-polynomial comparison is used
    even where traces would do.
    """
    check_compatible(A, B)
    F, n = A.field, A.n
    C = direct_sum(A, B)
    use_trace = trace_path_valid(A) and not force_charpoly
    stats = PivotStats()

    def summary():
        return {
            "pivots_examined": count,
            "max_pivot_length": stats.max_length,
            "candidates": stats.candidates,
            "basis_complete": stats.complete,
            "path": "trace" if use_trace else "charpoly",
        }

    count = 0
    for w, Z in iter_pivots(C, stats):
        count += 1
        X, Y = Z[:n, :n], Z[n:, n:]
        if use_trace:
            if linalg.trace(F, X) != linalg.trace(F, Y):
                W = TraceWord(F, n, A.m, word=w)
                return SeparationResult(Verdict.SEPARATED, W, verified(W, A, B), summary())
            continue
        cx, cy = linalg.charpoly(F, X), linalg.charpoly(F, Y)
        for j in range(1, n + 1):
            if cx[j] != cy[j]:
                W = SigmaWord(F, n, A.m, j=j, word=w)
                return SeparationResult(Verdict.SEPARATED, W, verified(W, A, B), summary())
    return SeparationResult(Verdict.EQUIVALENT, stats=summary())
