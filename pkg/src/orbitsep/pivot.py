"""Pivot basis of the unital algebra generated by a tuple of matrices.

A word w is a pivot when C_w is not in the span of the C_u for u before w in
graded-lex order. Non-pivots stay non-pivots under left or right
multiplication, so it is enough to extend the pivots of length t-1 on the
right by every letter to find all pivots of length t. The pivots found this
way come out already sorted.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .bounds import pivot_length_bound
from .tuples import MatTuple
from .words import Word


@dataclass
class PivotStats:
    candidates: int = 0
    per_level: list = field(default_factory=list)
    max_length: int = 0
    complete: bool = False


@dataclass(frozen=True, eq=False)
class PivotBasis:
    generators: MatTuple
    words: tuple
    matrices: tuple
    stats: PivotStats

    @property
    def dim(self) -> int:
        return len(self.words)

    @property
    def pivots(self) -> list[tuple[Word, np.ndarray]]:
        return list(zip(self.words, self.matrices))

    @property
    def max_length(self) -> int:
        return max((len(w) for w in self.words), default=0)


def iter_pivots(C: MatTuple, stats: PivotStats | None = None):
    """Yield the pivots (word, C_word) of ``C`` in graded-lex order.

    Consumers may stop early; ``stats.complete`` is set once the generator
    runs to exhaustion.
    """
    F, k = C.field, C.n
    if stats is None:
        stats = PivotStats()
    bound = pivot_length_bound(k)
    echelon = linalg.Echelon(F, k * k)

    ident = F.eye(k)
    echelon.insert(ident)
    level = [((), ident)]
    yield (), ident

    t = 0
    while level:
        t += 1
        nxt = []
        examined = 0
        for w, M in level:
            for i in range(C.m):
                examined += 1
                stats.candidates += 1
                cand = linalg.matmul(F, M, C[i])
                _, independent = echelon.insert(cand)
                if not independent:
                    continue
                if t > bound:
                    raise AssertionError(
                        f"pivot word of length {t} exceeds the bound {bound} for {k}x{k} matrices"
                    )
                word = w + (i + 1,)
                nxt.append((word, cand))
                stats.max_length = t
                yield word, cand
        stats.per_level.append(examined)
        level = nxt
    stats.complete = True


def pivot_basis(C: MatTuple) -> PivotBasis:
    """Run the level-by-level pivot search to completion."""
    stats = PivotStats()
    pairs = list(iter_pivots(C, stats))
    return PivotBasis(
        generators=C,
        words=tuple(w for w, _ in pairs),
        matrices=tuple(M for _, M in pairs),
        stats=stats,
    )
