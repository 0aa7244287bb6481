"""Words over the alphabet {1, ..., m} and their evaluation on matrix tuples.

A word is a tuple of 1-based letters; the empty tuple is the empty word.
"""

from __future__ import annotations

import numpy as np

from . import linalg
from .errors import DimensionError
from .tuples import MatTuple

Word = tuple


def word_key(w: Word) -> tuple:
    """Sort key for the graded-lex order: shorter first, then letter by letter."""
    return (len(w), tuple(w))


def word_cmp(w1: Word, w2: Word) -> int:
    """-1, 0 or 1 as ``w1`` precedes, equals or follows ``w2`` in graded-lex order."""
    k1, k2 = word_key(w1), word_key(w2)
    return (k1 > k2) - (k1 < k2)


def check_word(w: Word, m: int):
    for letter in w:
        if not 1 <= letter <= m:
            raise DimensionError(f"letter {letter} outside the alphabet 1..{m}")


def eval_word(X: MatTuple, w: Word) -> np.ndarray:
    """X_w = X_{i_1} X_{i_2} ... X_{i_k}; the identity for the empty word."""
    check_word(w, X.m)
    return linalg.matprod(X.field, (X[i - 1] for i in w), X.n)


def format_word(w: Word) -> str:
    if not w:
        return "ε"
    sep = "" if all(i < 10 for i in w) else ","
    return sep.join(str(i) for i in w)
