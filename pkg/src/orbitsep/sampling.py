"""Random matrices and tuples for property runs.

All functions accept either an integer seed or a ``random.Random``.
"""

from __future__ import annotations

import random

import numpy as np

from . import linalg
from .field import Field
from .tuples import MatTuple


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_scalar(F: Field, rng, bound: int = 3):
    """Uniform in GF(p), or an integer in [-bound, bound] over Q."""
    if F.p is None:
        return rng.randint(-bound, bound)
    return rng.randrange(F.p)


def random_nonzero(F: Field, rng, bound: int = 3):
    while True:
        x = random_scalar(F, rng, bound)
        if x != 0:
            return x


def random_matrix(F: Field, rows: int, cols: int | None = None, seed=None, bound: int = 3) -> np.ndarray:
    rng = _rng(seed)
    cols = rows if cols is None else cols
    return F.array([[random_scalar(F, rng, bound) for _ in range(cols)] for _ in range(rows)])


def random_tuple(F: Field, n: int, m: int, seed=None, bound: int = 3) -> MatTuple:
    rng = _rng(seed)
    return MatTuple(F, n, tuple(random_matrix(F, n, n, rng, bound) for _ in range(m)))


def random_invertible(F: Field, n: int, seed=None, bound: int = 3) -> np.ndarray:
    rng = _rng(seed)
    while True:
        g = random_matrix(F, n, n, rng, bound)
        if linalg.det(F, g) != 0:
            return g


def random_sl(F: Field, n: int, steps: int | None = None, seed=None, bound: int = 2) -> np.ndarray:
    """A product of ``steps`` random transvections Id + c E_{i,j} (i != j); det is exactly 1."""
    rng = _rng(seed)
    if steps is None:
        steps = 3 * n
    g = F.eye(n)
    if n < 2:
        return g
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        c = random_nonzero(F, rng, bound)
        # row operation: row i += c * row j
        g[i] = F.reduce(g[i] + F(c) * g[j])
    return g


def random_transvection_pair(F: Field, n: int, steps: int | None = None, seed=None, bound: int = 2):
    """(g, g^-1) for a random product of transvections, inverse built without elimination."""
    rng = _rng(seed)
    if steps is None:
        steps = 3 * n
    g, g_inv = F.eye(n), F.eye(n)
    if n < 2:
        return g, g_inv
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        c = F(random_nonzero(F, rng, bound))
        g[i] = F.reduce(g[i] + c * g[j])
        # (E g)^-1 = g^-1 E^-1; E^-1 = Id - c E_{i,j} acts on columns: col j -= c * col i
        g_inv[:, j] = F.reduce(g_inv[:, j] - c * g_inv[:, i])
    return g, g_inv
