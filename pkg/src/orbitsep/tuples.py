"""Tuples of square matrices and the group actions on them."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import DimensionError, FieldMismatchError
from .field import Field


@dataclass(frozen=True, eq=False)
class MatTuple:
    """An m-tuple of n x n matrices over one field.

    ``n`` is stored explicitly so that the empty tuple (m = 0) still knows
    its matrix size.
    """

    field: Field
    n: int
    mats: tuple

    def __post_init__(self):
        mats = []
        for M in self.mats:
            A = M if isinstance(M, np.ndarray) and M.dtype == self.field.dtype else self.field.array(M)
            if A.shape != (self.n, self.n):
                raise DimensionError(f"expected {self.n}x{self.n} matrices, got shape {A.shape}")
            A = A.copy()
            A.flags.writeable = False
            mats.append(A)
        object.__setattr__(self, "mats", tuple(mats))

    @classmethod
    def of(cls, field: Field, mats, n: int | None = None) -> MatTuple:
        """Build from nested lists / arrays; ``n`` is required only when ``mats`` is empty."""
        mats = [field.array(M) if not isinstance(M, np.ndarray) else M for M in mats]
        if n is None:
            if not mats:
                raise DimensionError("matrix size of an empty tuple must be given")
            n = mats[0].shape[0]
        return cls(field, n, tuple(mats))

    @property
    def m(self) -> int:
        return len(self.mats)

    def __len__(self):
        return len(self.mats)

    def __getitem__(self, i):
        return self.mats[i]

    def __iter__(self):
        return iter(self.mats)

    def __eq__(self, other):
        if not isinstance(other, MatTuple):
            return NotImplemented
        return (
            self.field == other.field
            and self.n == other.n
            and self.m == other.m
            and all(linalg.equal(a, b) for a, b in zip(self.mats, other.mats))
        )

    __hash__ = None

    def __repr__(self):
        return f"MatTuple({self.field}, n={self.n}, m={self.m})"

    def with_mats(self, mats) -> MatTuple:
        mats = list(mats)
        n = mats[0].shape[0] if mats else self.n
        return MatTuple(self.field, n, tuple(mats))

    def scaled(self, lam) -> MatTuple:
        return self.with_mats(linalg.scale(self.field, lam, M) for M in self.mats)

    def to_lists(self) -> list:
        return [self.field.to_lists(M) for M in self.mats]


def check_compatible(A: MatTuple, B: MatTuple, same_m: bool = True):
    if A.field != B.field:
        raise FieldMismatchError(f"tuples live over different fields: {A.field} vs {B.field}")
    if A.n != B.n:
        raise DimensionError(f"matrix sizes differ: {A.n} vs {B.n}")
    if same_m and A.m != B.m:
        raise DimensionError(f"tuple lengths differ: {A.m} vs {B.m}")


def conjugate(X: MatTuple, g: np.ndarray, g_inv: np.ndarray | None = None) -> MatTuple:
    """Simultaneous conjugation (g X_1 g^-1, ..., g X_m g^-1)."""
    F = X.field
    if g_inv is None:
        g_inv = linalg.inverse(F, g)
    return X.with_mats(linalg.matmul(F, linalg.matmul(F, g, M), g_inv) for M in X)


def left_right(X: MatTuple, P: np.ndarray, Q: np.ndarray, Q_inv: np.ndarray | None = None) -> MatTuple:
    """Left-right action (P X_1 Q^-1, ..., P X_m Q^-1)."""
    F = X.field
    if Q_inv is None:
        Q_inv = linalg.inverse(F, Q)
    return X.with_mats(linalg.matmul(F, linalg.matmul(F, P, M), Q_inv) for M in X)


def direct_sum(A: MatTuple, B: MatTuple) -> MatTuple:
    """The tuple of block-diagonal matrices diag(A_i, B_i)."""
    check_compatible(A, B)
    F = A.field
    return MatTuple(F, A.n + B.n, tuple(linalg.block_diag(F, a, b) for a, b in zip(A, B)))
